#include "treejac/commands.hpp"

#include <charconv>
#include <sstream>
#include <utility>

#include "report.hpp"
#include "treejac/curve_file.hpp"
#include "treejac/error.hpp"
#include "treejac/fixtures.hpp"

namespace treejac::cli {

namespace {

using report::json;

struct Loaded {
  CurveFile file;
  CurveGraph curve;
};

Loaded load(std::string_view text) {
  CurveFile file = parse_curve_file(text);
  CurveGraph curve = validate_curve(file.curve);
  return {std::move(file), std::move(curve)};
}

AdmissibleOrdering pick_ordering(const Loaded& l, const CommonOptions& common, std::string* source = nullptr) {
  const auto& requested = common.ordering ? common.ordering : l.file.ordering;
  if (source) *source = requested ? "given" : "canonical";
  if (requested) return verify_ordering(l.curve, *requested);
  return canonical_ordering(l.curve);
}

JhOptions jh_options(const Loaded& l) { return {resolve_overrides(l.curve, l.file.overrides), {}}; }

std::string join(const std::vector<std::string>& v, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string braces(const std::vector<std::string>& v) { return "{" + join(v) + "}"; }

std::string degree_line(const CurveGraph& x, const Multidegree& deg, const AdmissibleOrdering& ord) {
  std::string out;
  for (std::size_t c : ord.sequence()) {
    if (!out.empty()) out += " ";
    out += x.component(c).id + "=" + std::to_string(deg[c]);
  }
  return out;
}

CommandOutput emit(const CommonOptions& common, json doc, const std::string& table, const CurveGraph* x) {
  CommandOutput out;
  if (common.format == OutputFormat::Json) {
    if (common.dot && x) doc["dot"] = to_dot(*x);
    out.out = doc.dump(2) + "\n";
  } else {
    out.out = table;
    if (common.dot && x) out.out += to_dot(*x);
  }
  return out;
}

template <class Body>
CommandOutput guarded(Body&& body) {
  try {
    return body();
  } catch (const NotAdmissibleError& e) {
    std::string msg = std::string("error: ") + e.what() + "; violating pieces:";
    for (const auto& piece : e.violating()) msg += " " + braces(piece);
    return {exit_code(e.kind()), "", msg + "\n"};
  } catch (const Error& e) {
    return {exit_code(e.kind()), "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

std::string graded_table(const CurveGraph& x, const GradedDecomposition& g, const AdmissibleOrdering& ord) {
  std::ostringstream os;
  os << "graded degrees: " << degree_line(x, g.pieces, ord) << "\n";
  for (const Split& s : g.splits)
    os << "  cut at " << x.node(s.node).id << ": " << braces(x.ids(s.y)) << " -> " << s.degree_y << ", "
       << braces(x.ids(s.z)) << " -> " << s.degree_z << " (parent " << s.parent_degree << ")\n";
  return os.str();
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    if (item.empty()) {
      if (text.empty()) break;
      throw Error(ErrorKind::InvalidArgument, "empty entry in list '" + std::string(text) + "'");
    }
    out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(s) + "'");
  return v;
}

std::pair<std::string, std::string> split_assignment(const std::string& item) {
  auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidArgument, "expected id=value, got '" + item + "'");
  return {item.substr(0, eq), item.substr(eq + 1)};
}

}  // namespace

std::map<std::string, std::int64_t> parse_assignments(std::string_view text) {
  std::map<std::string, std::int64_t> out;
  for (const auto& item : split_list(text)) {
    auto [id, value] = split_assignment(item);
    if (!out.emplace(id, parse_int(value)).second)
      throw Error(ErrorKind::DuplicateId, "'" + id + "' assigned twice");
  }
  return out;
}

IntRange parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    std::int64_t v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.hi < r.lo) throw Error(ErrorKind::InvalidArgument, "empty range '" + std::string(text) + "'");
  return r;
}

std::map<std::string, IntRange> parse_range_assignments(std::string_view text) {
  std::map<std::string, IntRange> out;
  for (const auto& item : split_list(text)) {
    auto [id, value] = split_assignment(item);
    if (!out.emplace(id, parse_range(value)).second)
      throw Error(ErrorKind::DuplicateId, "'" + id + "' assigned twice");
  }
  return out;
}

CommandOutput cmd_validate(std::string_view curve_text, const CommonOptions& common) {
  return guarded([&] {
    Loaded l = load(curve_text);
    GlobalInvariants inv = global_invariants(l.curve);
    json doc = {{"command", "validate"},
                {"status", "ok"},
                {"components", l.curve.num_components()},
                {"nodes", l.curve.num_nodes()},
                {"genus", inv.genus},
                {"chi", inv.chi},
                {"h", inv.h}};
    std::ostringstream table;
    table << "ok: " << l.curve.num_components() << " components, " << l.curve.num_nodes()
          << " nodes, g=" << inv.genus << ", chi=" << inv.chi << ", h=" << inv.h << "\n";
    return emit(common, doc, table.str(), &l.curve);
  });
}

CommandOutput cmd_order(std::string_view curve_text, const CommonOptions& common) {
  return guarded([&] {
    Loaded l = load(curve_text);
    std::string source;
    AdmissibleOrdering ord = pick_ordering(l, common, &source);
    json doc = {{"command", "order"}, {"source", source}, {"ordering", report::ordering(l.curve, ord)}};
    std::ostringstream table;
    table << "ordering (" << source << "): " << join(sequence_ids(l.curve, ord), " ") << "\n";
    for (std::size_t i = 1; i < ord.size(); ++i) {
      const Attachment& a = ord.attachments()[i - 1];
      table << "  X_" << i << " = " << braces(l.curve.ids(a.subcurve)) << " at " << l.curve.node(a.node).id << "\n";
    }
    return emit(common, doc, table.str(), &l.curve);
  });
}

CommandOutput cmd_analyze(std::string_view curve_text, std::int64_t d, const CommonOptions& common) {
  return guarded([&] {
    Loaded l = load(curve_text);
    AdmissibleOrdering ord = pick_ordering(l, common);
    DegreeContext ctx(l.curve, d);
    TheoremReport th = classify(ctx, ord, jh_options(l));

    json doc = {{"command", "analyze"},
                {"context", report::context(ctx)},
                {"ordering", report::wall_table(ctx, th.walls)},
                {"theorem", report::theorem(ctx, th)}};

    std::ostringstream table;
    table << "d=" << ctx.d() << " g=" << ctx.g() << " chi=" << ctx.chi() << " h=" << ctx.h() << " t=" << ctx.t()
          << " b=" << ctx.b() << "\n";
    table << "ordering: " << join(sequence_ids(l.curve, ord), " ") << "\n";
    for (const auto& e : th.walls.entries)
      table << "  X_" << e.index << " = " << braces(l.curve.ids(e.subcurve)) << "  k = " << e.k
            << (e.is_wall ? "  WALL" : "") << "\n";
    table << th.narrative << "\n";
    if (th.stable_multidegree) table << "stable multidegree: " << degree_line(l.curve, *th.stable_multidegree, ord) << "\n";
    if (th.graded) table << graded_table(l.curve, *th.graded, ord);
    return emit(common, doc, table.str(), &l.curve);
  });
}

CommandOutput cmd_check(std::string_view curve_text, std::int64_t d, const CheckOptions& check,
                        const CommonOptions& common) {
  return guarded([&] {
    Loaded l = load(curve_text);
    const CurveGraph& x = l.curve;
    TorsionFreeProfile p;
    p.degrees.assign(x.num_components(), 0);
    std::vector<bool> seen(x.num_components(), false);
    for (const auto& [id, deg] : check.degrees) {
      std::size_t c = x.component_index(id);
      p.degrees[c] = deg;
      seen[c] = true;
    }
    for (std::size_t c = 0; c < x.num_components(); ++c)
      if (!seen[c]) throw Error(ErrorKind::InvalidArgument, "no degree given for component '" + x.component(c).id + "'");
    p.non_locally_free = x.node_set(check.non_locally_free);

    DegreeContext ctx(x, d);
    StabilityVerdict v = check_semistability(ctx, p);
    AdmissibleOrdering ord = pick_ordering(l, common);

    json doc = {{"command", "check"},
                {"context", report::context(ctx)},
                {"profile", report::profile(x, p)},
                {"verdict", report::verdict(x, v)}};
    std::ostringstream table;
    table << to_string(v.status);
    if (v.witness) table << " (witness " << braces(x.ids(*v.witness)) << ", kernel slope "
                         << kernel_slope(ctx, p, *v.witness) << " vs " << ctx.d() << ")";
    table << "\n";
    if (v.graded) table << graded_table(x, *v.graded, ord);
    if (check.verbose) {
      auto entries = bounds_check(ctx, p, BoundKind::Strict);
      doc["bounds"] = report::bounds(x, entries);
      json slopes = json::array();
      for (std::uint64_t bits = 1; bits < x.all().bits(); ++bits) {
        Subcurve s(bits);
        slopes.push_back({{"subcurve", report::ids(x, s)}, {"kernel_slope", kernel_slope(ctx, p, s).to_string()}});
      }
      doc["kernel_slopes"] = slopes;
      for (const auto& e : entries)
        table << "  " << braces(x.ids(e.subcurve)) << ": " << e.lower << " < " << e.degree << " < " << e.upper
              << (e.within ? "  ok" : "  OUT") << "\n";
    }
    return emit(common, doc, table.str(), &x);
  });
}

CommandOutput cmd_enumerate(std::string_view curve_text, std::int64_t d, const EnumerateOptions& opts,
                            const CommonOptions& common) {
  return guarded([&] {
    Loaded l = load(curve_text);
    const CurveGraph& x = l.curve;
    DegreeContext ctx(x, d);
    auto profiles = enumerate_profiles(ctx, opts.kind, {opts.window, opts.cap});
    AdmissibleOrdering ord = pick_ordering(l, common);

    json list = json::array();
    std::size_t stable = 0, strictly = 0;
    std::ostringstream table;
    for (const auto& p : profiles) {
      StabilityVerdict v = check_semistability(ctx, p, false);
      (v.status == Status::Stable ? stable : strictly)++;
      json entry = report::profile(x, p);
      entry["status"] = std::string(to_string(v.status));
      list.push_back(entry);
      table << degree_line(x, p.degrees, ord);
      if (!p.is_line_bundle()) table << "  not locally free at " << join(x.node_ids(p.non_locally_free));
      table << "  " << to_string(v.status) << "\n";
    }
    json doc = {{"command", "enumerate"},
                {"kind", opts.kind == ProfileKind::Stable ? "stable" : "semistable"},
                {"window", opts.window},
                {"context", report::context(ctx)},
                {"count", profiles.size()},
                {"summary", {{"stable", stable}, {"strictly_semistable", strictly}}},
                {"profiles", list}};
    table << profiles.size() << " profiles (" << stable << " stable, " << strictly << " strictly semistable)\n";
    return emit(common, doc, table.str(), &x);
  });
}

CommandOutput cmd_chambers(std::string_view curve_text, const ChambersOptions& opts, const CommonOptions& common) {
  return guarded([&] {
    Loaded l = load(curve_text);
    const CurveGraph& x = l.curve;
    AdmissibleOrdering ord = pick_ordering(l, common);
    std::vector<IntRange> ranges;
    for (const auto& c : x.components()) ranges.push_back({c.h, c.h});
    for (const auto& [id, r] : opts.pol_ranges) ranges[x.component_index(id)] = r;
    SweepTable table = sweep(x, ord, ranges, opts.d_range, {opts.max_points});

    CommandOutput out;
    if (opts.csv) {
      std::ostringstream csv;
      for (std::size_t c : ord.sequence()) csv << "h_" << x.component(c).id << ",";
      csv << "d,t,b,chamber";
      for (std::size_t c : ord.sequence()) csv << ",d_" << x.component(c).id;
      csv << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t c : ord.sequence()) csv << row.point.polarization[c] << ",";
        csv << row.point.d << "," << row.point.t << "," << row.point.b << ",";
        if (row.point.on_wall) {
          csv << "WALL";
        } else {
          for (std::size_t i = 0; i < row.point.chamber_id.size(); ++i) csv << (i ? ";" : "") << row.point.chamber_id[i];
        }
        for (std::size_t c : ord.sequence()) csv << "," << row.degrees[c];
        csv << "\n";
      }
      out.out = csv.str();
      return out;
    }

    json walls = json::array();
    for (auto [i, a] : wall_hyperplanes(x, ord)) walls.push_back({{"index", i}, {"level", a}});
    json rows = json::array();
    std::ostringstream text;
    for (const auto& row : table.rows) {
      rows.push_back(report::sweep_row(x, row));
      text << "h=(" << degree_line(x, row.point.polarization, ord) << ") d=" << row.point.d << " t=" << row.point.t
           << " b=" << row.point.b << (row.point.on_wall ? " WALL" : "") << " : " << degree_line(x, row.degrees, ord)
           << "\n";
    }
    json doc = {{"command", "chambers"},
                {"ordering", sequence_ids(x, ord)},
                {"walls", walls},
                {"count", table.rows.size()},
                {"rows", rows}};
    return emit(common, doc, text.str(), &x);
  });
}

namespace {

struct Relation {
  std::string label;
  std::int64_t lhs;
  std::int64_t rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

void example1(std::vector<Relation>& rel, json& info) {
  const CurveGraph x = fixtures::prime_tree();
  const GlobalInvariants inv = global_invariants(x);
  const std::int64_t d = inv.genus + inv.h - 1;  // t = 0, b = h - 1
  const DegreeContext ctx(x, d);
  const AdmissibleOrdering ord = canonical_ordering(x);
  const GradedDecomposition g = compute_jh_degrees(ctx, ord);
  info = {{"curve", "prime_tree"}, {"context", report::context(ctx)}, {"graded", report::graded(x, g)}};
  for (std::size_t i = 1; i <= ord.size(); ++i) {
    const Component& c = x.component(ord.at(i));
    rel.push_back({"d_" + std::to_string(i) + " = h_" + std::to_string(i) + "(t+1) - chi_" + std::to_string(i) +
                       "   [" + c.id + "]",
                   g.pieces[ord.at(i)], c.h * (ctx.t() + 1) - c.euler_char()});
  }
  rel.push_back({"#splits = N - 1", static_cast<std::int64_t>(g.splits.size()),
                 static_cast<std::int64_t>(x.num_components()) - 1});
  rel.push_back({"stable locus empty (1 = yes)", detect_walls(ctx, ord).has_wall() ? 1 : 0, 1});
}

void example2(std::vector<Relation>& rel, json& info) {
  const CurveGraph x = fixtures::chain2_genus12();
  const std::int64_t d = global_invariants(x).genus - 1;
  const DegreeContext ctx(x, d);
  const AdmissibleOrdering ord = canonical_ordering(x);
  const TheoremReport th = classify(ctx, ord);
  info = {{"curve", "chain2_genus12"}, {"context", report::context(ctx)}, {"theorem", report::theorem(ctx, th)}};
  rel.push_back({"t = -1", ctx.t(), -1});
  rel.push_back({"b = h - 1", ctx.b(), ctx.h() - 1});
  rel.push_back({"stable locus empty (1 = yes)", th.has_wall ? 1 : 0, 1});
  for (std::size_t i = 1; i <= ord.size(); ++i) {
    const Component& c = x.component(ord.at(i));
    rel.push_back({"d_" + std::to_string(i) + " = g_" + std::to_string(i) + " - 1   [" + c.id + "]",
                   th.graded ? th.graded->pieces[ord.at(i)] : 0, c.genus - 1});
  }
}

void example3(std::vector<Relation>& rel, json& info) {
  const CurveGraph x = fixtures::star4();
  const DegreeContext ctx(x, 2);
  const AdmissibleOrdering ord = canonical_ordering(x);
  const Multidegree dx = compute_dX(ctx, ord);
  const WallReport walls = detect_walls(ctx, ord);
  const std::size_t c1 = x.component_index("C1"), c2 = x.component_index("C2"), c3 = x.component_index("C3"),
                    c4 = x.component_index("C4");
  rel.push_back({"first integral k_{X_i} at i = 3", static_cast<std::int64_t>(walls.first_wall.value_or(0)), 3});

  JhOptions sigma;
  sigma.overrides[x.subcurve({"C1", "C2", "C3"})] = {c1, c3, c2};
  const Subcurve y = x.subcurve({"C1", "C2", "C3"});
  const AdmissibleOrdering y_sigma = verify_ordering(x, y, sigma.overrides.begin()->second);
  const Rational k_y1 = ctx.k(y_sigma.attachments()[0].subcurve);
  const Rational k_y2 = ctx.k(y_sigma.attachments()[1].subcurve);
  rel.push_back({"k_{Y_sigma(1)} = k_{X_1} is not an integer (1 = yes)", k_y1.is_integer() ? 0 : 1, 1});
  rel.push_back({"k_{Y_sigma(2)} = k_Y - k_{X_2} is not an integer (1 = yes)",
                 (k_y2 == ctx.k(y) - ctx.k(Subcurve::single(c2)) && !k_y2.is_integer()) ? 1 : 0, 1});

  info = {{"curve", "star4"}, {"context", report::context(ctx)}, {"dX", report::degree_map(x, dx)}};
  const Component& comp4 = x.component(c4);
  const std::int64_t d4 = comp4.h * ctx.t() + ctx.k(Subcurve::single(c4)).floor() - comp4.euler_char();
  for (auto [name, options] : {std::pair<std::string, JhOptions>{"canonical", JhOptions{}},
                               std::pair<std::string, JhOptions>{"sigma", sigma}}) {
    const GradedDecomposition g = compute_jh_degrees(ctx, ord, options);
    info["graded_" + name] = report::graded(x, g);
    rel.push_back({"[" + name + "] d_1 = d_1^X", g.pieces[c1], dx[c1]});
    rel.push_back({"[" + name + "] d_2 = d_2^X", g.pieces[c2], dx[c2]});
    rel.push_back({"[" + name + "] d_3 = d_3^X - 1", g.pieces[c3], dx[c3] - 1});
    rel.push_back({"[" + name + "] d_4 = h_4 t + [k_4] - chi_4", g.pieces[c4], d4});
  }

  const GradedDecomposition g = compute_jh_degrees(ctx, ord);
  std::size_t strictly = 0, agree = 0;
  for (const auto& p : enumerate_profiles(ctx, ProfileKind::Semistable)) {
    StabilityVerdict v = check_semistability(ctx, p);
    if (v.status != Status::StrictlySemistable) continue;
    ++strictly;
    if (v.graded && v.graded->pieces == g.pieces) ++agree;
  }
  info["strictly_semistable_profiles"] = strictly;
  rel.push_back({"strictly semistable profiles whose graded degrees match", static_cast<std::int64_t>(agree),
                 static_cast<std::int64_t>(strictly)});
}

}  // namespace

CommandOutput cmd_examples(int which, const CommonOptions& common) {
  return guarded([&] {
    std::vector<Relation> rel;
    json info;
    switch (which) {
      case 1: example1(rel, info); break;
      case 2: example2(rel, info); break;
      case 3: example3(rel, info); break;
      default: throw Error(ErrorKind::InvalidArgument, "example must be 1, 2 or 3");
    }
    bool ok = true;
    json checks = json::array();
    std::ostringstream table;
    table << "example " << which << "\n";
    for (const auto& r : rel) {
      ok = ok && r.holds();
      checks.push_back({{"relation", r.label}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds()}});
      table << "  " << r.label << " : " << r.lhs << " = " << r.rhs << (r.holds() ? "  ✓" : "  ✗") << "\n";
    }
    json doc = {{"command", "examples"}, {"example", which}, {"checks", checks}, {"all_hold", ok}, {"data", info}};
    CommandOutput out = emit(common, doc, table.str(), nullptr);
    out.exit_code = ok ? 0 : 1;
    return out;
  });
}

}  // namespace treejac::cli
