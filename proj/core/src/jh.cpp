#include "treejac/jh.hpp"

#include <numeric>
#include <sstream>

#include "treejac/error.hpp"

namespace treejac {

std::int64_t GradedDecomposition::total() const noexcept {
  return std::accumulate(pieces.begin(), pieces.end(), std::int64_t{0});
}

namespace {

void require_ordering_of(const CurveGraph& x, Subcurve d, const AdmissibleOrdering& ord) {
  if (d.empty()) throw Error(ErrorKind::EmptySubcurve, "empty subcurve");
  if (!is_connected(x, d)) throw Error(ErrorKind::DisconnectedSubcurve, "subcurve is not connected");
  if (ord.host() != d) throw Error(ErrorKind::InvalidArgument, "ordering does not belong to this subcurve");
}

std::optional<std::size_t> first_integral(const DegreeContext& ctx, const AdmissibleOrdering& ord) {
  for (std::size_t i = 1; i < ord.size(); ++i)
    if (ctx.k(ord.attachments()[i - 1].subcurve).is_integer()) return i;
  return std::nullopt;
}

std::int64_t forced_degree(const DegreeContext& ctx, Subcurve side) {
  // -chi + h t + k, integral whenever k_side is.
  return -euler_char(ctx.curve(), side) + polarization_degree(ctx.curve(), side) * ctx.t() + ctx.k(side).floor();
}

AdmissibleOrdering side_ordering(const DegreeContext& ctx, Subcurve side, const JhOptions& options) {
  auto it = options.overrides.find(side);
  if (it != options.overrides.end()) return verify_ordering(ctx.curve(), side, it->second);
  return canonical_ordering(ctx.curve(), side);
}

void run(const DegreeContext& ctx, const AdmissibleOrdering& ord, std::int64_t host_degree, const JhOptions& options,
         GradedDecomposition& out) {
  out.orderings_used.push_back(ord);
  auto wall = first_integral(ctx, ord);
  if (!wall) {
    for (auto [c, deg] : final_degrees(ctx, ord.host(), ord, host_degree)) out.pieces[c] = deg;
    return;
  }
  const Attachment& att = ord.attachments()[*wall - 1];
  const Subcurve y = att.subcurve;
  const Subcurve z = ord.host() - y;

  SplitTargets targets{};
  if (options.wall_case == WallCase::QuotientOnAttached) {
    targets = split_targets(ctx, y, z);
  } else {
    // Y carries the larger admissible degree; the quotient lives on Z and the
    // sub-object is the twist of the restriction to Y by -P.
    const std::int64_t y_total = forced_degree(ctx, y) + 1;
    targets.degree_z = host_degree - y_total;
    targets.degree_y = y_total - 1;
  }
  if (targets.degree_y + targets.degree_z + 1 != host_degree)
    throw Error(ErrorKind::DegreeMismatch, "split degrees " + std::to_string(targets.degree_y) + " + " +
                                               std::to_string(targets.degree_z) + " + 1 differ from parent degree " +
                                               std::to_string(host_degree));
  out.splits.push_back({att.node, y, z, targets.degree_y, targets.degree_z, host_degree});
  run(ctx, side_ordering(ctx, y, options), targets.degree_y, options, out);
  run(ctx, side_ordering(ctx, z, options), targets.degree_z, options, out);
}

}  // namespace

bool is_final(const DegreeContext& ctx, Subcurve d, const AdmissibleOrdering& ord) {
  require_ordering_of(ctx.curve(), d, ord);
  return d.size() == 1 || !first_integral(ctx, ord).has_value();
}

std::map<std::size_t, std::int64_t> final_degrees(const DegreeContext& ctx, Subcurve d, const AdmissibleOrdering& ord,
                                                  std::int64_t host_degree) {
  if (!is_final(ctx, d, ord)) throw Error(ErrorKind::NotFinal, "subcurve has an attachment with integral k");
  std::map<std::size_t, std::int64_t> out;
  if (d.size() == 1) {
    const std::size_t c = ord.at(1);
    const Component& comp = ctx.curve().component(c);
    const std::int64_t forced = comp.h * ctx.t() + ctx.k(d).floor() - comp.euler_char();
    if (forced != host_degree)
      throw Error(ErrorKind::DegreeMismatch, "component '" + comp.id + "' is forced to degree " +
                                                 std::to_string(forced) + " but was assigned " +
                                                 std::to_string(host_degree));
    out[c] = forced;
    return out;
  }
  Multidegree deg = eq1_degrees(ctx, ord, host_degree);
  d.for_each([&](std::size_t c) { out[c] = deg[c]; });
  return out;
}

SplitTargets split_targets(const DegreeContext& ctx, Subcurve y, Subcurve z) {
  const CurveGraph& x = ctx.curve();
  if (y.empty() || z.empty() || !(y & z).empty() || !is_connected(x, y) || !is_connected(x, z) ||
      (boundary_nodes(x, y) & interior_nodes(x, y | z)).size() != 1)
    throw Error(ErrorKind::InvalidArgument, "split sides must be disjoint connected subcurves joined by one node");
  if (!ctx.k(y).is_integer())
    throw Error(ErrorKind::NotAWall, "k of the cut side is " + ctx.k(y).to_string() + ", not an integer");
  return {forced_degree(ctx, y), forced_degree(ctx, z)};
}

GradedDecomposition compute_jh_degrees(const DegreeContext& ctx, const AdmissibleOrdering& ord,
                                       const JhOptions& options) {
  if (ord.host() != ctx.curve().all())
    throw Error(ErrorKind::InvalidArgument, "the algorithm starts from an ordering of the whole curve");
  GradedDecomposition out;
  out.pieces.assign(ctx.curve().num_components(), 0);
  run(ctx, ord, ctx.d(), options, out);
  return out;
}

TheoremReport classify(const DegreeContext& ctx, const AdmissibleOrdering& ord, const JhOptions& options) {
  const CurveGraph& x = ctx.curve();
  TheoremReport report{false, detect_walls(ctx, ord), {}, {}, 'a', {}, {}};
  report.has_wall = report.walls.has_wall();
  report.part = report.has_wall ? 'b' : 'a';

  const Multidegree* degrees = nullptr;
  if (report.has_wall) {
    report.graded = compute_jh_degrees(ctx, ord, options);
    degrees = &report.graded->pieces;
  } else {
    report.stable_multidegree = compute_dX(ctx, ord);
    degrees = &*report.stable_multidegree;
  }
  for (std::size_t c : ord.sequence()) report.factors.push_back({c, (*degrees)[c]});

  auto product = [&](const char* scheme) {
    std::ostringstream os;
    for (std::size_t i = 0; i < report.factors.size(); ++i) {
      if (i) os << " x ";
      os << scheme << "^" << report.factors[i].degree << "(" << x.component(report.factors[i].component).id << ")";
    }
    return os.str();
  };

  std::ostringstream text;
  if (!report.has_wall) {
    text << "part (a): no k_{X_i} is an integer; stable line bundles = " << product("Pic")
         << "; semistable sheaves = " << product("Ja") << ", all of them stable";
  } else {
    const auto& first = report.walls.entries[*report.walls.first_wall - 1];
    text << "part (b): k_{X_" << first.index << "} = " << first.k.to_string()
         << " is an integer; no stable sheaves; semistable sheaves up to S-equivalence = " << product("Ja");
    text << "; cuts at";
    for (const auto& s : report.graded->splits) text << " " << x.node(s.node).id;
  }
  report.narrative = text.str();
  return report;
}

}  // namespace treejac
