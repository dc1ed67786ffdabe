#include "report.hpp"

namespace treejac::report {

json ids(const CurveGraph& x, Subcurve d) { return x.ids(d); }

json node_ids(const CurveGraph& x, NodeSet s) { return x.node_ids(s); }

json degree_map(const CurveGraph& x, const Multidegree& deg) {
  json out = json::object();
  for (std::size_t c = 0; c < x.num_components(); ++c) out[x.component(c).id] = deg[c];
  return out;
}

json context(const DegreeContext& ctx) {
  return {{"d", ctx.d()}, {"g", ctx.g()}, {"chi", ctx.chi()}, {"h", ctx.h()}, {"t", ctx.t()}, {"b", ctx.b()}};
}

json ordering(const CurveGraph& x, const AdmissibleOrdering& ord) {
  json att = json::array();
  for (std::size_t i = 1; i < ord.size(); ++i) {
    const Attachment& a = ord.attachments()[i - 1];
    att.push_back({{"index", i}, {"subcurve", ids(x, a.subcurve)}, {"node", x.node(a.node).id}});
  }
  return {{"sequence", sequence_ids(x, ord)}, {"attachments", att}};
}

json wall_table(const DegreeContext& ctx, const WallReport& walls) {
  const CurveGraph& x = ctx.curve();
  json out = ordering(x, walls.ordering);
  for (std::size_t i = 0; i < walls.entries.size(); ++i) {
    const WallEntry& e = walls.entries[i];
    const OpenInterval win = dXi_interval(ctx, e.index, walls.ordering);
    json& row = out["attachments"][i];
    row["k"] = e.k.to_string();
    row["wall"] = e.is_wall;
    row["window"] = json::array({win.lo.to_string(), win.hi.to_string()});
  }
  out["first_wall"] = walls.first_wall ? json(*walls.first_wall) : json(nullptr);
  return out;
}

json graded(const CurveGraph& x, const GradedDecomposition& g) {
  json splits = json::array();
  for (const Split& s : g.splits)
    splits.push_back({{"node", x.node(s.node).id},
                      {"y", ids(x, s.y)},
                      {"z", ids(x, s.z)},
                      {"degree_y", s.degree_y},
                      {"degree_z", s.degree_z},
                      {"parent_degree", s.parent_degree}});
  json orderings = json::array();
  for (const auto& ord : g.orderings_used) orderings.push_back(sequence_ids(x, ord));
  json out = {{"pieces", degree_map(x, g.pieces)}, {"splits", splits}};
  if (!g.orderings_used.empty()) out["orderings"] = orderings;
  return out;
}

json theorem(const DegreeContext& ctx, const TheoremReport& r) {
  const CurveGraph& x = ctx.curve();
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back({{"component", x.component(f.component).id}, {"degree", f.degree}});
  json out = {{"part", std::string(1, r.part)},
              {"has_wall", r.has_wall},
              {"factors", factors},
              {"narrative", r.narrative}};
  if (r.stable_multidegree) out["stable_multidegree"] = degree_map(x, *r.stable_multidegree);
  if (r.graded) out["graded"] = graded(x, *r.graded);
  return out;
}

json profile(const CurveGraph& x, const TorsionFreeProfile& p) {
  return {{"degrees", degree_map(x, p.degrees)}, {"non_locally_free", node_ids(x, p.non_locally_free)}};
}

json verdict(const CurveGraph& x, const StabilityVerdict& v) {
  json out = {{"status", std::string(to_string(v.status))}};
  out["witness"] = v.witness ? ids(x, *v.witness) : json(nullptr);
  if (v.graded) out["graded"] = graded(x, *v.graded);
  return out;
}

json bounds(const CurveGraph& x, const std::vector<BoundEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries)
    out.push_back({{"subcurve", ids(x, e.subcurve)},
                   {"degree", e.degree},
                   {"lower", e.lower.to_string()},
                   {"upper", e.upper.to_string()},
                   {"within", e.within}});
  return out;
}

json sweep_row(const CurveGraph& x, const SweepRow& row) {
  return {{"polarization", degree_map(x, row.point.polarization)},
          {"d", row.point.d},
          {"t", row.point.t},
          {"b", row.point.b},
          {"on_wall", row.point.on_wall},
          {"chamber", row.point.on_wall ? json(nullptr) : json(row.point.chamber_id)},
          {"degrees", degree_map(x, row.degrees)}};
}

}  // namespace treejac::report
