#include "treejac/degrees.hpp"

#include <utility>

#include "treejac/error.hpp"

namespace treejac {

DegreeContext::DegreeContext(CurveGraph curve, std::int64_t d) : curve_(std::move(curve)), d_(d) {
  GlobalInvariants inv = global_invariants(curve_);
  g_ = inv.genus;
  chi_ = inv.chi;
  h_ = inv.h;
  t_ = floor_div(d_ - g_, h_);
  b_ = d_ - g_ - h_ * t_;
}

Rational DegreeContext::threshold(Subcurve d) const {
  return Rational(-euler_char(curve_, d) + polarization_degree(curve_, d) * t_) + k(d);
}

DegreeContext make_context(const CurveGraph& x, std::int64_t d) { return DegreeContext(x, d); }

Rational k_of(const DegreeContext& ctx, Subcurve d) {
  if (d.empty()) throw Error(ErrorKind::EmptySubcurve, "k of an empty subcurve");
  if (!d.subset_of(ctx.curve().all())) throw Error(ErrorKind::UnknownComponent, "subcurve outside the curve");
  return ctx.k(d);
}

Multidegree eq1_degrees(const DegreeContext& ctx, const AdmissibleOrdering& ord, std::int64_t host_degree) {
  const CurveGraph& x = ctx.curve();
  Multidegree deg(x.num_components(), 0);
  std::int64_t assigned = 0;
  for (std::size_t i = 1; i < ord.size(); ++i) {
    const Attachment& att = ord.attachments()[i - 1];
    const std::size_t ci = ord.at(i);
    std::int64_t target = -euler_char(x, att.subcurve) + polarization_degree(x, att.subcurve) * ctx.t() +
                          ctx.k(att.subcurve).floor() + 1;
    std::int64_t others = 0;
    (att.subcurve - Subcurve::single(ci)).for_each([&](std::size_t c) { others += deg[c]; });
    deg[ci] = target - others;
    assigned += deg[ci];
  }
  deg[ord.at(ord.size())] = host_degree - assigned;
  return deg;
}

Multidegree compute_dX(const DegreeContext& ctx, const AdmissibleOrdering& ord) {
  if (ord.host() != ctx.curve().all())
    throw Error(ErrorKind::InvalidArgument, "compute_dX needs an ordering of the whole curve");
  return eq1_degrees(ctx, ord, ctx.d());
}

NodeSet WallReport::wall_nodes() const {
  NodeSet s;
  for (const auto& e : entries)
    if (e.is_wall) s.insert(ordering.attachments()[e.index - 1].node);
  return s;
}

WallReport detect_walls(const DegreeContext& ctx, const AdmissibleOrdering& ord) {
  WallReport report{ord, {}, std::nullopt};
  for (std::size_t i = 1; i < ord.size(); ++i) {
    const Subcurve xi = ord.attachments()[i - 1].subcurve;
    Rational k = ctx.k(xi);
    report.entries.push_back({i, xi, k, k.is_integer()});
    if (k.is_integer() && !report.first_wall) report.first_wall = i;
  }
  return report;
}

std::vector<std::int64_t> OpenInterval::interior_integers() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo.floor() + 1; Rational(v) < hi; ++v) out.push_back(v);
  return out;
}

OpenInterval dXi_interval(const DegreeContext& ctx, std::size_t i, const AdmissibleOrdering& ord) {
  const Attachment& att = attachment_data(ord, i);
  const CurveGraph& x = ctx.curve();
  const std::int64_t hx = polarization_degree(x, att.subcurve);
  const std::int64_t chix = euler_char(x, att.subcurve);
  Rational lo(hx * ctx.d() + hx * ctx.chi() - ctx.h() * chix, ctx.h());
  return {lo, lo + Rational(1)};
}

}  // namespace treejac
