#include "treejac/chambers.hpp"

#include "treejac/error.hpp"
#include "treejac/jh.hpp"

namespace treejac {

namespace {

void require_whole_ordering(const CurveGraph& x, const AdmissibleOrdering& ord) {
  if (ord.host() != x.all()) throw Error(ErrorKind::InvalidArgument, "chamber data needs an ordering of the whole curve");
}

}  // namespace

std::vector<std::pair<std::size_t, std::int64_t>> wall_hyperplanes(const CurveGraph& x, const AdmissibleOrdering& ord) {
  require_whole_ordering(x, ord);
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t i = 1; i < ord.size(); ++i) {
    const std::int64_t hx = polarization_degree(x, ord.attachments()[i - 1].subcurve);
    for (std::int64_t a = 1; a <= hx; ++a) out.emplace_back(i, a);
  }
  return out;
}

ChamberPoint classify_point(const CurveGraph& x, const AdmissibleOrdering& ord, const Polarization& pol,
                            std::int64_t d) {
  require_whole_ordering(x, ord);
  const DegreeContext ctx(x.with_polarization(pol), d);
  ChamberPoint point;
  point.polarization = pol;
  point.d = d;
  point.t = ctx.t();
  point.b = ctx.b();
  for (const auto& att : ord.attachments()) {
    const Rational k = ctx.k(att.subcurve);
    point.chamber_id.push_back(k.floor());
    point.on_wall = point.on_wall || k.is_integer();
  }
  return point;
}

SweepTable sweep(const CurveGraph& x, const AdmissibleOrdering& ord, const std::vector<IntRange>& pol_ranges,
                 IntRange d_range, const SweepOptions& options) {
  require_whole_ordering(x, ord);
  const std::size_t n = x.num_components();
  if (pol_ranges.size() != n)
    throw Error(ErrorKind::InvalidArgument, "need one polarization range per component");

  wide_int points = d_range.count();
  for (const auto& r : pol_ranges) {
    if (r.count() > 0 && r.lo < 1)
      throw Error(ErrorKind::NonPositivePolarization, "polarization ranges must start at 1 or more");
    points *= r.count();
    if (points > options.max_points) break;
  }
  if (points > options.max_points)
    throw Error(ErrorKind::SweepTooLarge, "sweep exceeds " + std::to_string(options.max_points) + " lattice points");

  SweepTable table{ord, {}};
  if (points == 0) return table;

  Polarization pol(n);
  for (std::size_t c = 0; c < n; ++c) pol[c] = pol_ranges[c].lo;
  while (true) {
    const CurveGraph polarized = x.with_polarization(pol);
    for (std::int64_t d = d_range.lo; d <= d_range.hi; ++d) {
      SweepRow row;
      row.point = classify_point(x, ord, pol, d);
      const DegreeContext ctx(polarized, d);
      row.degrees = row.point.on_wall ? compute_jh_degrees(ctx, ord).pieces : compute_dX(ctx, ord);
      table.rows.push_back(std::move(row));
    }
    std::size_t c = n;
    while (c > 0 && pol[c - 1] == pol_ranges[c - 1].hi) {
      pol[c - 1] = pol_ranges[c - 1].lo;
      --c;
    }
    if (c == 0) break;
    ++pol[c - 1];
  }
  return table;
}

}  // namespace treejac
