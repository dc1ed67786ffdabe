#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "treejac/curve.hpp"
#include "treejac/ordering.hpp"
#include "treejac/rational.hpp"

namespace treejac {

/// One integer per component, indexed like CurveGraph::components().
using Multidegree = std::vector<std::int64_t>;

/// Global degree data for sheaves of total degree d on a polarized curve:
/// d - g = h*t + b with 0 <= b < h.
class DegreeContext {
 public:
  DegreeContext(CurveGraph curve, std::int64_t d);

  [[nodiscard]] const CurveGraph& curve() const noexcept { return curve_; }
  [[nodiscard]] std::int64_t d() const noexcept { return d_; }
  [[nodiscard]] std::int64_t g() const noexcept { return g_; }
  [[nodiscard]] std::int64_t chi() const noexcept { return chi_; }
  [[nodiscard]] std::int64_t h() const noexcept { return h_; }
  [[nodiscard]] std::int64_t t() const noexcept { return t_; }
  [[nodiscard]] std::int64_t b() const noexcept { return b_; }

  /// k_D = h_D (b + 1) / h, unchecked.
  [[nodiscard]] Rational k(Subcurve d) const { return Rational(polarization_degree(curve_, d) * (b_ + 1), h_); }
  /// -chi(O_D) + h_D t + k_D: the lower end of the open degree window of D.
  [[nodiscard]] Rational threshold(Subcurve d) const;

 private:
  CurveGraph curve_;
  std::int64_t d_;
  std::int64_t g_;
  std::int64_t chi_;
  std::int64_t h_;
  std::int64_t t_;
  std::int64_t b_;
};

DegreeContext make_context(const CurveGraph& x, std::int64_t d);

/// Errors: EmptySubcurve, UnknownComponent.
Rational k_of(const DegreeContext& ctx, Subcurve d);

/// The stable multidegree d_i^X for the given whole-curve ordering. Defined
/// on walls as well; whether it means anything there is decided by jh::classify.
Multidegree compute_dX(const DegreeContext& ctx, const AdmissibleOrdering& ord);

/// The same recursion run inside the host of `ord` (with the global t and k),
/// the last component receiving `host_degree` minus the others.
/// Entries outside the host are left at zero.
Multidegree eq1_degrees(const DegreeContext& ctx, const AdmissibleOrdering& ord, std::int64_t host_degree);

struct WallEntry {
  std::size_t index;  // 1-based position i
  Subcurve subcurve;  // X_i
  Rational k;         // k_{X_i}
  bool is_wall;
};

struct WallReport {
  AdmissibleOrdering ordering;
  std::vector<WallEntry> entries;
  std::optional<std::size_t> first_wall;

  [[nodiscard]] bool has_wall() const noexcept { return first_wall.has_value(); }
  /// Nodes P_i whose k_{X_i} is integral.
  [[nodiscard]] NodeSet wall_nodes() const;
};

WallReport detect_walls(const DegreeContext& ctx, const AdmissibleOrdering& ord);

struct OpenInterval {
  Rational lo;
  Rational hi;
  /// Integers strictly between lo and hi.
  [[nodiscard]] std::vector<std::int64_t> interior_integers() const;
};

/// Window (lo, lo + 1) that d_{X_i} of a stable line bundle must lie in,
/// lo = (h_{X_i} d + h_{X_i} chi(O_X) - h chi(O_{X_i})) / h.
/// Errors: IndexOutOfRange.
OpenInterval dXi_interval(const DegreeContext& ctx, std::size_t i, const AdmissibleOrdering& ord);

}  // namespace treejac
