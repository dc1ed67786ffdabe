#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "treejac/degrees.hpp"
#include "treejac/jh.hpp"

namespace treejac {

/// Discrete invariants of a rank-1 torsion-free sheaf: the degree of its
/// restriction (mod torsion) to every component, and the nodes where it is
/// not locally free. Total degree = sum of degrees + |non_locally_free|.
struct TorsionFreeProfile {
  Multidegree degrees;
  NodeSet non_locally_free;

  [[nodiscard]] std::int64_t total_degree() const noexcept;
  [[nodiscard]] bool is_line_bundle() const noexcept { return non_locally_free.empty(); }

  friend bool operator==(const TorsionFreeProfile&, const TorsionFreeProfile&) = default;
};

enum class Status { Stable, StrictlySemistable, Unstable };

std::string_view to_string(Status status) noexcept;

struct StabilityVerdict {
  Status status = Status::Stable;
  /// A subcurve D whose kernel subsheaf F^D has slope > d (Unstable) or = d
  /// (StrictlySemistable); the canonical minimum among all such D.
  std::optional<Subcurve> witness;
  std::optional<GradedDecomposition> graded;
};

/// Degree of the restriction mod torsion to d: degrees over d plus the
/// non-locally-free nodes interior to d. Errors: EmptySubcurve.
std::int64_t restriction_degree(const CurveGraph& x, const TorsionFreeProfile& p, Subcurve d);

/// Slope of the kernel of F -> F_D:
/// (h d - h d_D + h_D chi(O_X) - h chi(O_D)) / (h - h_D).
/// Accepts non-locally-free profiles too, with d_D from restriction_degree.
/// Errors: FullCurve, EmptySubcurve.
Rational kernel_slope(const DegreeContext& ctx, const TorsionFreeProfile& p, Subcurve d);

/// Decides (semi)stability by scanning the kernels of all proper subcurves.
/// Profiles that are not locally free somewhere are split at those nodes and
/// judged summand by summand. The graded object is attached for strictly
/// semistable profiles when `with_graded` is set.
/// Errors: DegreeMismatch (total degree differs from ctx.d()), InvalidArgument.
StabilityVerdict check_semistability(const DegreeContext& ctx, const TorsionFreeProfile& p, bool with_graded = true);

/// Graded degrees of a semistable profile, obtained by cutting along nodes
/// where the profile is not locally free and along equal-slope edge cuts until
/// every factor is stable. Errors: InvalidArgument when p is unstable.
GradedDecomposition graded_by_splitting(const DegreeContext& ctx, const TorsionFreeProfile& p);

enum class BoundKind { Strict, Closed };

struct BoundEntry {
  Subcurve subcurve;
  std::int64_t degree;  // d_D
  Rational lower;       // -chi(O_D) + h_D t + k_D
  Rational upper;       // lower + alpha
  bool within;
};

/// For every connected proper subcurve D: is d_D inside (lower, upper)
/// (Strict) or [lower, upper] (Closed)? Entries in canonical subcurve order.
std::vector<BoundEntry> bounds_check(const DegreeContext& ctx, const TorsionFreeProfile& p,
                                     BoundKind kind = BoundKind::Strict);

enum class ProfileKind { Stable, Semistable };

struct EnumerationOptions {
  std::int64_t window = 1;
  std::size_t max_components = 8;
};

/// Every profile of total degree d of the requested kind (Semistable includes
/// the stable ones). Per-component degrees are searched in
/// [-chi_i + h_i t + floor(k_i) - window, -chi_i + h_i t + floor(k_i) + alpha_i + window]
/// and over all sets of non-locally-free nodes.
/// Errors: ResourceCap when the curve has more than max_components components;
/// InvalidArgument for a negative window.
std::vector<TorsionFreeProfile> enumerate_profiles(const DegreeContext& ctx, ProfileKind kind,
                                                   const EnumerationOptions& options = {});

/// Total order used to sort enumeration output.
bool profile_less(const CurveGraph& x, const TorsionFreeProfile& a, const TorsionFreeProfile& b);

}  // namespace treejac
