#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treejac/degrees.hpp"
#include "treejac/ordering.hpp"

namespace treejac {

/// One cut of the recursive splitting.
struct Split {
  std::size_t node;            // the node cut
  Subcurve y;                  // side holding the attachment subcurve of the current ordering
  Subcurve z;                  // the rest of the parent subcurve
  std::int64_t degree_y;       // -chi(O_Y) + h_Y t + k_Y
  std::int64_t degree_z;       // -chi(O_Z) + h_Z t + k_Z
  std::int64_t parent_degree;  // degree_y + degree_z + 1
  friend bool operator==(const Split&, const Split&) = default;
};

/// Degree data of the Jordan-Hoelder graded object: one degree per
/// component, plus the cuts (and orderings) that produced it.
struct GradedDecomposition {
  Multidegree pieces;
  std::vector<Split> splits;
  std::vector<AdmissibleOrdering> orderings_used;

  [[nodiscard]] std::int64_t total() const noexcept;
};

/// Explicit orderings for subcurves appearing after a cut, keyed by the subcurve.
using OrderingOverrides = std::map<Subcurve, std::vector<std::size_t>>;

/// Which side of a wall carries the quotient when the cut is made.
/// Both give the same graded degrees; the choice only changes the route.
enum class WallCase { QuotientOnAttached, QuotientOnComplement };

struct JhOptions {
  OrderingOverrides overrides;
  WallCase wall_case = WallCase::QuotientOnAttached;
};

/// True iff the host of `ord` is a single component or no attachment
/// subcurve of `ord` has integral k (global h and b).
/// Errors: DisconnectedSubcurve, InvalidArgument (ord is not an ordering of d).
bool is_final(const DegreeContext& ctx, Subcurve d, const AdmissibleOrdering& ord);

/// Graded degrees on a final subcurve carrying degree `host_degree`.
/// Errors: NotFinal; DegreeMismatch for a single component whose forced
/// degree differs from host_degree.
std::map<std::size_t, std::int64_t> final_degrees(const DegreeContext& ctx, Subcurve d, const AdmissibleOrdering& ord,
                                                  std::int64_t host_degree);

struct SplitTargets {
  std::int64_t degree_y;
  std::int64_t degree_z;
};

/// Degrees assigned to the two sides of a wall cut.
/// Errors: NotAWall (k_Y not integral); InvalidArgument when Y and Z are not
/// disjoint connected subcurves joined by exactly one node.
SplitTargets split_targets(const DegreeContext& ctx, Subcurve y, Subcurve z);

/// The recursive splitting algorithm started from the whole curve with `ord`.
GradedDecomposition compute_jh_degrees(const DegreeContext& ctx, const AdmissibleOrdering& ord,
                                       const JhOptions& options = {});

struct TheoremFactor {
  std::size_t component;
  std::int64_t degree;
};

struct TheoremReport {
  bool has_wall = false;
  WallReport walls;
  std::optional<Multidegree> stable_multidegree;  // part (a)
  std::optional<GradedDecomposition> graded;      // part (b)
  char part = 'a';
  std::vector<TheoremFactor> factors;  // product decomposition, in ordering order
  std::string narrative;
};

TheoremReport classify(const DegreeContext& ctx, const AdmissibleOrdering& ord, const JhOptions& options = {});

}  // namespace treejac
