#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "treejac/degrees.hpp"
#include "treejac/ordering.hpp"

namespace treejac {

/// Polarization degrees h_i, indexed like CurveGraph::components().
using Polarization = std::vector<std::int64_t>;

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;  // inclusive
  [[nodiscard]] std::int64_t count() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
};

/// Position of a (polarization, d) point relative to the walls k_{X_i} = a.
struct ChamberPoint {
  Polarization polarization;
  std::int64_t d = 0;
  std::int64_t t = 0;
  std::int64_t b = 0;
  /// floor(k_{X_1}), ..., floor(k_{X_{N-1}}); only a chamber label when off the walls.
  std::vector<std::int64_t> chamber_id;
  bool on_wall = false;
};

struct SweepRow {
  ChamberPoint point;
  /// d_i^X off the walls, graded degrees on them.
  Multidegree degrees;
};

struct SweepTable {
  AdmissibleOrdering ordering;
  std::vector<SweepRow> rows;
};

/// Pairs (i, a) with 1 <= a <= h_{X_i}: the levels where k_{X_i} can be an integer.
std::vector<std::pair<std::size_t, std::int64_t>> wall_hyperplanes(const CurveGraph& x, const AdmissibleOrdering& ord);

/// Errors: NonPositivePolarization, InvalidArgument (wrong length / ordering).
ChamberPoint classify_point(const CurveGraph& x, const AdmissibleOrdering& ord, const Polarization& pol,
                            std::int64_t d);

struct SweepOptions {
  std::int64_t max_points = 200000;
};

/// One row per lattice point of the polarization box times the degree range,
/// polarizations in lexicographic order (first component slowest), d fastest.
/// Errors: SweepTooLarge, NonPositivePolarization, InvalidArgument.
SweepTable sweep(const CurveGraph& x, const AdmissibleOrdering& ord, const std::vector<IntRange>& pol_ranges,
                 IntRange d_range, const SweepOptions& options = {});

}  // namespace treejac
