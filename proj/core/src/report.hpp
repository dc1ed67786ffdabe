#pragma once

// JSON builders shared by the subcommands. Private to the core library.

#include <json.hpp>

#include "treejac/chambers.hpp"
#include "treejac/degrees.hpp"
#include "treejac/jh.hpp"
#include "treejac/stability.hpp"

namespace treejac::report {

using nlohmann::json;

json ids(const CurveGraph& x, Subcurve d);
json node_ids(const CurveGraph& x, NodeSet s);
/// {"C1": 0, ...}; keys sorted by the json object itself.
json degree_map(const CurveGraph& x, const Multidegree& deg);
json context(const DegreeContext& ctx);
json ordering(const CurveGraph& x, const AdmissibleOrdering& ord);
/// Ordering plus, per attachment, k, wall flag and the stable window for d_{X_i}.
json wall_table(const DegreeContext& ctx, const WallReport& walls);
json graded(const CurveGraph& x, const GradedDecomposition& g);
json theorem(const DegreeContext& ctx, const TheoremReport& r);
json profile(const CurveGraph& x, const TorsionFreeProfile& p);
json verdict(const CurveGraph& x, const StabilityVerdict& v);
json bounds(const CurveGraph& x, const std::vector<BoundEntry>& entries);
json sweep_row(const CurveGraph& x, const SweepRow& row);

}  // namespace treejac::report
