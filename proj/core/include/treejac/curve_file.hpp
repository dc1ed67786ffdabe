#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treejac/curve.hpp"
#include "treejac/jh.hpp"

namespace treejac {

/// Explicit ordering for one subcurve that appears after a cut.
struct SplitOverride {
  std::vector<std::string> subcurve;
  std::vector<std::string> ordering;
  friend bool operator==(const SplitOverride&, const SplitOverride&) = default;
};

/// Curve file document (JSON):
///
///   {
///     "components": [{"id": "C1", "genus": 0, "h": 1}, ...],
///     "nodes":      [{"id": "P1", "joins": ["C1", "C2"]}, ...],
///     "ordering":   ["C1", "C2", ...],                                   (optional)
///     "overrides":  [{"subcurve": ["C1", "C2"], "ordering": ["C2", "C1"]}] (optional)
///   }
///
/// Unknown keys are rejected.
struct CurveFile {
  CurveDescription curve;
  std::optional<std::vector<std::string>> ordering;
  std::vector<SplitOverride> overrides;
  friend bool operator==(const CurveFile&, const CurveFile&) = default;
};

/// Errors: ParseError (syntax, schema or type problems).
CurveFile parse_curve_file(std::string_view text);

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string serialize_curve_file(const CurveFile& file);

/// Resolves id-based overrides against a validated curve.
/// Errors: UnknownComponent, DuplicateId.
OrderingOverrides resolve_overrides(const CurveGraph& x, const std::vector<SplitOverride>& overrides);

/// Graphviz rendering of the dual tree; vertices "id (g=.., h=..)", edges labelled by node id.
std::string to_dot(const CurveGraph& x);

}  // namespace treejac
