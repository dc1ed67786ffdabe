#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treejac/chambers.hpp"
#include "treejac/stability.hpp"

// Subcommand drivers behind the `treejac` executable. Each takes the curve
// file text, never touches stdout/stderr itself, and reports an exit status:
// 0 success, 1 structural error, 2 degree/profile mismatch, 3 resource cap.
namespace treejac::cli {

enum class OutputFormat { Json, Table };

struct CommonOptions {
  OutputFormat format = OutputFormat::Json;
  /// Whole-curve ordering; falls back to the file's "ordering", then to the canonical one.
  std::optional<std::vector<std::string>> ordering;
  bool dot = false;
};

struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct CheckOptions {
  std::map<std::string, std::int64_t> degrees;
  std::vector<std::string> non_locally_free;
  bool verbose = false;
};

struct EnumerateOptions {
  ProfileKind kind = ProfileKind::Stable;
  std::int64_t window = 1;
  std::size_t cap = 8;
};

struct ChambersOptions {
  /// Per-component polarization ranges; unlisted components keep the file's h.
  std::map<std::string, IntRange> pol_ranges;
  IntRange d_range{0, 0};
  bool csv = false;
  std::int64_t max_points = 200000;
};

CommandOutput cmd_validate(std::string_view curve_text, const CommonOptions& common);
CommandOutput cmd_order(std::string_view curve_text, const CommonOptions& common);
CommandOutput cmd_analyze(std::string_view curve_text, std::int64_t d, const CommonOptions& common);
CommandOutput cmd_check(std::string_view curve_text, std::int64_t d, const CheckOptions& check,
                        const CommonOptions& common);
CommandOutput cmd_enumerate(std::string_view curve_text, std::int64_t d, const EnumerateOptions& opts,
                            const CommonOptions& common);
CommandOutput cmd_chambers(std::string_view curve_text, const ChambersOptions& opts, const CommonOptions& common);
/// which = 1, 2 or 3; exit status 1 if a reproduced relation fails to hold.
CommandOutput cmd_examples(int which, const CommonOptions& common);

// Argument syntax helpers (throw Error(InvalidArgument)).
std::vector<std::string> split_list(std::string_view text);
/// "C1=1,C2=-1"
std::map<std::string, std::int64_t> parse_assignments(std::string_view text);
/// "3" or "0..3"
IntRange parse_range(std::string_view text);
/// "C1=1..2,C2=3"
std::map<std::string, IntRange> parse_range_assignments(std::string_view text);

}  // namespace treejac::cli
