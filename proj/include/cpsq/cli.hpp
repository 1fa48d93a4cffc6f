#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "cpsq/serialize.hpp"

namespace cpsq {

enum class Command { count, list, find, maxlen, verify, table_check };

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct CliConfig {
  Command command = Command::count;
  std::uint64_t x_or_target = 0;
  Format format = Format::text;
  CountMode count_mode = CountMode::both;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  std::vector<std::uint64_t> grid;
  std::optional<std::size_t> segment_size;
  /// Replaces 10.9558 in the theorem's upper bound (verify only).
  std::optional<double> upper_constant;
};

/// Outcome of comparing computed values against the reference list.
struct TableCheck {
  bool matches = false;
  std::size_t expected_count = 0;
  std::size_t computed_count = 0;
  /// Index of the first differing position, if any.
  std::optional<std::size_t> first_mismatch;
};

TableCheck compare_with_reference(std::span<const std::uint64_t> computed,
                                  std::span<const std::uint64_t> reference);

/// Accepts plain decimal integers, powers written as "10^12" and
/// scientific shorthand such as "1e12" as long as the value is integral.
/// Throws std::invalid_argument otherwise.
std::uint64_t parse_magnitude(std::string_view text);

/// Executes one command. Returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a CliConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpsq
