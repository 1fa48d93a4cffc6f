#include "cpsq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <new>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cpsq/errors.hpp"
#include "cpsq/prime_cache.hpp"
#include "cpsq/reference_table.hpp"

namespace cpsq {

namespace {

std::uint64_t parse_digits(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument(fmt::format("'{}' is not a non-negative integer", text));
  }
  return value;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::string_view text) {
  u128 value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    value *= base;
    if (value > UINT64_MAX) throw std::invalid_argument(fmt::format("'{}' does not fit in 64 bits", text));
    if (base <= 1) break;
  }
  return static_cast<std::uint64_t>(value);
}

PrimeTable obtain_table(std::uint64_t limit, const CliConfig& config) {
  SieveOptions options;
  if (config.segment_size) options.segment_size = *config.segment_size;
  std::optional<std::filesystem::path> dir;
  if (config.use_cache) dir = config.cache_dir ? *config.cache_dir : default_cache_dir();
  return load_or_sieve(limit, dir, options);
}

void require_positive(const CliConfig& config) {
  if (config.x_or_target == 0) throw std::invalid_argument("the magnitude must be a positive integer");
}

int run_count(const CliConfig& config, std::ostream& out) {
  require_positive(config);
  const PrimeTable table = obtain_table(isqrt(config.x_or_target), config);
  const CountReport report = count_sums(config.x_or_target, table);
  out << serialize(std::span<const CountReport>(&report, 1), config.format, config.count_mode);
  return kExitOk;
}

int run_list(const CliConfig& config, std::ostream& out) {
  require_positive(config);
  const PrimeTable table = obtain_table(isqrt(config.x_or_target), config);
  out << serialize_values(table_up_to(config.x_or_target, table), config.format);
  return kExitOk;
}

int run_find(const CliConfig& config, std::ostream& out) {
  require_positive(config);
  const PrimeTable table = obtain_table(isqrt(config.x_or_target), config);
  const auto reps = find_representations(config.x_or_target, table);
  if (config.format != Format::text) {
    out << serialize(std::span<const Representation>(reps), config.format);
  } else if (reps.empty()) {
    out << "no representation\n";
  } else {
    for (const auto& r : reps) out << describe(r, table) << "\n";
  }
  return kExitOk;
}

int run_maxlen(const CliConfig& config, std::ostream& out) {
  const PrimeTable table = obtain_table(isqrt(config.x_or_target), config);
  const WindowCap cap = analytic_max_window(config.x_or_target, table);
  out << serialize(std::span<const WindowCap>(&cap, 1), config.format);
  return kExitOk;
}

int run_verify(const CliConfig& config, std::ostream& out) {
  VerifyPlan plan;
  if (!config.grid.empty()) {
    plan.grid = config.grid;
  } else if (config.x_or_target != 0) {
    plan.grid = {config.x_or_target};
  }
  std::sort(plan.grid.begin(), plan.grid.end());
  if (config.upper_constant) plan.constants.upper = *config.upper_constant;
  const PrimeTable table = obtain_table(required_limit(plan), config);
  const VerifyResult result = run_verification(plan, table);
  out << serialize(result, config.format);
  return result.all_pass() ? kExitOk : kExitBoundFailed;
}

int run_table_check(const CliConfig& config, std::ostream& out) {
  const PrimeTable table = obtain_table(isqrt(kReferenceTableLimit), config);
  const auto computed = table_up_to(kReferenceTableLimit, table);
  const TableCheck check = compare_with_reference(computed, kReferenceTable);
  switch (config.format) {
    case Format::json: {
      nlohmann::json j{{"matches", check.matches},
                       {"expected_count", check.expected_count},
                       {"computed_count", check.computed_count},
                       {"first_mismatch", check.first_mismatch ? nlohmann::json(*check.first_mismatch)
                                                               : nlohmann::json(nullptr)}};
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "matches,expected_count,computed_count,first_mismatch\n"
          << fmt::format("{},{},{},{}\n", check.matches, check.expected_count,
                         check.computed_count,
                         check.first_mismatch ? std::to_string(*check.first_mismatch) : "");
      break;
    case Format::text:
      if (check.matches) {
        out << fmt::format("table-check: pass ({} values up to {} match the reference list)\n",
                           check.computed_count, kReferenceTableLimit);
      } else {
        out << fmt::format("table-check: FAIL (computed {} values, expected {}; first difference at "
                           "position {})\n",
                           check.computed_count, check.expected_count,
                           check.first_mismatch.value_or(0) + 1);
      }
      break;
  }
  return check.matches ? kExitOk : kExitBoundFailed;
}

}  // namespace

TableCheck compare_with_reference(std::span<const std::uint64_t> computed,
                                  std::span<const std::uint64_t> reference) {
  TableCheck check;
  check.expected_count = reference.size();
  check.computed_count = computed.size();
  const auto [a, b] = std::mismatch(computed.begin(), computed.end(), reference.begin(), reference.end());
  if (a != computed.end() || b != reference.end()) {
    check.first_mismatch = static_cast<std::size_t>(a - computed.begin());
  }
  check.matches = !check.first_mismatch;
  return check;
}

std::uint64_t parse_magnitude(std::string_view text) {
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    return checked_power(parse_digits(text.substr(0, caret)), parse_digits(text.substr(caret + 1)),
                         text);
  }
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const std::uint64_t mantissa = parse_digits(text.substr(0, e));
    const std::uint64_t scale = checked_power(10, parse_digits(text.substr(e + 1)), text);
    if (mantissa != 0 && scale > UINT64_MAX / mantissa) {
      throw std::invalid_argument(fmt::format("'{}' does not fit in 64 bits", text));
    }
    return mantissa * scale;
  }
  return parse_digits(text);
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::count: return run_count(config, out);
      case Command::list: return run_list(config, out);
      case Command::find: return run_find(config, out);
      case Command::maxlen: return run_maxlen(config, out);
      case Command::verify: return run_verify(config, out);
      case Command::table_check: return run_table_check(config, out);
    }
  } catch (const resource_error& e) {
    err << "cpsq: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "cpsq: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "cpsq: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of squares of consecutive primes: counts, tables, representations and bound checks",
               "cpsq"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text";
  std::string count_mode = "both";
  std::string cache_dir;
  bool no_cache = false;
  std::vector<std::string> grid;
  std::size_t segment_size = 0;
  double upper_constant = 0.0;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--count-mode", count_mode, "Which scp reading to print in text mode")
      ->check(CLI::IsMember({"distinct", "multiplicity", "both"}));
  app.add_option("--cache-dir", cache_dir, "Prime table cache directory (default: $CPSQ_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Always sieve; never read or write the cache");
  app.add_option("--grid", grid, "Magnitudes checked by verify")->delimiter(',');
  app.add_option("--segment-size", segment_size, "Sieve segment size in odd candidates")
      ->check(CLI::PositiveNumber);
  auto* upper = app.add_option("--upper-constant", upper_constant,
                               "Constant of the theorem's upper bound for verify (default 10.9558)");

  struct Sub {
    const char* name;
    Command command;
    const char* help;
    bool needs_x;
  };
  const Sub subs[] = {
      {"count", Command::count, "scp(x) as distinct values and as representations", true},
      {"list", Command::list, "All representable values <= x", true},
      {"find", Command::find, "Representations of one integer", true},
      {"maxlen", Command::maxlen, "Analytic and exact longest window for x", true},
      {"verify", Command::verify, "Check the explicit bounds and lemmas", false},
      {"table-check", Command::table_check, "Compare list(5000) with the reference table", false},
  };
  std::string magnitude;
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const auto& sub : subs) {
    auto* cmd = app.add_subcommand(sub.name, sub.help);
    if (sub.command != Command::table_check) {
      auto* opt = cmd->add_option("x", magnitude, "Magnitude or target (e.g. 5000, 10^12, 1e9)");
      if (sub.needs_x) opt->required();
    }
    commands.emplace_back(cmd, sub.command);
  }

  CliConfig config;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    for (const auto& [cmd, command] : commands) {
      if (cmd->parsed()) config.command = command;
    }
    if (!magnitude.empty()) config.x_or_target = parse_magnitude(magnitude);
    for (const auto& g : grid) config.grid.push_back(parse_magnitude(g));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cpsq: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "cpsq: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  config.format = parse_format(format);
  config.count_mode = parse_count_mode(count_mode);
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  config.use_cache = !no_cache;
  if (segment_size != 0) config.segment_size = segment_size;
  if (upper->count() > 0) config.upper_constant = upper_constant;
  return run(config, out, err);
}

}  // namespace cpsq
