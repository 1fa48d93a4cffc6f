#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpsq/bound_report.hpp"
#include "cpsq/bounds.hpp"
#include "cpsq/prime_table.hpp"

namespace cpsq {

/// What `cpsq verify` checks. Defaults mirror the acceptance ranges.
struct VerifyPlan {
  std::vector<std::uint64_t> grid = {289,         1'000,         10'000,
                                     100'000,     1'000'000,     10'000'000,
                                     100'000'000, 1'000'000'000};
  std::uint64_t dusart_max = 1'000'000;
  std::uint64_t rosser_max = 100'000;
  std::uint64_t lemma_max = 10'000;
  std::vector<double> alphas = {0.1, 0.25, 0.5, 0.75, 0.9};
  TheoremConstants constants;
};

/// Prime table limit that covers every check in the plan.
std::uint64_t required_limit(const VerifyPlan& plan);

/// Tally of one family of checks (one label swept over a range).
struct FamilySummary {
  std::string label;
  bool asserted = true;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t not_applicable = 0;
  /// The applicable passing check with the smallest relative slack.
  std::optional<BoundReport> tightest;

  void add(const BoundReport& report);
  bool clean() const { return !asserted || (failed == 0 && inconclusive == 0); }

  bool operator==(const FamilySummary&) const = default;
};

struct VerifyResult {
  /// Theorem and eq3 reports for every grid point, followed by any asserted
  /// lemma check that did not pass (at most a few per family).
  std::vector<BoundReport> reports;
  std::vector<FamilySummary> families;

  bool all_pass() const;
};

VerifyResult run_verification(const VerifyPlan& plan, const PrimeTable& table);

}  // namespace cpsq
