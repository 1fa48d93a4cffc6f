#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpsq/bound_report.hpp"
#include "cpsq/prime_table.hpp"
#include "cpsq/wide.hpp"

namespace cpsq {

/// Printed constant of the upper bound for the number of sums.
inline constexpr double kUpperConstant = 10.9558;
/// 2 * 1.2551, the constant of the per-length majorant.
inline constexpr double kPerLengthConstant = 2.5102;
/// 2 * 2.5102, the constant before the window cap is substituted.
inline constexpr double kCappedConstant = 5.0204;
/// Smallest x for which 2 sqrt(x) / log x < pi(sqrt(x)) is claimed (17^2).
inline constexpr std::uint64_t kLowerBoundFrom = 289;

/// 5.0204 * 108^(1/6), the unrounded form of kUpperConstant.
double upper_constant_unrounded();

/// 2 sqrt(x) / log x. Throws std::domain_error for x <= 1.
double theorem_lower(std::uint64_t x);
inline bool theorem_lower_applicable(std::uint64_t x) { return x >= kLowerBoundFrom; }

/// constant * x^(2/3) / (log x)^(4/3). Throws std::domain_error for x <= 1.
double theorem_upper(std::uint64_t x, double constant = kUpperConstant);

/// Same bound with the unrounded constant 5.0204 * 108^(1/6).
inline double theorem_upper_unrounded(std::uint64_t x) {
  return theorem_upper(x, upper_constant_unrounded());
}

struct WindowCap {
  std::uint64_t x = 0;
  std::uint64_t analytic_M = 0;  // floor(108^(1/3) x^(1/3) (log x)^(-2/3))
  std::uint64_t exact_M = 0;     // largest m with S_m <= x
  std::optional<double> alpha;

  bool operator==(const WindowCap&) const = default;
};

/// floor(108^(1/3) x^(1/3) (log x)^(-2/3)); x >= 2.
std::uint64_t analytic_window_cap(std::uint64_t x);

/// Both window caps at x. Throws std::domain_error for x < 2.
WindowCap analytic_max_window(std::uint64_t x, const PrimeTable& table);

/// The three links of
///   scp_m(x) <= pi(sqrt(x/m)) < 1.2551 sqrt(x/m) / (log(x/m)/2) <= 2.5102 sqrt(x/m) / log x
/// as labelled reports "eq2-count", "eq2-dusart" and "eq2-final". Requires x > m.
/// Note that the last link can only hold at m = 1, since log(x/m) < log x otherwise.
std::array<BoundReport, 3> eq2_links(std::uint64_t x, std::uint64_t m, const PrimeTable& table);

/// The whole chain as one report ("eq2"): observed scp_m against the final
/// majorant, with the verdict of all three links combined.
BoundReport check_eq2(std::uint64_t x, std::uint64_t m, const PrimeTable& table);

/// sum_{2<=n<=M} (n log n)^2, accumulated in extended precision.
double weighted_square_sum(std::uint64_t M);

/// Whether substituting the analytic cap M into the weighted-square sum
/// exceeds x. Recorded, not asserted. observed carries S_M when the table
/// holds M primes.
BoundReport check_eq3_substitution(std::uint64_t x, const PrimeTable& table);

/// sum_{1<=m<=M} m^-alpha < (M^(1-alpha) - alpha) / (1 - alpha). Not
/// applicable at M = 1 where both sides equal 1. Throws std::domain_error
/// unless 0 < alpha < 1.
BoundReport check_partial_sum(std::uint64_t M, double alpha);

/// check_partial_sum for M = 1..max_M, accumulating the sum incrementally.
std::vector<BoundReport> partial_sum_sweep(std::uint64_t max_M, double alpha);

/// sum_{2<=n<=M} (n log n)^2 >= M^3 (log M)^2 / 12 for M >= 4.
/// Throws applicability_error for M < 4.
BoundReport check_weighted_square(std::uint64_t M);

/// The intermediate steps with the sqrt(M) cutoff c = ceil(sqrt M):
///   "weighted-square-tail":   sum_{2<=n<=M} >= sum_{c<=n<=M} n^2 (log n)^2
///   "weighted-square-cutoff": sum_{c<=n<=M} n^2 (log n)^2 >= (log M / 2)^2 sum_{c<=n<=M} n^2
///   "weighted-square-pyramid": (log M / 2)^2 sum_{c<=n<=M} n^2 >= M^3 (log M)^2 / 12
std::array<BoundReport, 3> weighted_square_steps(std::uint64_t M);

/// For M = 4..max_M: the main weighted-square report followed by its three
/// steps, from one running sum.
std::vector<BoundReport> weighted_square_sweep(std::uint64_t max_M);

/// M (M+1) (2M+1) / 6, exactly.
u128 pyramid_identity(std::uint64_t M);

/// Direct summation of 1 + 4 + ... + M^2 against the closed form.
BoundReport check_pyramid(std::uint64_t M);

/// check_pyramid for M = 1..max_M with a running direct sum.
std::vector<BoundReport> pyramid_sweep(std::uint64_t max_M);

/// Constants used by verify_theorem; overridable for experiments.
struct TheoremConstants {
  double upper = kUpperConstant;
  double upper_unrounded = upper_constant_unrounded();
};

/// Checks, for each x, the lower bound against pi(sqrt x) and both scp
/// counts, the exact chain pi(sqrt x) <= distinct <= multiplicity, and the
/// upper bound (printed and unrounded constants) against both counts.
std::vector<BoundReport> verify_theorem(std::span<const std::uint64_t> x_values,
                                        const PrimeTable& table,
                                        const TheoremConstants& constants = {});

}  // namespace cpsq
