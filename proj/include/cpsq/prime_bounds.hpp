#pragma once

#include <cstdint>

#include "cpsq/bound_report.hpp"
#include "cpsq/prime_table.hpp"

namespace cpsq {

/// Dusart's constant in pi(N) < 1.2551 N / log N.
inline constexpr double kDusartUpper = 1.2551;
/// Smallest N for which N / log N < pi(N) is claimed.
inline constexpr std::uint64_t kDusartLowerFrom = 17;

struct DusartCheck {
  std::uint64_t n = 0;
  double lower_value = 0.0;  // N / log N
  std::uint64_t pi_value = 0;
  double upper_value = 0.0;  // 1.2551 N / log N
  bool lower_applicable = false;
  bool upper_applicable = false;
  bool passed = false;
  Verdict verdict = Verdict::inconclusive;

  bool operator==(const DusartCheck&) const = default;
};

/// Evaluates N/log N < pi(N) (N >= 17) and pi(N) < 1.2551 N/log N (N > 1).
/// Requires 2 <= n <= table.limit().
DusartCheck check_dusart(std::uint64_t n, const PrimeTable& table);

/// Splits a Dusart check into one BoundReport per side.
BoundReport dusart_lower_report(const DusartCheck& check);
BoundReport dusart_upper_report(const DusartCheck& check);

/// p_n > n log n. Needs at least n primes in the table.
BoundReport check_rosser(std::uint64_t n, const PrimeTable& table);

}  // namespace cpsq
