#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cpsq/wide.hpp"

namespace cpsq {

struct SieveOptions {
  /// Odd candidates per segment.
  std::size_t segment_size = std::size_t{1} << 20;
  /// Upper bound on the memory the finished table may occupy.
  std::uint64_t max_table_bytes = std::uint64_t{1} << 30;
};

/// Primes up to an inclusive limit together with the prefix sums of their
/// squares. Immutable once built; 1-based accessors follow p_1 = 2.
class PrimeTable {
 public:
  PrimeTable() : square_prefix_{0} {}

  /// Adopts an externally supplied prime list (e.g. from a cache file).
  /// Throws std::invalid_argument when the list breaks the table invariants.
  static PrimeTable from_primes(std::uint64_t limit, std::vector<std::uint64_t> primes);

  std::uint64_t limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return primes_.size(); }

  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::span<const u128> square_prefix() const noexcept { return square_prefix_; }

  /// p_n for 1 <= n <= size().
  std::uint64_t prime(std::size_t n) const;

  /// S_k = p_1^2 + ... + p_k^2 for 0 <= k <= size().
  u128 prefix(std::size_t k) const;

  /// p_start^2 + ... + p_{start+length-1}^2.
  u128 window_sum(std::size_t start, std::size_t length) const;

  /// Same primes restricted to p <= new_limit (new_limit <= limit()).
  PrimeTable truncated(std::uint64_t new_limit) const;

 private:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes);

  friend PrimeTable sieve_primes(std::uint64_t, const SieveOptions&);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
  std::vector<u128> square_prefix_;
};

/// Segmented sieve of Eratosthenes over odd numbers. Working memory is
/// O(sqrt(limit) + segment_size) beyond the output itself.
PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options = {});

/// Estimated bytes of a PrimeTable with the given limit (upper bound).
std::uint64_t estimated_table_bytes(std::uint64_t limit);

/// pi(n), the number of primes <= n. Requires n <= table.limit().
std::uint64_t prime_count(std::uint64_t n, const PrimeTable& table);

}  // namespace cpsq
