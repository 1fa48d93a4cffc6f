#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <tuple>
#include <vector>

#include "cpsq/prime_table.hpp"

namespace cpsq {

/// A run of consecutive primes p_n, ..., p_{n+m-1} and the sum of their squares.
struct Representation {
  std::uint64_t start_index = 0;  // n, 1-based
  std::uint64_t length = 0;       // m
  std::uint64_t value = 0;

  bool operator==(const Representation&) const = default;
};

/// Canonical (m, n) ordering used by every enumeration output.
inline bool canonical_less(const Representation& a, const Representation& b) {
  return std::tie(a.length, a.start_index) < std::tie(b.length, b.start_index);
}

struct CountReport {
  std::uint64_t x = 0;
  std::uint64_t distinct_count = 0;      // |{values <= x}|
  std::uint64_t multiplicity_count = 0;  // |{(n, m) : window sum <= x}|
  std::map<std::uint64_t, std::uint64_t> per_length;  // m -> scp_m(x)
  std::uint64_t max_length_seen = 0;

  bool operator==(const CountReport&) const = default;
};

/// Throws precondition_error unless every prime <= sqrt(x) is in the table.
void require_coverage(std::uint64_t x, const PrimeTable& table);

/// Calls visit(Representation) for every window with sum <= x, in (m, n)
/// order. For each m the window [n, n+m-1] slides right until it exceeds x;
/// the scan stops at the first m whose leading window S_m exceeds x.
template <class Visitor>
void for_each_representation(std::uint64_t x, const PrimeTable& table, Visitor&& visit) {
  require_coverage(x, table);
  const auto prefix = table.square_prefix();
  const std::size_t count = table.size();
  for (std::size_t m = 1; m <= count && prefix[m] <= x; ++m) {
    for (std::size_t lo = 0, hi = m; hi <= count; ++lo, ++hi) {
      const u128 sum = prefix[hi] - prefix[lo];
      if (sum > x) break;
      visit(Representation{lo + 1, m, static_cast<std::uint64_t>(sum)});
    }
  }
}

/// Same windows as for_each_representation, but in ascending order of value
/// (ties by m). A k-way merge over the per-length sequences, each of which is
/// increasing in n, so memory stays O(number of lengths).
template <class Visitor>
void for_each_representation_by_value(std::uint64_t x, const PrimeTable& table, Visitor&& visit) {
  require_coverage(x, table);
  const auto prefix = table.square_prefix();
  const std::size_t count = table.size();

  using Cursor = std::tuple<std::uint64_t, std::size_t, std::size_t>;  // value, m, n
  std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> heads;
  for (std::size_t m = 1; m <= count && prefix[m] <= x; ++m) {
    heads.emplace(static_cast<std::uint64_t>(prefix[m]), m, 1);
  }
  while (!heads.empty()) {
    const auto [value, m, n] = heads.top();
    heads.pop();
    visit(Representation{n, m, value});
    if (n + m <= count) {
      const u128 next = prefix[n + m] - prefix[n];
      if (next <= x) heads.emplace(static_cast<std::uint64_t>(next), m, n + 1);
    }
  }
}

std::vector<Representation> enumerate_representations(std::uint64_t x, const PrimeTable& table);

/// scp(x) in both readings plus the per-length breakdown, from one pass.
CountReport count_sums(std::uint64_t x, const PrimeTable& table);

/// Number of length-m windows with sum <= x.
std::uint64_t scp_m(std::uint64_t x, std::uint64_t m, const PrimeTable& table);

/// Every window whose sum is exactly `target`, in (m, n) order.
std::vector<Representation> find_representations(std::uint64_t target, const PrimeTable& table);

/// Sorted distinct window sums <= x.
std::vector<std::uint64_t> table_up_to(std::uint64_t x, const PrimeTable& table);

/// Largest m with S_m <= x (0 when even 2^2 > x).
std::uint64_t exact_max_window(std::uint64_t x, const PrimeTable& table);

/// Representations of values <= x that have more than one representation,
/// ordered by value and then (m, n).
std::vector<Representation> colliding_representations(std::uint64_t x, const PrimeTable& table);

}  // namespace cpsq
