#include "cpsq/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <stdexcept>

#include <fmt/format.h>

#include "cpsq/errors.hpp"

namespace cpsq {

namespace {

bool is_prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> odd_base_primes(std::uint64_t root) {
  std::vector<std::uint64_t> base;
  if (root < 3) return base;
  const std::uint64_t last = (root - 1) / 2;
  std::vector<std::uint8_t> composite(last + 1, 0);
  for (std::uint64_t i = 1; i <= last; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    base.push_back(p);
    for (std::uint64_t j = (p * p - 1) / 2; j <= last; j += p) composite[j] = 1;
  }
  return base;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
    : limit_(limit), primes_(std::move(primes)) {
  square_prefix_.reserve(primes_.size() + 1);
  square_prefix_.push_back(0);
  u128 running = 0;
  for (std::uint64_t p : primes_) {
    running += static_cast<u128>(p) * p;
    square_prefix_.push_back(running);
  }
}

PrimeTable PrimeTable::from_primes(std::uint64_t limit, std::vector<std::uint64_t> primes) {
  if (limit >= 2 && (primes.empty() || primes.front() != 2)) {
    throw std::invalid_argument(fmt::format("prime list for limit {} does not start at 2", limit));
  }
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const std::uint64_t p = primes[k];
    if (p > limit) {
      throw std::invalid_argument(fmt::format("prime {} exceeds the table limit {}", p, limit));
    }
    if (k == 0) continue;
    const std::uint64_t prev = primes[k - 1];
    if (p <= prev || p % 2 == 0) {
      throw std::invalid_argument(fmt::format("entry {} ({}) breaks the odd ascending order", k + 1, p));
    }
    // Bertrand: consecutive primes satisfy p_{k+1} < 2 p_k
    if (p / 2 >= prev) {
      throw std::invalid_argument(fmt::format("gap after {} is too wide, primes are missing", prev));
    }
  }
  if (!primes.empty() && limit / 2 >= primes.back()) {
    throw std::invalid_argument(fmt::format("no primes listed between {} and {}", primes.back(), limit));
  }
  // Full primality re-verification costs as much as re-sieving; check the
  // head of the list and an evenly spaced sample.
  const std::size_t stride = std::max<std::size_t>(1, primes.size() / 1024);
  for (std::size_t k = 0; k < primes.size(); k += (k < 1000 ? 1 : stride)) {
    if (!is_prime_by_trial_division(primes[k])) {
      throw std::invalid_argument(fmt::format("entry {} ({}) is composite", k + 1, primes[k]));
    }
  }
  return PrimeTable(limit, std::move(primes));
}

std::uint64_t PrimeTable::prime(std::size_t n) const {
  if (n == 0 || n > primes_.size()) {
    throw std::out_of_range(fmt::format("p_{} requested but the table up to {} holds {} primes", n,
                                        limit_, primes_.size()));
  }
  return primes_[n - 1];
}

u128 PrimeTable::prefix(std::size_t k) const {
  if (k >= square_prefix_.size()) {
    throw std::out_of_range(fmt::format("S_{} requested but the table up to {} holds {} primes", k,
                                        limit_, primes_.size()));
  }
  return square_prefix_[k];
}

u128 PrimeTable::window_sum(std::size_t start, std::size_t length) const {
  if (start == 0 || length == 0 || start - 1 + length > primes_.size()) {
    throw std::out_of_range(fmt::format("window (n={}, m={}) outside the table up to {}", start,
                                        length, limit_));
  }
  return square_prefix_[start - 1 + length] - square_prefix_[start - 1];
}

PrimeTable PrimeTable::truncated(std::uint64_t new_limit) const {
  if (new_limit > limit_) {
    throw std::invalid_argument(
        fmt::format("cannot extend a table from {} to {} by truncation", limit_, new_limit));
  }
  auto end = std::upper_bound(primes_.begin(), primes_.end(), new_limit);
  return PrimeTable(new_limit, std::vector<std::uint64_t>(primes_.begin(), end));
}

std::uint64_t estimated_table_bytes(std::uint64_t limit) {
  // pi(N) < 1.2551 N / log N for N > 1
  const double n = static_cast<double>(limit);
  const double count = limit < 17 ? 7.0 : 1.2551 * n / std::log(n);
  const double bytes = (count + 1.0) * double(sizeof(std::uint64_t) + sizeof(u128));
  return bytes >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(bytes);
}

PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options) {
  if (options.segment_size == 0) throw std::invalid_argument("segment size must be positive");
  const std::uint64_t bytes = estimated_table_bytes(limit);
  if (bytes > options.max_table_bytes) {
    throw resource_error(fmt::format("a prime table up to {} needs about {} bytes (budget {})",
                                     limit, bytes, options.max_table_bytes),
                         bytes);
  }

  try {
    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(bytes / (sizeof(std::uint64_t) + sizeof(u128))));
    if (limit >= 2) primes.push_back(2);
    if (limit < 3) return PrimeTable(limit, std::move(primes));

    const std::vector<std::uint64_t> base = odd_base_primes(isqrt(limit));
    // index i stands for the odd number 2i+1
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) next[k] = (base[k] * base[k] - 1) / 2;

    const std::uint64_t last = (limit - 1) / 2;
    const std::uint64_t span = std::min<std::uint64_t>(options.segment_size, last);
    std::vector<std::uint8_t> segment(span);
    for (std::uint64_t lo = 1; lo <= last; lo += span) {
      const std::uint64_t hi = std::min(lo + span, last + 1);
      std::fill(segment.begin(), segment.begin() + static_cast<std::ptrdiff_t>(hi - lo), 0);
      for (std::size_t k = 0; k < base.size(); ++k) {
        const std::uint64_t p = base[k];
        std::uint64_t j = next[k];
        for (; j < hi; j += p) segment[j - lo] = 1;
        next[k] = j;
      }
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (!segment[i - lo]) primes.push_back(2 * i + 1);
      }
    }
    return PrimeTable(limit, std::move(primes));
  } catch (const std::bad_alloc&) {
    throw resource_error(fmt::format("out of memory sieving primes up to {}", limit), bytes);
  }
}

std::uint64_t prime_count(std::uint64_t n, const PrimeTable& table) {
  if (n > table.limit()) {
    throw std::out_of_range(
        fmt::format("pi({}) requested but the prime table only reaches {}", n, table.limit()));
  }
  const auto primes = table.primes();
  return static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), n) -
                                    primes.begin());
}

}  // namespace cpsq
