#include "cpsq/windows.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "cpsq/errors.hpp"

namespace cpsq {

void require_coverage(std::uint64_t x, const PrimeTable& table) {
  const std::uint64_t needed = isqrt(x);
  if (table.limit() < needed) {
    throw precondition_error(
        fmt::format("x = {} needs primes up to {} but the table stops at {}", x, needed, table.limit()),
        needed);
  }
}

std::vector<Representation> enumerate_representations(std::uint64_t x, const PrimeTable& table) {
  std::vector<Representation> out;
  for_each_representation(x, table, [&](const Representation& r) { out.push_back(r); });
  return out;
}

CountReport count_sums(std::uint64_t x, const PrimeTable& table) {
  CountReport report;
  report.x = x;
  std::vector<std::uint64_t> by_length(1, 0);
  std::uint64_t last_value = 0;
  for_each_representation_by_value(x, table, [&](const Representation& r) {
    ++report.multiplicity_count;
    if (report.multiplicity_count == 1 || r.value != last_value) ++report.distinct_count;
    last_value = r.value;
    if (r.length >= by_length.size()) by_length.resize(r.length + 1, 0);
    ++by_length[r.length];
  });
  for (std::size_t m = 1; m < by_length.size(); ++m) {
    if (by_length[m] != 0) report.per_length.emplace(m, by_length[m]);
  }
  report.max_length_seen = by_length.size() - 1;
  return report;
}

std::uint64_t scp_m(std::uint64_t x, std::uint64_t m, const PrimeTable& table) {
  if (m == 0) throw std::invalid_argument("window length m must be at least 1");
  require_coverage(x, table);
  const auto prefix = table.square_prefix();
  const std::size_t count = table.size();
  if (m > count || prefix[m] > x) return 0;
  // window sums grow with the start index, so the qualifying starts form a prefix
  std::uint64_t lo = 1, hi = count - m + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (prefix[mid + m - 1] - prefix[mid - 1] <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::vector<Representation> find_representations(std::uint64_t target, const PrimeTable& table) {
  require_coverage(target, table);
  const auto primes = table.primes();
  std::vector<Representation> found;
  u128 sum = 0;
  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < primes.size(); ++hi) {
    const u128 square = static_cast<u128>(primes[hi]) * primes[hi];
    if (square > target) break;
    sum += square;
    while (sum > target) {
      sum -= static_cast<u128>(primes[lo]) * primes[lo];
      ++lo;
    }
    if (sum == target) found.push_back(Representation{lo + 1, hi - lo + 1, target});
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<std::uint64_t> table_up_to(std::uint64_t x, const PrimeTable& table) {
  std::vector<std::uint64_t> values;
  for_each_representation_by_value(x, table, [&](const Representation& r) {
    if (values.empty() || values.back() != r.value) values.push_back(r.value);
  });
  return values;
}

std::uint64_t exact_max_window(std::uint64_t x, const PrimeTable& table) {
  require_coverage(x, table);
  const auto prefix = table.square_prefix();
  const auto past = std::upper_bound(prefix.begin(), prefix.end(), static_cast<u128>(x));
  return static_cast<std::uint64_t>(past - prefix.begin()) - 1;
}

std::vector<Representation> colliding_representations(std::uint64_t x, const PrimeTable& table) {
  std::vector<Representation> out;
  std::vector<Representation> run;
  auto flush = [&] {
    if (run.size() > 1) out.insert(out.end(), run.begin(), run.end());
    run.clear();
  };
  for_each_representation_by_value(x, table, [&](const Representation& r) {
    if (!run.empty() && run.front().value != r.value) flush();
    run.push_back(r);
  });
  flush();
  return out;
}

}  // namespace cpsq
