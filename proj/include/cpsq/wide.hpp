#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace cpsq {

__extension__ typedef unsigned __int128 u128;

/// Largest r with r*r <= n.
inline std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // correct the double estimate in both directions
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

/// Narrowing that saturates; used where a 128-bit sum is reported as a 64-bit field.
constexpr std::uint64_t saturate_u64(u128 v) noexcept {
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  return v > top ? top : static_cast<std::uint64_t>(v);
}

}  // namespace cpsq
