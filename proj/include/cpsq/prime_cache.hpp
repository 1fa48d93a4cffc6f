#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpsq/prime_table.hpp"

namespace cpsq {

// Layout: "CPSQ1", limit (u64 LE), count (u64 LE), count primes (u64 LE each).
inline constexpr std::string_view kCacheMagic = "CPSQ1";
inline constexpr std::string_view kCacheFileName = "primes.cpsq";

class cache_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> encode_prime_cache(const PrimeTable& table);

/// Parses a cache image; prefix sums are rebuilt and the prime list is
/// re-validated. Throws cache_error on any malformed input.
PrimeTable decode_prime_cache(const std::vector<std::uint8_t>& bytes);

void write_prime_cache(const std::filesystem::path& file, const PrimeTable& table);
PrimeTable read_prime_cache(const std::filesystem::path& file);

/// CPSQ_CACHE_DIR, else $XDG_CACHE_HOME/cpsq, else $HOME/.cache/cpsq.
/// Empty when none of these can be determined.
std::filesystem::path default_cache_dir();

/// Returns a table with exactly the requested limit, reusing the cached
/// table in `cache_dir` when it reaches far enough and replacing it with a
/// fresh sieve otherwise. Cache I/O failures fall back to sieving.
PrimeTable load_or_sieve(std::uint64_t limit, const std::optional<std::filesystem::path>& cache_dir,
                         const SieveOptions& options = {});

}  // namespace cpsq
