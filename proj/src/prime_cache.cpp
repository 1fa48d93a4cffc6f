#include "cpsq/prime_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <system_error>

#include <fmt/format.h>

namespace cpsq {

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::vector<std::uint8_t>& in, std::size_t offset) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in[offset + static_cast<std::size_t>(i)];
  return v;
}

constexpr std::size_t kHeaderSize = kCacheMagic.size() + 16;

}  // namespace

std::vector<std::uint8_t> encode_prime_cache(const PrimeTable& table) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + 8 * table.size());
  out.insert(out.end(), kCacheMagic.begin(), kCacheMagic.end());
  put_u64(out, table.limit());
  put_u64(out, table.size());
  for (std::uint64_t p : table.primes()) put_u64(out, p);
  return out;
}

PrimeTable decode_prime_cache(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), kCacheMagic.size()) !=
          kCacheMagic) {
    throw cache_error("not a prime cache (bad magic)");
  }
  const std::uint64_t limit = get_u64(bytes, kCacheMagic.size());
  const std::uint64_t count = get_u64(bytes, kCacheMagic.size() + 8);
  if (count > (bytes.size() - kHeaderSize) / 8 || bytes.size() != kHeaderSize + 8 * count) {
    throw cache_error(fmt::format("prime cache declares {} primes but holds {} bytes of data", count,
                                  bytes.size() - kHeaderSize));
  }
  std::vector<std::uint64_t> primes(count);
  for (std::uint64_t k = 0; k < count; ++k) primes[k] = get_u64(bytes, kHeaderSize + 8 * k);
  try {
    return PrimeTable::from_primes(limit, std::move(primes));
  } catch (const std::invalid_argument& e) {
    throw cache_error(fmt::format("prime cache failed validation: {}", e.what()));
  }
}

void write_prime_cache(const std::filesystem::path& file, const PrimeTable& table) {
  const auto bytes = encode_prime_cache(table);
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw cache_error(fmt::format("cannot write {}", tmp.string()));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw cache_error(fmt::format("short write to {}", tmp.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw cache_error(fmt::format("cannot move cache into place: {}", ec.message()));
}

PrimeTable read_prime_cache(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw cache_error(fmt::format("cannot open {}", file.string()));
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_prime_cache(bytes);
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("CPSQ_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "cpsq";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "cpsq";
  }
  return {};
}

PrimeTable load_or_sieve(std::uint64_t limit, const std::optional<std::filesystem::path>& cache_dir,
                         const SieveOptions& options) {
  if (!cache_dir || cache_dir->empty()) return sieve_primes(limit, options);

  const auto file = *cache_dir / kCacheFileName;
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    try {
      PrimeTable cached = read_prime_cache(file);
      if (cached.limit() >= limit) return cached.truncated(limit);
    } catch (const cache_error&) {
      // unreadable caches are simply rebuilt
    }
  }

  PrimeTable table = sieve_primes(limit, options);
  try {
    std::filesystem::create_directories(*cache_dir, ec);
    write_prime_cache(file, table);
  } catch (const cache_error&) {
    // a read-only cache location still yields a usable table
  }
  return table;
}

}  // namespace cpsq
