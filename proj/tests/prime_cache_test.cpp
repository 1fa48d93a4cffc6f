#include "cpsq/prime_cache.hpp"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

namespace cpsq {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("cpsq-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::uint64_t read_le(const std::vector<std::uint8_t>& b, std::size_t at) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{b[at + i]} << (8 * i);
  return v;
}

TEST(PrimeCache, ByteLayout) {
  const auto bytes = encode_prime_cache(sieve_primes(10));
  ASSERT_EQ(bytes.size(), 5u + 16u + 4u * 8u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 5), "CPSQ1");
  EXPECT_EQ(read_le(bytes, 5), 10u);
  EXPECT_EQ(read_le(bytes, 13), 4u);
  EXPECT_EQ(bytes[21], 2);
  EXPECT_EQ(bytes[22], 0);
  EXPECT_EQ(read_le(bytes, 45), 7u);
}

TEST(PrimeCache, RoundTrip) {
  for (std::uint64_t limit : {0u, 2u, 10u, 1000u, 123'457u}) {
    const auto table = sieve_primes(limit);
    const auto back = decode_prime_cache(encode_prime_cache(table));
    EXPECT_EQ(back.limit(), table.limit());
    ASSERT_EQ(back.size(), table.size());
    EXPECT_TRUE(std::equal(back.primes().begin(), back.primes().end(), table.primes().begin()));
    EXPECT_EQ(back.prefix(back.size()), table.prefix(table.size()));
  }
}

TEST(PrimeCache, RejectsMalformedImages) {
  auto good = encode_prime_cache(sieve_primes(100));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(decode_prime_cache(bad_magic), cache_error);

  auto truncated = good;
  truncated.pop_back();
  EXPECT_THROW(decode_prime_cache(truncated), cache_error);

  EXPECT_THROW(decode_prime_cache({}), cache_error);

  auto huge_count = good;
  huge_count[20] = 0xff;
  EXPECT_THROW(decode_prime_cache(huge_count), cache_error);

  auto composite = good;
  composite[21 + 8 * 3] = 9;  // 7 -> 9
  EXPECT_THROW(decode_prime_cache(composite), cache_error);

  auto wrong_limit = good;
  wrong_limit[5] = 200;  // primes stop at 97 but limit claims 200
  EXPECT_THROW(decode_prime_cache(wrong_limit), cache_error);
}

TEST(PrimeCache, FileRoundTrip) {
  TempDir dir;
  const auto file = dir.path() / "t.cpsq";
  write_prime_cache(file, sieve_primes(5000));
  const auto back = read_prime_cache(file);
  EXPECT_EQ(back.limit(), 5000u);
  EXPECT_EQ(back.size(), 669u);
  EXPECT_FALSE(fs::exists(dir.path() / "t.cpsq.tmp"));
  EXPECT_THROW(read_prime_cache(dir.path() / "missing"), cache_error);
}

TEST(LoadOrSieve, ReusesLargerCacheAndTruncates) {
  TempDir dir;
  const auto first = load_or_sieve(10'000, dir.path());
  EXPECT_EQ(first.limit(), 10'000u);
  ASSERT_TRUE(fs::exists(dir.path() / kCacheFileName));
  const auto size_before = fs::file_size(dir.path() / kCacheFileName);

  const auto smaller = load_or_sieve(100, dir.path());
  EXPECT_EQ(smaller.limit(), 100u);
  EXPECT_EQ(smaller.size(), 25u);
  EXPECT_EQ(fs::file_size(dir.path() / kCacheFileName), size_before);
}

TEST(LoadOrSieve, ReplacesTooSmallCache) {
  TempDir dir;
  load_or_sieve(100, dir.path());
  const auto bigger = load_or_sieve(20'000, dir.path());
  EXPECT_EQ(bigger.size(), 2262u);
  EXPECT_EQ(read_prime_cache(dir.path() / kCacheFileName).limit(), 20'000u);
}

TEST(LoadOrSieve, RebuildsCorruptCache) {
  TempDir dir;
  {
    std::ofstream out(dir.path() / kCacheFileName, std::ios::binary);
    out << "garbage that is not a cache";
  }
  const auto table = load_or_sieve(1000, dir.path());
  EXPECT_EQ(table.size(), 168u);
  EXPECT_EQ(read_prime_cache(dir.path() / kCacheFileName).size(), 168u);
}

TEST(LoadOrSieve, WorksWithoutCache) {
  EXPECT_EQ(load_or_sieve(1000, std::nullopt).size(), 168u);
  EXPECT_EQ(load_or_sieve(1000, fs::path{}).size(), 168u);
}

}  // namespace
}  // namespace cpsq
