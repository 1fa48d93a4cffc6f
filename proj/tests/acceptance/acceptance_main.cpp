// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cpsq/bounds.hpp"
#include "cpsq/cli.hpp"
#include "cpsq/prime_bounds.hpp"
#include "cpsq/reference_table.hpp"
#include "cpsq/windows.hpp"
#include "oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  fmt::print("[{}] {} {}\n", ok ? "PASS" : "FAIL", id, detail);
  std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli_capture(std::vector<const char*> args, int& code) {
  args.insert(args.begin(), "cpsq");
  std::ostringstream out, err;
  code = cpsq::run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return out.str();
}

const std::vector<std::uint64_t> kGrid{289,       1'000,      10'000,      100'000,
                                       1'000'000, 10'000'000, 100'000'000, 1'000'000'000};

void ac1_table() {
  const auto start = Clock::now();
  int code = 0;
  const auto out = run_cli_capture({"--no-cache", "list", "5000"}, code);
  const double t = seconds_since(start);
  std::string expected;
  for (auto v : cpsq::kReferenceTable) expected += std::to_string(v) + "\n";
  report("AC1", code == 0 && out == expected && t < 0.1,
         fmt::format("list 5000 byte-exact against the {}-value reference ({:.3f} s, limit 0.1 s)",
                     cpsq::kReferenceTable.size(), t));
}

void ac2_named() {
  const auto table = cpsq::sieve_primes(100);
  const auto a = cpsq::find_representations(2020, table);
  const auto b = cpsq::find_representations(2189, table);
  const bool ok = a.size() == 1 && a[0] == cpsq::Representation{7, 4, 2020} && b.size() == 1 &&
                  b[0] == cpsq::Representation{6, 5, 2189};
  report("AC2", ok,
         fmt::format("find 2020 -> {} representation(s), find 2189 -> {} representation(s)",
                     a.size(), b.size()));
}

void ac3_oracle() {
  const auto start = Clock::now();
  const auto table = cpsq::sieve_primes(400);
  const auto small_primes = cpsq::oracle::primes_up_to(400);
  std::uint64_t mismatched = 0, first_bad = 0;
  for (std::uint64_t x = 0; x <= 100'000; ++x) {
    const std::uint64_t root = cpsq::isqrt(x);
    std::vector<std::uint64_t> primes;
    for (auto p : small_primes) {
      if (p <= root) primes.push_back(p);
    }
    const auto expected = cpsq::oracle::brute_force_windows(x, primes);
    const auto got = cpsq::enumerate_representations(x, table);
    bool same = got.size() == expected.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].length == expected[i].length && got[i].start_index == expected[i].start &&
             got[i].value == expected[i].value;
    }
    if (!same && mismatched++ == 0) first_bad = x;
  }
  const double t = seconds_since(start);
  report("AC3", mismatched == 0 && t < 30,
         fmt::format("enumeration equals brute force for every x <= 100000 ({} mismatches{}; {:.2f} s, "
                     "limit 30 s)",
                     mismatched, mismatched ? fmt::format(", first at {}", first_bad) : "", t));
}

void ac4_theorem() {
  const auto start = Clock::now();
  const auto table = cpsq::sieve_primes(cpsq::isqrt(kGrid.back()));
  const auto reports = cpsq::verify_theorem(kGrid, table);
  std::size_t strict = 0, applicable = 0;
  for (const auto& r : reports) {
    if (!r.applicable) continue;
    ++applicable;
    if (r.verdict == cpsq::Verdict::pass) ++strict;
  }
  const double t = seconds_since(start);
  report("AC4", strict == applicable && applicable == reports.size() && t < 60,
         fmt::format("theorem bounds on the grid 289..1e9: {}/{} strict pass ({:.2f} s, limit 60 s)",
                     strict, applicable, t));
}

void ac5_scp1() {
  const auto table = cpsq::sieve_primes(10'000);
  std::mt19937_64 rng(20200);
  std::uniform_int_distribution<std::uint64_t> dist(1, 100'000'000);
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t x = dist(rng);
    const auto counts = cpsq::count_sums(x, table);
    const auto it = counts.per_length.find(1);
    const std::uint64_t scp1 = it == counts.per_length.end() ? 0 : it->second;
    if (scp1 == cpsq::prime_count(cpsq::isqrt(x), table)) ++agree;
  }
  report("AC5", agree == 200,
         fmt::format("scp_1(x) = pi(floor(sqrt x)) on {}/200 random x <= 1e8", agree));
}

void ac6_prime_bounds() {
  const auto start = Clock::now();
  const auto table = cpsq::sieve_primes(1'400'000);
  std::uint64_t dusart_ok = 0, rosser_ok = 0;
  for (std::uint64_t n = 2; n <= 1'000'000; ++n) {
    if (cpsq::check_dusart(n, table).passed) ++dusart_ok;
  }
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    if (cpsq::check_rosser(n, table).verdict == cpsq::Verdict::pass) ++rosser_ok;
  }
  const double t = seconds_since(start);
  report("AC6", dusart_ok == 999'999 && rosser_ok == 100'000 && t < 10,
         fmt::format("Dusart {}/999999 for N <= 1e6, Rosser {}/100000 for n <= 1e5 ({:.2f} s, limit 10 s)",
                     dusart_ok, rosser_ok, t));
}

void ac7_lemmas() {
  const auto start = Clock::now();
  std::uint64_t checked = 0, passed = 0;
  auto tally = [&](const std::vector<cpsq::BoundReport>& reports) {
    for (const auto& r : reports) {
      if (!r.applicable) continue;
      ++checked;
      if (r.verdict == cpsq::Verdict::pass) ++passed;
    }
  };
  for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9}) tally(cpsq::partial_sum_sweep(10'000, alpha));
  tally(cpsq::weighted_square_sweep(10'000));
  tally(cpsq::pyramid_sweep(10'000));
  const double t = seconds_since(start);
  report("AC7", checked == passed && checked > 0 && t < 5,
         fmt::format("partial sums, weighted squares and pyramid identity: {}/{} pass ({:.2f} s, "
                     "limit 5 s)",
                     passed, checked, t));
}

void ac8_decomposition() {
  const auto table = cpsq::sieve_primes(cpsq::isqrt(kGrid.back()));
  int ok = 0;
  for (auto x : kGrid) {
    const auto counts = cpsq::count_sums(x, table);
    const auto cap = cpsq::analytic_max_window(x, table);
    std::uint64_t total = 0;
    for (std::uint64_t m = 1; m <= cap.exact_M + 1; ++m) total += cpsq::scp_m(x, m, table);
    if (total == counts.multiplicity_count && counts.max_length_seen == cap.exact_M) ++ok;
  }
  report("AC8", ok == static_cast<int>(kGrid.size()),
         fmt::format("multiplicity = sum of scp_m and max_length_seen = exact_M on {}/{} grid points",
                     ok, kGrid.size()));
}

void ac9_performance() {
  const std::uint64_t x = 1'000'000'000'000ULL;
  const auto start = Clock::now();
  const auto table = cpsq::sieve_primes(cpsq::isqrt(x));
  const auto counts = cpsq::count_sums(x, table);
  const double t = seconds_since(start);
  const double bound = cpsq::theorem_upper(x);
  report("AC9", t < 10 && static_cast<double>(counts.multiplicity_count) < bound,
         fmt::format("count 1e12: distinct {}, multiplicity {} < upper bound {:.0f} ({:.2f} s, limit 10 s)",
                     counts.distinct_count, counts.multiplicity_count, bound, t));
}

}  // namespace

int main() {
  ac1_table();
  ac2_named();
  ac3_oracle();
  ac4_theorem();
  ac5_scp1();
  ac6_prime_bounds();
  ac7_lemmas();
  ac8_decomposition();
  ac9_performance();
  fmt::print("{} of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
