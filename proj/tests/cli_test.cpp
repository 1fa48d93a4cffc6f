#include "cpsq/cli.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "cpsq/reference_table.hpp"

namespace cpsq {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "cpsq");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseMagnitude, Forms) {
  EXPECT_EQ(parse_magnitude("2020"), 2020u);
  EXPECT_EQ(parse_magnitude("10^12"), 1'000'000'000'000ULL);
  EXPECT_EQ(parse_magnitude("1e12"), 1'000'000'000'000ULL);
  EXPECT_EQ(parse_magnitude("2^10"), 1024u);
  EXPECT_EQ(parse_magnitude("2^63"), std::uint64_t{1} << 63);
}

TEST(ParseMagnitude, Rejects) {
  EXPECT_THROW(parse_magnitude(""), std::invalid_argument);
  EXPECT_THROW(parse_magnitude("-5"), std::invalid_argument);
  EXPECT_THROW(parse_magnitude("12abc"), std::invalid_argument);
  EXPECT_THROW(parse_magnitude("99999999999999999999"), std::invalid_argument);
  EXPECT_THROW(parse_magnitude("1e20"), std::invalid_argument);
  EXPECT_THROW(parse_magnitude("2^64"), std::invalid_argument);
  EXPECT_THROW(parse_magnitude("1.5e3"), std::invalid_argument);
}

TEST(Cli, Find2020) {
  const auto r = invoke({"--no-cache", "find", "2020"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2020 = 17^2 + 19^2 + 23^2 + 29^2\n");
}

TEST(Cli, FindNothing) {
  const auto r = invoke({"--no-cache", "find", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "no representation\n");
  EXPECT_EQ(invoke({"--no-cache", "--format", "json", "find", "6"}).out, "[]\n");
}

TEST(Cli, FindJson) {
  const auto r = invoke({"--no-cache", "--format", "json", "find", "2189"});
  EXPECT_EQ(r.code, kExitOk);
  const auto reps = parse_json_array<Representation>(r.out);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0], (Representation{6, 5, 2189}));
}

TEST(Cli, ListMatchesReference) {
  const auto r = invoke({"--no-cache", "list", "5000"});
  EXPECT_EQ(r.code, kExitOk);
  std::string expected;
  for (auto v : kReferenceTable) expected += std::to_string(v) + "\n";
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, Count) {
  const auto r = invoke({"--no-cache", "--format", "json", "count", "5000"});
  EXPECT_EQ(r.code, kExitOk);
  const auto reports = parse_json_array<CountReport>(r.out);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].distinct_count, 91u);
  EXPECT_EQ(reports[0].max_length_seen, 12u);
  EXPECT_EQ(invoke({"--no-cache", "--count-mode", "distinct", "count", "100"}).out,
            "x=100 distinct_count=10 max_length_seen=4\n");
}

TEST(Cli, Maxlen) {
  const auto r = invoke({"--no-cache", "maxlen", "5000"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "x=5000 analytic_M=19 exact_M=12\n");
}

TEST(Cli, TableCheck) {
  const auto r = invoke({"--no-cache", "table-check"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("table-check: pass"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
  const auto r = invoke({"--no-cache", "verify", "5000"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("verify: pass"), std::string::npos);
}

TEST(Cli, VerifyFailsWithTooSmallConstant) {
  const auto r = invoke({"--no-cache", "--upper-constant", "1", "verify", "5000"});
  EXPECT_EQ(r.code, kExitBoundFailed);
  EXPECT_NE(r.out.find("verify: FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"count"}).code, kExitUsage);
  EXPECT_EQ(invoke({"count", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "count", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, ResourceExhaustion) {
  const auto r = invoke({"--no-cache", "count", "18446744073709551615"});
  EXPECT_EQ(r.code, kExitResource);
  EXPECT_FALSE(r.err.empty());
}

TEST(ReferenceComparison, DetectsPerturbation) {
  const std::vector<std::uint64_t> reference(kReferenceTable.begin(), kReferenceTable.end());
  EXPECT_TRUE(compare_with_reference(reference, reference).matches);

  auto perturbed = reference;
  perturbed[40] += 1;
  const auto a = compare_with_reference(perturbed, reference);
  EXPECT_FALSE(a.matches);
  EXPECT_EQ(a.first_mismatch, 40u);

  auto shorter = reference;
  shorter.pop_back();
  const auto b = compare_with_reference(shorter, reference);
  EXPECT_FALSE(b.matches);
  EXPECT_EQ(b.computed_count, 90u);
  EXPECT_EQ(b.first_mismatch, 90u);
}

}  // namespace
}  // namespace cpsq
