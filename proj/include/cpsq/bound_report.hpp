#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cpsq {

enum class Verdict { pass, fail, inconclusive };

/// Sign of a checked inequality, read as "lhs <relation> rhs".
enum class Relation { less, less_equal, greater, greater_equal, equal };

std::string_view to_string(Verdict v);
std::string_view to_string(Relation r);
Verdict parse_verdict(std::string_view s);
Relation parse_relation(std::string_view s);

/// Relative distance below which two reals are considered indistinguishable.
inline constexpr double kRelativeMargin = 1e-12;
/// Absolute floor on the margin, in units in the last place.
inline constexpr int kUlpMargin = 4;

/// Compares two binary64 values. Results closer than the FP margin yield
/// inconclusive, except that bit-identical values satisfy <=, >= and =.
Verdict compare_real(double lhs, Relation rel, double rhs);

/// Compares two exact integers; never inconclusive.
Verdict compare_exact(std::uint64_t lhs, Relation rel, std::uint64_t rhs);

/// fail beats inconclusive beats pass.
Verdict combine(Verdict a, Verdict b);

/// One evaluated inequality.
struct BoundReport {
  std::string label;
  std::uint64_t x_or_m = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<std::uint64_t> observed;
  bool applicable = true;
  Verdict verdict = Verdict::inconclusive;
  Relation relation = Relation::less;
  /// Extra lemma parameter such as the exponent alpha.
  std::optional<double> parameter;
  /// false for checks that are recorded but must not gate an exit status.
  bool asserted = true;

  bool operator==(const BoundReport&) const = default;
};

/// Relative gap between the two sides; smaller means a tighter check.
double relative_slack(const BoundReport& report);

/// True when the report should count against an all-pass verdict.
inline bool is_failure(const BoundReport& r) {
  return r.asserted && r.applicable && r.verdict != Verdict::pass;
}

}  // namespace cpsq
