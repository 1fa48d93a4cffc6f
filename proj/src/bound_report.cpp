#include "cpsq/bound_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cpsq {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict: " + std::string(s));
}

Relation parse_relation(std::string_view s) {
  for (Relation r : {Relation::less, Relation::less_equal, Relation::greater,
                     Relation::greater_equal, Relation::equal}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown relation: " + std::string(s));
}

Verdict compare_real(double lhs, Relation rel, double rhs) {
  if (std::isnan(lhs) || std::isnan(rhs)) return Verdict::inconclusive;
  if (lhs == rhs) {
    const bool holds = rel == Relation::less_equal || rel == Relation::greater_equal ||
                       rel == Relation::equal;
    return holds ? Verdict::pass : Verdict::inconclusive;
  }
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
  const double margin = std::max(kRelativeMargin * scale, kUlpMargin * ulp);
  if (std::abs(lhs - rhs) <= margin) return Verdict::inconclusive;
  switch (rel) {
    case Relation::less:
    case Relation::less_equal: return lhs < rhs ? Verdict::pass : Verdict::fail;
    case Relation::greater:
    case Relation::greater_equal: return lhs > rhs ? Verdict::pass : Verdict::fail;
    case Relation::equal: return Verdict::fail;
  }
  return Verdict::inconclusive;
}

Verdict compare_exact(std::uint64_t lhs, Relation rel, std::uint64_t rhs) {
  bool holds = false;
  switch (rel) {
    case Relation::less: holds = lhs < rhs; break;
    case Relation::less_equal: holds = lhs <= rhs; break;
    case Relation::greater: holds = lhs > rhs; break;
    case Relation::greater_equal: holds = lhs >= rhs; break;
    case Relation::equal: holds = lhs == rhs; break;
  }
  return holds ? Verdict::pass : Verdict::fail;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

double relative_slack(const BoundReport& report) {
  const double scale = std::max({std::abs(report.lhs), std::abs(report.rhs), 1e-300});
  return std::abs(report.rhs - report.lhs) / scale;
}

}  // namespace cpsq
