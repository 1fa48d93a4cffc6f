#include "cpsq/verify.hpp"

#include <algorithm>
#include <cmath>

#include "cpsq/prime_bounds.hpp"
#include "cpsq/windows.hpp"

namespace cpsq {

namespace {

constexpr std::size_t kFailuresListedPerFamily = 5;

class FamilySet {
 public:
  FamilySet(VerifyResult& result) : result_(result) {}

  void add(const BoundReport& report) {
    auto it = std::find_if(result_.families.begin(), result_.families.end(),
                           [&](const FamilySummary& f) { return f.label == report.label; });
    if (it == result_.families.end()) {
      FamilySummary fresh;
      fresh.label = report.label;
      fresh.asserted = report.asserted;
      result_.families.push_back(std::move(fresh));
      it = std::prev(result_.families.end());
    }
    const std::uint64_t bad_before = it->failed + it->inconclusive;
    it->add(report);
    if (is_failure(report) && bad_before < kFailuresListedPerFamily) {
      result_.reports.push_back(report);
    }
  }

 private:
  VerifyResult& result_;
};

}  // namespace

void FamilySummary::add(const BoundReport& report) {
  ++checked;
  if (!report.applicable) {
    ++not_applicable;
    return;
  }
  switch (report.verdict) {
    case Verdict::pass: ++passed; break;
    case Verdict::fail: ++failed; return;
    case Verdict::inconclusive: ++inconclusive; return;
  }
  if (!tightest || relative_slack(report) < relative_slack(*tightest)) tightest = report;
}

bool VerifyResult::all_pass() const {
  const bool reports_ok = std::none_of(reports.begin(), reports.end(), is_failure);
  const bool families_ok =
      std::all_of(families.begin(), families.end(), [](const FamilySummary& f) { return f.clean(); });
  return reports_ok && families_ok;
}

std::uint64_t required_limit(const VerifyPlan& plan) {
  std::uint64_t limit = std::max<std::uint64_t>(plan.dusart_max, 2);
  for (std::uint64_t x : plan.grid) limit = std::max(limit, isqrt(x));
  if (plan.rosser_max >= 6) {
    // p_n < n (log n + log log n) for n >= 6
    const double n = static_cast<double>(plan.rosser_max);
    limit = std::max(limit, static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 1);
  } else {
    limit = std::max<std::uint64_t>(limit, 13);
  }
  return limit;
}

VerifyResult run_verification(const VerifyPlan& plan, const PrimeTable& table) {
  VerifyResult result;
  result.reports = verify_theorem(plan.grid, table, plan.constants);
  FamilySet families(result);

  for (std::uint64_t x : plan.grid) {
    result.reports.push_back(check_eq3_substitution(x, table));
    const std::uint64_t longest = exact_max_window(x, table);
    for (std::uint64_t m = 1; m <= longest && m < x; ++m) {
      for (const auto& link : eq2_links(x, m, table)) families.add(link);
    }
  }

  for (std::uint64_t n = 2; n <= plan.dusart_max; ++n) {
    const DusartCheck check = check_dusart(n, table);
    families.add(dusart_lower_report(check));
    families.add(dusart_upper_report(check));
  }
  for (std::uint64_t n = 1; n <= plan.rosser_max; ++n) families.add(check_rosser(n, table));

  for (double alpha : plan.alphas) {
    for (const auto& r : partial_sum_sweep(plan.lemma_max, alpha)) {
      if (r.x_or_m >= 2) families.add(r);
    }
  }
  for (const auto& r : weighted_square_sweep(plan.lemma_max)) families.add(r);
  for (const auto& r : pyramid_sweep(plan.lemma_max)) families.add(r);
  return result;
}

}  // namespace cpsq
