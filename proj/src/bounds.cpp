#include "cpsq/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "cpsq/errors.hpp"
#include "cpsq/windows.hpp"

namespace cpsq {

namespace {

void require_log_positive(std::uint64_t x, const char* what) {
  if (x <= 1) throw std::domain_error(fmt::format("{} needs x > 1 (log x > 0), got {}", what, x));
}

BoundReport real_report(std::string label, std::uint64_t at, double lhs, Relation rel, double rhs) {
  BoundReport r;
  r.label = std::move(label);
  r.x_or_m = at;
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = rel;
  r.verdict = compare_real(lhs, rel, rhs);
  return r;
}

BoundReport exact_report(std::string label, std::uint64_t at, std::uint64_t lhs, Relation rel,
                         std::uint64_t rhs) {
  BoundReport r;
  r.label = std::move(label);
  r.x_or_m = at;
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  r.relation = rel;
  r.verdict = compare_exact(lhs, rel, rhs);
  return r;
}

long double n_log_n_squared(std::uint64_t n) {
  const long double v = static_cast<long double>(n) * std::log(static_cast<long double>(n));
  return v * v;
}

}  // namespace

double upper_constant_unrounded() { return kCappedConstant * std::pow(108.0, 1.0 / 6.0); }

double theorem_lower(std::uint64_t x) {
  require_log_positive(x, "theorem_lower");
  const double xd = static_cast<double>(x);
  return 2.0 * std::sqrt(xd) / std::log(xd);
}

double theorem_upper(std::uint64_t x, double constant) {
  require_log_positive(x, "theorem_upper");
  const double xd = static_cast<double>(x);
  return constant * std::cbrt(xd * xd) / std::pow(std::log(xd), 4.0 / 3.0);
}

std::uint64_t analytic_window_cap(std::uint64_t x) {
  if (x < 2) throw std::domain_error(fmt::format("the window cap needs x >= 2, got {}", x));
  const double xd = static_cast<double>(x);
  const double cap = std::cbrt(108.0) * std::cbrt(xd) * std::pow(std::log(xd), -2.0 / 3.0);
  return static_cast<std::uint64_t>(std::floor(cap));
}

WindowCap analytic_max_window(std::uint64_t x, const PrimeTable& table) {
  WindowCap cap;
  cap.x = x;
  cap.analytic_M = analytic_window_cap(x);
  cap.exact_M = exact_max_window(x, table);
  return cap;
}

std::array<BoundReport, 3> eq2_links(std::uint64_t x, std::uint64_t m, const PrimeTable& table) {
  if (m == 0) throw std::invalid_argument("window length m must be at least 1");
  if (x <= m) {
    throw applicability_error(fmt::format("the per-length bound needs x > m, got x={} m={}", x, m));
  }
  const std::uint64_t count = scp_m(x, m, table);
  const std::uint64_t pi = prime_count(isqrt(x / m), table);
  const double ratio = static_cast<double>(x) / static_cast<double>(m);
  const double root = std::sqrt(ratio);
  const double dusart = 1.2551 * root / (0.5 * std::log(ratio));
  const double final_bound = kPerLengthConstant * root / std::log(static_cast<double>(x));

  std::array<BoundReport, 3> links{
      exact_report("eq2-count", x, count, Relation::less_equal, pi),
      real_report("eq2-dusart", x, static_cast<double>(pi), Relation::less, dusart),
      real_report("eq2-final", x, dusart, Relation::less_equal, final_bound),
  };
  links[0].observed = count;
  links[1].observed = pi;
  links[2].asserted = false;
  for (auto& link : links) link.parameter = static_cast<double>(m);
  return links;
}

BoundReport check_eq2(std::uint64_t x, std::uint64_t m, const PrimeTable& table) {
  const auto links = eq2_links(x, m, table);
  BoundReport r;
  r.label = "eq2";
  r.x_or_m = x;
  r.parameter = static_cast<double>(m);
  r.observed = links[0].observed;
  r.lhs = links[0].lhs;
  r.rhs = links[2].rhs;
  r.relation = Relation::less;
  r.verdict = combine(combine(links[0].verdict, links[1].verdict), links[2].verdict);
  return r;
}

double weighted_square_sum(std::uint64_t M) {
  long double sum = 0.0L;
  for (std::uint64_t n = 2; n <= M; ++n) sum += n_log_n_squared(n);
  return static_cast<double>(sum);
}

BoundReport check_eq3_substitution(std::uint64_t x, const PrimeTable& table) {
  const std::uint64_t cap = analytic_window_cap(x);
  auto r = real_report("eq3-substitution", x, weighted_square_sum(cap), Relation::greater,
                       static_cast<double>(x));
  r.parameter = static_cast<double>(cap);
  r.applicable = cap >= 4;
  r.asserted = false;
  if (cap <= table.size()) r.observed = saturate_u64(table.prefix(cap));
  return r;
}

namespace {

BoundReport partial_sum_report(std::uint64_t M, double alpha, long double sum) {
  const double closed =
      (std::pow(static_cast<double>(M), 1.0 - alpha) - alpha) / (1.0 - alpha);
  auto r = real_report("partial-sum", M, static_cast<double>(sum), Relation::less, closed);
  r.parameter = alpha;
  r.applicable = M >= 2;
  return r;
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error(fmt::format("alpha must lie in (0, 1), got {}", alpha));
  }
}

}  // namespace

BoundReport check_partial_sum(std::uint64_t M, double alpha) {
  require_alpha(alpha);
  if (M == 0) throw std::invalid_argument("partial sums start at M = 1");
  long double sum = 0.0L;
  for (std::uint64_t m = M; m >= 1; --m) sum += std::pow(static_cast<long double>(m), -alpha);
  return partial_sum_report(M, alpha, sum);
}

std::vector<BoundReport> partial_sum_sweep(std::uint64_t max_M, double alpha) {
  require_alpha(alpha);
  std::vector<BoundReport> out;
  out.reserve(max_M);
  long double sum = 0.0L;
  for (std::uint64_t M = 1; M <= max_M; ++M) {
    sum += std::pow(static_cast<long double>(M), -alpha);
    out.push_back(partial_sum_report(M, alpha, sum));
  }
  return out;
}

namespace {

void require_weighted_range(std::uint64_t M) {
  if (M < 4) {
    throw applicability_error(fmt::format("the weighted-square bound needs M >= 4, got {}", M));
  }
}

long double cubic_bound(std::uint64_t M) {
  const long double logm = std::log(static_cast<long double>(M));
  const long double md = static_cast<long double>(M);
  return md * md * md * logm * logm / 12.0L;
}

std::uint64_t ceil_sqrt(std::uint64_t M) {
  std::uint64_t c = isqrt(M);
  return c * c < M ? c + 1 : c;
}

BoundReport weighted_main_report(std::uint64_t M, long double full) {
  return real_report("weighted-square", M, static_cast<double>(full), Relation::greater_equal,
                     static_cast<double>(cubic_bound(M)));
}

// head: terms below the cutoff, tail: terms from the cutoff to M,
// squares: sum of n^2 over the tail range
std::array<BoundReport, 3> weighted_step_reports(std::uint64_t M, long double head,
                                                 long double tail, u128 squares) {
  const long double half = std::log(static_cast<long double>(M)) / 2.0L;
  const long double scaled = half * half * static_cast<long double>(squares);
  return {
      real_report("weighted-square-tail", M, static_cast<double>(head + tail),
                  Relation::greater_equal, static_cast<double>(tail)),
      real_report("weighted-square-cutoff", M, static_cast<double>(tail), Relation::greater_equal,
                  static_cast<double>(scaled)),
      real_report("weighted-square-pyramid", M, static_cast<double>(scaled),
                  Relation::greater_equal, static_cast<double>(cubic_bound(M))),
  };
}

}  // namespace

BoundReport check_weighted_square(std::uint64_t M) {
  require_weighted_range(M);
  long double full = 0.0L;
  for (std::uint64_t n = 2; n <= M; ++n) full += n_log_n_squared(n);
  return weighted_main_report(M, full);
}

std::array<BoundReport, 3> weighted_square_steps(std::uint64_t M) {
  require_weighted_range(M);
  const std::uint64_t cutoff = ceil_sqrt(M);
  long double head = 0.0L, tail = 0.0L;
  u128 squares = 0;
  for (std::uint64_t n = 2; n <= M; ++n) {
    if (n < cutoff) {
      head += n_log_n_squared(n);
    } else {
      tail += n_log_n_squared(n);
      squares += static_cast<u128>(n) * n;
    }
  }
  return weighted_step_reports(M, head, tail, squares);
}

std::vector<BoundReport> weighted_square_sweep(std::uint64_t max_M) {
  std::vector<BoundReport> out;
  if (max_M < 4) return out;
  // running[k] = sum_{2<=n<=k} (n log n)^2
  std::vector<long double> running(max_M + 1, 0.0L);
  for (std::uint64_t n = 2; n <= max_M; ++n) running[n] = running[n - 1] + n_log_n_squared(n);
  out.reserve(4 * max_M);
  for (std::uint64_t M = 4; M <= max_M; ++M) {
    const std::uint64_t cutoff = ceil_sqrt(M);
    const long double head = running[cutoff - 1];
    const long double tail = running[M] - head;
    const u128 squares = pyramid_identity(M) - pyramid_identity(cutoff - 1);
    out.push_back(weighted_main_report(M, running[M]));
    for (auto& step : weighted_step_reports(M, head, tail, squares)) out.push_back(std::move(step));
  }
  return out;
}

u128 pyramid_identity(std::uint64_t M) {
  const u128 m = M;
  return m * (m + 1) * (2 * m + 1) / 6;
}

namespace {

BoundReport pyramid_report(std::uint64_t M, u128 direct) {
  const u128 closed = pyramid_identity(M);
  BoundReport r;
  r.label = "pyramid";
  r.x_or_m = M;
  r.lhs = static_cast<double>(direct);
  r.rhs = static_cast<double>(closed);
  r.relation = Relation::equal;
  r.observed = saturate_u64(closed);
  r.verdict = direct == closed ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace

BoundReport check_pyramid(std::uint64_t M) {
  u128 direct = 0;
  for (std::uint64_t n = 1; n <= M; ++n) direct += static_cast<u128>(n) * n;
  return pyramid_report(M, direct);
}

std::vector<BoundReport> pyramid_sweep(std::uint64_t max_M) {
  std::vector<BoundReport> out;
  out.reserve(max_M);
  u128 direct = 0;
  for (std::uint64_t M = 1; M <= max_M; ++M) {
    direct += static_cast<u128>(M) * M;
    out.push_back(pyramid_report(M, direct));
  }
  return out;
}

std::vector<BoundReport> verify_theorem(std::span<const std::uint64_t> x_values,
                                        const PrimeTable& table,
                                        const TheoremConstants& constants) {
  std::vector<BoundReport> out;
  for (std::uint64_t x : x_values) {
    const double lower = theorem_lower(x);
    const double upper = theorem_upper(x, constants.upper);
    const double upper_sharp = theorem_upper(x, constants.upper_unrounded);
    const CountReport counts = count_sums(x, table);
    const std::uint64_t pi = prime_count(isqrt(x), table);
    const bool lower_ok = theorem_lower_applicable(x);

    struct Against {
      const char* suffix;
      std::uint64_t value;
    };
    const Against lower_targets[] = {{"", pi},
                                     {"-distinct", counts.distinct_count},
                                     {"-multiplicity", counts.multiplicity_count}};
    for (const auto& t : lower_targets) {
      auto r = real_report(std::string("theorem-lower") + t.suffix, x, lower, Relation::less,
                           static_cast<double>(t.value));
      r.observed = t.value;
      r.applicable = lower_ok;
      out.push_back(std::move(r));
    }

    auto chain = exact_report("pi-le-distinct", x, pi, Relation::less_equal, counts.distinct_count);
    chain.observed = counts.distinct_count;
    out.push_back(std::move(chain));
    auto dm = exact_report("distinct-le-multiplicity", x, counts.distinct_count,
                           Relation::less_equal, counts.multiplicity_count);
    dm.observed = counts.multiplicity_count;
    out.push_back(std::move(dm));

    const Against upper_targets[] = {{"-distinct", counts.distinct_count},
                                     {"-multiplicity", counts.multiplicity_count}};
    for (const auto& [label, bound] : {std::pair{"theorem-upper", upper},
                                       std::pair{"theorem-upper-unrounded", upper_sharp}}) {
      for (const auto& t : upper_targets) {
        auto r = real_report(std::string(label) + t.suffix, x, static_cast<double>(t.value),
                             Relation::less, bound);
        r.observed = t.value;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace cpsq
