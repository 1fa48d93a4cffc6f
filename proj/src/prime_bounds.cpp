#include "cpsq/prime_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace cpsq {

DusartCheck check_dusart(std::uint64_t n, const PrimeTable& table) {
  if (n < 2) throw std::domain_error(fmt::format("Dusart bounds need N >= 2, got {}", n));
  DusartCheck c;
  c.n = n;
  c.pi_value = prime_count(n, table);
  const double base = static_cast<double>(n) / std::log(static_cast<double>(n));
  c.lower_value = base;
  c.upper_value = kDusartUpper * base;
  c.lower_applicable = n >= kDusartLowerFrom;
  c.upper_applicable = true;

  const double pi = static_cast<double>(c.pi_value);
  Verdict v = compare_real(pi, Relation::less, c.upper_value);
  if (c.lower_applicable) v = combine(v, compare_real(c.lower_value, Relation::less, pi));
  c.verdict = v;
  c.passed = v == Verdict::pass;
  return c;
}

BoundReport dusart_lower_report(const DusartCheck& check) {
  BoundReport r;
  r.label = "dusart-lower";
  r.x_or_m = check.n;
  r.lhs = check.lower_value;
  r.rhs = static_cast<double>(check.pi_value);
  r.observed = check.pi_value;
  r.relation = Relation::less;
  r.applicable = check.lower_applicable;
  r.verdict = compare_real(r.lhs, r.relation, r.rhs);
  return r;
}

BoundReport dusart_upper_report(const DusartCheck& check) {
  BoundReport r;
  r.label = "dusart-upper";
  r.x_or_m = check.n;
  r.lhs = static_cast<double>(check.pi_value);
  r.rhs = check.upper_value;
  r.observed = check.pi_value;
  r.relation = Relation::less;
  r.applicable = check.upper_applicable;
  r.verdict = compare_real(r.lhs, r.relation, r.rhs);
  return r;
}

BoundReport check_rosser(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw std::domain_error("Rosser's bound is indexed from n = 1");
  if (n > table.size()) {
    throw std::out_of_range(fmt::format("p_{} is beyond the {} primes up to {}", n, table.size(),
                                        table.limit()));
  }
  BoundReport r;
  r.label = "rosser";
  r.x_or_m = n;
  const std::uint64_t p = table.prime(n);
  r.observed = p;
  r.lhs = static_cast<double>(p);
  // log 1 = 0 makes n = 1 the trivial case 2 > 0
  r.rhs = static_cast<double>(n) * std::log(static_cast<double>(n));
  r.relation = Relation::greater;
  r.verdict = compare_real(r.lhs, r.relation, r.rhs);
  return r;
}

}  // namespace cpsq
