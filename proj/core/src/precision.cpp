#include "dickman/precision.hpp"

#include <cmath>
#include <mutex>

#include "dickman/errors.hpp"

namespace dickman {

FundamentalConstants::FundamentalConstants(mpfr_prec_t work_bits)
    : pi(work_bits),
      euler_gamma(work_bits),
      log2(work_bits),
      log3(work_bits) {
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  mpfr_const_euler(euler_gamma.raw(), MPFR_RNDN);
  mpfr_const_log2(log2.raw(), MPFR_RNDN);
  Real three(3, work_bits);
  mpfr_log(log3.raw(), three.raw(), MPFR_RNDN);
  zeta_odd_table.reserve(6);
  for (unsigned n = 3; n <= 13; n += 2) {
    Real z(work_bits);
    mpfr_zeta_ui(z.raw(), n, MPFR_RNDN);
    zeta_odd_table.push_back(std::move(z));
  }
}

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_digits_(target_digits), guard_digits_(guard_digits) {
  if (target_digits < 1) throw ParameterError("target_digits must be positive");
  if (guard_digits < 0) throw ParameterError("guard_digits must be non-negative");
  const double log2_10 = 3.321928094887362;
  work_bits_ = static_cast<mpfr_prec_t>(
      std::ceil((target_digits + guard_digits) * log2_10));
  consts_ = std::make_shared<FundamentalConstants>(work_bits_);
}

Real PrecisionContext::pow10(long e) const {
  Real ten(10, work_bits_);
  return pow_si(ten, e);
}

PrecisionContext make_context(int target_digits) {
  if (target_digits < 10 || target_digits > 1000)
    throw ParameterError("target_digits out of range [10, 1000]: " +
                         std::to_string(target_digits));
  int guard = target_digits >= 20 ? 10 : 5;
  return PrecisionContext(target_digits, guard);
}

Real zeta_odd(int n, const PrecisionContext& ctx) {
  if (n < 3 || n > 13 || n % 2 == 0)
    throw ParameterError("zeta_odd: n must be odd in [3, 13], got " +
                         std::to_string(n));
  return ctx.consts().zeta_odd_table[static_cast<std::size_t>((n - 3) / 2)];
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache;  // cache[m] = B_m
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(Rational(1));      // B_0
    cache.push_back(Rational(-1, 2));  // B_1
  }
  // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    if (m % 2 == 1) {
      cache.push_back(Rational(0));
      continue;
    }
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) {
      if (cache[j].is_zero()) continue;
      acc += Rational::binomial(m + 1, j) * cache[j];
    }
    Rational bm = -acc / Rational(static_cast<long>(m) + 1);
    cache.push_back(std::move(bm));
  }
  return cache[n];
}

Real zeta_even(int two_m, const PrecisionContext& ctx) {
  if (two_m < 2 || two_m % 2 != 0)
    throw ParameterError("zeta_even: argument must be a positive even integer");
  // zeta(2m) = (2 pi)^(2m) |B_2m| / (2 (2m)!)
  Rational factor = bernoulli(static_cast<unsigned>(two_m)).abs();
  for (int i = 1; i <= two_m; ++i) factor /= Rational(i);
  factor /= Rational(2);
  return pow_si(2 * ctx.pi(), two_m) * ctx.real(factor);
}

Real zeta_int(int m, const PrecisionContext& ctx) {
  if (m > 13) throw ParameterError("zeta_int: argument above stored table");
  if (m >= 2) return m % 2 == 0 ? zeta_even(m, ctx) : zeta_odd(m, ctx);
  if (m == 1) throw ParameterError("zeta_int: pole at 1");
  if (m == 0) return ctx.real(Rational(-1, 2));
  // trivial zeros at negative even; zeta(-n) = -B_{n+1}/(n+1) otherwise
  int n = -m;
  if (n % 2 == 0) return ctx.real(0);
  return ctx.real(-bernoulli(static_cast<unsigned>(n) + 1) /
                  Rational(static_cast<long>(n) + 1));
}

Real eta_int(int m, const PrecisionContext& ctx) {
  if (m > 13) throw ParameterError("eta_int: argument above stored table");
  if (m >= 2) {
    // eta(s) = (1 - 2^(1-s)) zeta(s)
    return (1 - pow2(1 - m, ctx.work_bits())) * zeta_int(m, ctx);
  }
  if (m == 1) return ctx.log2();
  if (m == 0) return ctx.real(Rational(1, 2));
  // eta(-n) = (2^(n+1) - 1) B_{n+1} / (n+1)
  int n = -m;
  Rational c = (Rational::pow2(n + 1) - Rational(1)) *
               bernoulli(static_cast<unsigned>(n) + 1) /
               Rational(static_cast<long>(n) + 1);
  return ctx.real(c);
}

}  // namespace dickman
