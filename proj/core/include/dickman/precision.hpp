#ifndef DICKMAN_PRECISION_HPP
#define DICKMAN_PRECISION_HPP

#include <memory>
#include <vector>

#include "dickman/rational.hpp"
#include "dickman/real.hpp"

namespace dickman {

// Fundamental constants materialized once per working precision.
// Even zeta values are never stored: they are always derived from pi (and
// exact Bernoulli numbers), so closed-form comparisons stay exact in pi.
struct FundamentalConstants {
  Real pi;
  Real euler_gamma;
  Real log2;
  Real log3;
  std::vector<Real> zeta_odd_table;  // zeta(3), zeta(5), ..., zeta(13)

  explicit FundamentalConstants(mpfr_prec_t work_bits);
};

// Precision is an explicit parameter everywhere in this library.
//   work_bits    binary working precision of all Real arithmetic
//   guard_digits decimal digits sacrificed to rounding/truncation drift
//   target_digits decimal digits the caller wants certified
// Immutable after construction; safe to share across threads.
class PrecisionContext {
 public:
  PrecisionContext(int target_digits, int guard_digits);

  mpfr_prec_t work_bits() const { return work_bits_; }
  int guard_digits() const { return guard_digits_; }
  int target_digits() const { return target_digits_; }

  const FundamentalConstants& consts() const { return *consts_; }
  const Real& pi() const { return consts_->pi; }
  const Real& euler_gamma() const { return consts_->euler_gamma; }
  const Real& log2() const { return consts_->log2; }
  const Real& log3() const { return consts_->log3; }

  // Fresh values at work_bits.
  Real real(long n) const { return Real(n, work_bits_); }
  Real real(const Rational& q) const { return Real(q, work_bits_); }
  Real real(const std::string& dec) const { return Real(dec, work_bits_); }
  Real nan() const { return Real(work_bits_); }

  // 10^(-target_digits) and friends, for convergence tests.
  Real eps_target() const { return pow10(-target_digits_); }
  Real eps_target_guard() const { return pow10(-(target_digits_ + guard_digits_)); }
  Real pow10(long e) const;

 private:
  int target_digits_;
  int guard_digits_;
  mpfr_prec_t work_bits_;
  std::shared_ptr<const FundamentalConstants> consts_;
};

// Builds a context for `target_digits` certified decimal digits.
// guard_digits = 10 for target >= 20, else the floor of 5;
// work_bits = ceil((target+guard) * log2(10)).
// Throws ParameterError unless 10 <= target_digits <= 1000.
PrecisionContext make_context(int target_digits);

// zeta(n) for odd n in {3,...,13}, cached per context precision.
// |returned - zeta(n)| < 2^(-work_bits+4).
Real zeta_odd(int n, const PrecisionContext& ctx);

// zeta(2m) = (2 pi)^(2m) |B_2m| / (2 (2m)!), exact in pi.
Real zeta_even(int two_m, const PrecisionContext& ctx);

// zeta/eta at arbitrary integer arguments <= 13 (negative included), used by
// the polylog expansions about x = 1 and x = -1. eta is entire; eta(1) = log 2.
Real zeta_int(int m, const PrecisionContext& ctx);
Real eta_int(int m, const PrecisionContext& ctx);

// Exact Bernoulli number B_n (B_1 = -1/2). Global grow-only cache.
Rational bernoulli(unsigned n);

}  // namespace dickman

#endif
