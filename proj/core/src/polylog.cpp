#include "dickman/polylog.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "dickman/errors.hpp"

namespace dickman {
namespace {

// Truncation rule: stop once two consecutive terms drop below 2^(-work-8).
// Two are required because the expansions about +-1 have exact zero terms at
// every other index (trivial zeros of zeta/eta at negative even integers).
Real term_floor(const PrecisionContext& ctx) {
  return pow2(-static_cast<long>(ctx.work_bits()) - 8, ctx.work_bits());
}

// sum_{n>=1} x^n / n^k for |x| < 1 (geometric tail).
Real li_direct(int k, const Real& x, const PrecisionContext& ctx) {
  const Real eps = term_floor(ctx);
  Real sum(0, ctx.work_bits());
  Real xn(1, ctx.work_bits());
  for (long n = 1; n < 1000000; ++n) {
    xn *= x;
    long nk = n;
    for (int i = 1; i < k; ++i) nk *= n;  // n < 2^15 for every reachable x
    Real term = xn / nk;
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum;
}

// Coefficient tables for the expansions about x = 1 (zeta) and x = -1 (eta),
// cached per (kind, weight, precision). Grow-only under a global mutex.
struct CoeffKey {
  bool eta;
  int weight;
  long prec;
  bool operator<(const CoeffKey& o) const {
    if (eta != o.eta) return eta < o.eta;
    if (weight != o.weight) return weight < o.weight;
    return prec < o.prec;
  }
};

using CoeffTable = std::shared_ptr<const std::vector<Real>>;

CoeffTable coeff_table(bool eta, int k, const PrecisionContext& ctx, std::size_t len) {
  static std::mutex mu;
  static std::map<CoeffKey, CoeffTable> cache;
  CoeffKey key{eta, k, static_cast<long>(ctx.work_bits())};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end() && it->second->size() >= len) return it->second;
  auto table = std::make_shared<std::vector<Real>>();
  table->reserve(len);
  Real jfact(1, ctx.work_bits());
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) jfact *= static_cast<long>(j);
    int m = k - static_cast<int>(j);
    if (eta) {
      table->push_back(eta_int(m, ctx) / jfact);
    } else {
      // the j = k-1 slot (zeta(1)) is handled separately by the caller
      table->push_back(m == 1 ? ctx.nan() : zeta_int(m, ctx) / jfact);
    }
  }
  cache[key] = table;
  return table;
}

std::size_t expansion_length(double ratio, const PrecisionContext& ctx, int k) {
  // terms decay like ratio^j; solve ratio^j = 2^-(work+16)
  double digits_per_term = -std::log2(ratio);
  auto n = static_cast<std::size_t>((static_cast<double>(ctx.work_bits()) + 16) /
                                    digits_per_term);
  return n + static_cast<std::size_t>(k) + 12;
}

// Li_k(e^u) = u^(k-1)/(k-1)! (H_{k-1} - log(-u)) + sum_{j != k-1} zeta(k-j) u^j/j!
// for u < 0, |u| < 2 pi. Used for x in (0.8, 1).
Real li_about_one(int k, const Real& x, const PrecisionContext& ctx) {
  const Real u = log(x);
  const double ratio = std::abs(u.to_double()) / 6.283185307179586;
  auto table = coeff_table(false, k, ctx, expansion_length(ratio, ctx, k));
  const Real eps = term_floor(ctx);

  Real harmonic(0, ctx.work_bits());
  for (int i = 1; i <= k - 1; ++i) harmonic += Real(1, ctx.work_bits()) / i;
  Real ukm1 = pow_si(u, k - 1);
  Real kfact(1, ctx.work_bits());
  for (int i = 2; i <= k - 1; ++i) kfact *= i;
  Real sum = ukm1 / kfact * (harmonic - log(-u));

  Real uj(1, ctx.work_bits());
  int consecutive_small = 0;
  for (std::size_t j = 0; j < table->size(); ++j) {
    if (static_cast<int>(j) != k - 1) {
      Real term = (*table)[j] * uj;
      sum += term;
      if (static_cast<int>(j) > k) {
        consecutive_small = abs(term) < eps ? consecutive_small + 1 : 0;
        if (consecutive_small >= 2) break;
      }
    }
    uj *= u;
  }
  return sum;
}

// Li_k(-e^u) = -sum_j eta(k-j) u^j/j!, |u| < pi. Used for x near -1 and by
// the inversion self-check out to |log(-x)| < pi.
Real li_about_minus_one(int k, const Real& x, const PrecisionContext& ctx) {
  const Real u = log(-x);
  const double ratio = std::max(std::abs(u.to_double()), 0.05) / 3.141592653589793;
  auto table = coeff_table(true, k, ctx, expansion_length(ratio, ctx, k));
  const Real eps = term_floor(ctx);

  Real sum(0, ctx.work_bits());
  Real uj(1, ctx.work_bits());
  int consecutive_small = 0;
  for (std::size_t j = 0; j < table->size(); ++j) {
    Real term = (*table)[j] * uj;
    sum -= term;
    uj *= u;
    if (static_cast<int>(j) > k) {
      consecutive_small = abs(term) < eps ? consecutive_small + 1 : 0;
      if (consecutive_small >= 2) break;
    }
  }
  return sum;
}

Real li_negative_big(int k, const Real& x, const PrecisionContext& ctx);

Real li_dispatch(int k, const Real& x, const PrecisionContext& ctx) {
  if (k == 1) return -log1p(-x);
  if (x == 1) {
    return k % 2 == 0 ? zeta_even(k, ctx) : zeta_odd(k, ctx);
  }
  const Real mag = abs(x);
  if (mag <= ctx.real(Rational(4, 5))) return li_direct(k, x, ctx);
  if (x.sign() > 0) return li_about_one(k, x, ctx);
  if (mag <= ctx.real(Rational(5, 4))) return li_about_minus_one(k, x, ctx);
  return li_negative_big(k, x, ctx);
}

// Inversion x < -1: map to -1/x in (-1, 0).
//   Li_2(-v) = -Li_2(-1/v) - pi^2/6 - (1/2) log^2 v
//   Li_3(-v) =  Li_3(-1/v) - (pi^2/6) log v - (1/6) log^3 v
Real li_negative_big(int k, const Real& x, const PrecisionContext& ctx) {
  const Real v = -x;
  const Real lv = log(v);
  const Real pi2_6 = ctx.pi() * ctx.pi() / 6;
  const Real inner = li_dispatch(k, -1 / v, ctx);
  if (k == 2) return -inner - pi2_6 - lv * lv / 2;
  if (k == 3) return inner - pi2_6 * lv - pow_si(lv, 3) / 6;
  throw DomainError("li: weight-4 inversion is not implemented (argument < -1)");
}

}  // namespace

Real li(int weight, const Real& x, const PrecisionContext& ctx) {
  if (weight < 1 || weight > 4)
    throw ParameterError("li: weight must be in 1..4, got " + std::to_string(weight));
  if (!x.is_finite()) throw DomainError("li: non-finite argument");
  if (x > 1) throw DomainError("li: argument must be <= 1");
  if (weight == 1 && x == 1) throw DomainError("li: Li_1 has a singularity at 1");
  return li_dispatch(weight, x, ctx);
}

Real li3_inversion_check(const Real& y, const PrecisionContext& ctx) {
  if (!(y > 1)) throw DomainError("li3_inversion_check: y must be > 1");
  Real left(ctx.work_bits());
  if (log(y) < ctx.real(3)) {
    left = li_about_minus_one(3, -y, ctx);  // independent of the inversion path
  } else {
    left = li(3, -y, ctx);
  }
  const Real right = li(3, -1 / y, ctx);
  const Real ly = log(y);
  return abs(left - right + pow_si(ly, 3) / 6 + ctx.pi() * ctx.pi() / 6 * ly);
}

}  // namespace dickman
