#include "dickman/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "dickman/errors.hpp"

namespace dickman {
namespace {

// One abscissa of the u > 0 half-line: offset d = 1 - tanh((pi/2) sinh u)
// from the endpoint, and the weight (pi/2) cosh u / cosh^2((pi/2) sinh u).
struct Node {
  Real offset;
  Real weight;
  Node(Real d, Real w) : offset(std::move(d)), weight(std::move(w)) {}
};

struct LevelNodes {
  std::vector<Node> nodes;  // ascending u = j*h, j per level pattern
  Real center_weight;       // level 0 only: weight at u = 0 (pi/2)
  explicit LevelNodes(mpfr_prec_t prec) : center_weight(prec) {}
};

double node_umax(mpfr_prec_t prec) {
  // weight ~ 2 pi cosh(u) exp(-pi sinh u); cut when it reaches 2^-(prec+64)
  double target = (static_cast<double>(prec) + 64.0) * 0.6931471805599453;
  return std::asinh(target * 2.0 / 3.141592653589793) + 1.0;
}

std::shared_ptr<const LevelNodes> level_nodes(mpfr_prec_t prec, int level) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const LevelNodes>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({static_cast<long>(prec), level});
    if (it != cache.end()) return it->second;
  }

  auto out = std::make_shared<LevelNodes>(prec);
  Real pi(prec);
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  const Real pi_2 = pi / 2;
  out->center_weight = pi_2;

  const double umax = node_umax(prec);
  const long stride = level == 0 ? 1 : 2;
  const long start = level == 0 ? 1 : 1;
  const double h = std::ldexp(1.0, -level);
  for (long j = start; static_cast<double>(j) * h <= umax; j += stride) {
    Real u = Real(j, prec);
    mpfr_mul_2si(u.raw(), u.raw(), -level, MPFR_RNDN);
    const Real w = pi_2 * sinh(u);
    // 1 - tanh(w) = 2 / (e^(2w) + 1)
    const Real offset = 2 / (exp(2 * w) + 1);
    const Real weight = pi_2 * cosh(u) / pow_si(cosh(w), 2);
    out->nodes.emplace_back(offset, weight);
  }

  std::lock_guard<std::mutex> lock(mu);
  cache[{static_cast<long>(prec), level}] = out;
  return cache[{static_cast<long>(prec), level}];
}

Real pairwise_sum(std::vector<Real>& v, mpfr_prec_t prec) {
  if (v.empty()) return Real(0, prec);
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2 == 1) {
      v[half] = v[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return v[0];
}

Real sample(const Integrand& f, const Real& x) {
  Real y = f(x);
  if (!y.is_finite())
    throw EvaluationError("quadrature: integrand returned a non-finite value",
                          x.to_string(25));
  return y;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx,
                           const QuadratureOptions& opt) {
  if (!(a < b)) {
    if (a == b)
      return {ctx.real(0), ctx.real(0), 0, 0};
    throw ParameterError("integrate: requires a < b");
  }
  const mpfr_prec_t prec = ctx.work_bits();
  const Real scale = (b - a) / 2;

  const int extra = opt.extra_digits >= 0 ? opt.extra_digits : ctx.guard_digits();
  const Real tol = ctx.pow10(-(ctx.target_digits() + extra));
  const Real tiny_scale = ctx.eps_target();

  long evaluations = 0;
  Real accum(0, prec);    // sum of g over all nodes of levels <= L
  Real value(0, prec);    // h_L * accum
  Real prev_value(0, prec);
  Real diff(0, prec);

  for (int level = 0; level <= opt.level_cap; ++level) {
    auto tbl = level_nodes(prec, level);
    std::vector<Real> parts;
    parts.reserve(2 * tbl->nodes.size() + 2);
    if (level == 0) {
      parts.push_back(sample(f, a + scale) * tbl->center_weight);
      ++evaluations;
    }
    for (const auto& node : tbl->nodes) {
      const Real d = scale * node.offset;
      parts.push_back(sample(f, a + d) * node.weight);
      parts.push_back(sample(f, b - d) * node.weight);
      evaluations += 2;
    }
    accum += pairwise_sum(parts, prec);
    prev_value = value;
    value = accum;
    mpfr_mul_2si(value.raw(), value.raw(), -level, MPFR_RNDN);

    if (level >= opt.min_levels) {
      diff = abs(value - prev_value);
      if (diff <= tol * max(abs(value), tiny_scale)) {
        return {value * scale, diff * scale, level, evaluations};
      }
    }
  }
  Real best = value * scale;
  Real err = diff * scale;
  throw NonConvergenceError(
      "integrate: level cap " + std::to_string(opt.level_cap) +
          " reached without agreement",
      best.to_string(ctx.target_digits()), err.to_string(8));
}

QuadratureResult integrate_logspace(const Integrand& f, const Real& a,
                                    const Real& b, const PrecisionContext& ctx,
                                    const QuadratureOptions& opt) {
  if (!(a > 0)) throw ParameterError("integrate_logspace: requires a > 0");
  if (!(a < b)) {
    if (a == b) return {ctx.real(0), ctx.real(0), 0, 0};
    throw ParameterError("integrate_logspace: requires a < b");
  }
  Integrand g = [&f](const Real& u) {
    const Real x = exp(u);
    return f(x) * x;
  };
  return integrate(g, log(a), log(b), ctx, opt);
}

}  // namespace dickman
