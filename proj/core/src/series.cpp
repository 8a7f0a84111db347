#include "dickman/series.hpp"

#include <fstream>
#include <sstream>

namespace dickman {

Real series_eval(const RealSeries& s, const Real& z) {
  if (s.order() == 0) return detail::zero_like(z);
  Real acc = s.coeffs.back();
  for (int i = s.order() - 2; i >= 0; --i) acc = acc * z + s[i];
  return acc;
}

Real series_eval(const RationalSeries& s, const Real& z) {
  Real acc(0, z.prec());
  for (int i = s.order() - 1; i >= 0; --i) acc = acc * z + Real(s[i], z.prec());
  return acc;
}

RealSeries to_real_series(const RationalSeries& s, const PrecisionContext& ctx) {
  std::vector<Real> c;
  c.reserve(static_cast<std::size_t>(s.order()));
  for (const auto& q : s.coeffs) c.push_back(ctx.real(q));
  return RealSeries(std::move(c));
}

RationalSeries compose_rational_arg(const RationalSeries& s, int n) {
  if (n < 1) throw ParameterError("compose_rational_arg: n must be positive");
  if (s.order() == 0) throw SeriesDomainError("compose_rational_arg: empty series");
  if (!s.coeffs.front().is_zero())
    throw SeriesDomainError("compose_rational_arg: nonzero constant term");
  const int order = s.order();
  const Rational alpha(static_cast<long>(n + 1) * (n + 1),
                       static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
  const Rational beta(n + 1, static_cast<unsigned long>(n));

  RationalSeries out(std::vector<Rational>(static_cast<std::size_t>(order), Rational(0)));
  // w^j = alpha^j y^j (1+beta y)^(-j); the binomial coefficients are updated
  // incrementally: c_{m+1} = c_m * (-beta) * (j+m)/(m+1).
  Rational alpha_j(1);
  for (int j = 1; j < order; ++j) {
    alpha_j *= alpha;
    if (s[j].is_zero()) continue;
    Rational lead = s[j] * alpha_j;
    Rational c(1);
    for (int m = 0; j + m < order; ++m) {
      out[j + m] += lead * c;
      c *= -beta;
      c *= Rational(j + m);
      c /= Rational(m + 1);
    }
  }
  return out;
}

RationalSeries g_series(int n, int order) {
  if (n < 1 || n > 4)
    throw ParameterError("g_series: n must be in 1..4, got " + std::to_string(n));
  if (order <= n) throw ParameterError("g_series: order must exceed n");

  // g_1(z) = log(1-z); higher g via
  //   g_{m+1}(z) = -Integral_0^z g_m((m+1)^2 y/(m^2+m(m+1)y)) (m+1) dy/(1-(m+1)y).
  // Work a few coefficients above the requested order so each integration
  // step keeps full accuracy at the top.
  int work = order + 4;
  RationalSeries g(std::vector<Rational>(static_cast<std::size_t>(work), Rational(0)));
  for (int m = 1; m < work; ++m) g[m] = Rational(-1, static_cast<unsigned long>(m));

  for (int m = 1; m < n; ++m) {
    RationalSeries inner = compose_rational_arg(g, m);
    // geometric series (m+1)/(1-(m+1)y)
    RationalSeries geo(std::vector<Rational>(static_cast<std::size_t>(work), Rational(0)));
    Rational p(m + 1);
    for (int i = 0; i < work; ++i) {
      geo[i] = p;
      p *= Rational(m + 1);
    }
    RationalSeries prod = series_mul(inner, geo);
    RationalSeries integ = series_integrate(prod);
    integ.coeffs.resize(static_cast<std::size_t>(work), Rational(0));
    for (auto& c : integ.coeffs) c = -c;
    g = std::move(integ);
  }
  g.coeffs.resize(static_cast<std::size_t>(order), Rational(0));
  return g;
}

S4Coefficients s4_coefficients(int order) {
  if (order < 2) throw ParameterError("s4_coefficients: order must be >= 2");
  S4Coefficients t;
  t.order = order;
  t.a.assign(static_cast<std::size_t>(order), Rational(0));
  t.b.assign(static_cast<std::size_t>(order), Rational(0));
  t.c.assign(static_cast<std::size_t>(order), Rational(0));

  for (long n = 1; n < order; ++n) {
    Rational bn(-3);
    bn /= Rational(n * n * n);
    Rational twok(1);
    const Rational n2(n * n);
    for (long k = 1; k <= n; ++k) {
      twok *= Rational(2);
      Rational num = twok * Rational(k) + (k % 2 == 1 ? Rational(n) : Rational(-n));
      bn += num / (Rational(k * k) * n2);
    }
    t.b[static_cast<std::size_t>(n)] = std::move(bn);
  }

  // c: log(1+2z) * Li_2(z) / (1+z) by series multiplication and division
  RationalSeries log12(std::vector<Rational>(static_cast<std::size_t>(order), Rational(0)));
  RationalSeries li2(std::vector<Rational>(static_cast<std::size_t>(order), Rational(0)));
  RationalSeries onez(std::vector<Rational>(static_cast<std::size_t>(order), Rational(0)));
  Rational twok(1);
  for (long k = 1; k < order; ++k) {
    twok *= Rational(2);
    log12[static_cast<int>(k)] =
        (k % 2 == 1 ? twok : -twok) / Rational(k);
    li2[static_cast<int>(k)] = Rational(1, static_cast<unsigned long>(k * k));
  }
  onez[0] = Rational(1);
  if (order > 1) onez[1] = Rational(1);
  RationalSeries c = series_div(series_mul(log12, li2), onez);
  for (long n = 1; n < order; ++n) {
    t.c[static_cast<std::size_t>(n)] = c[static_cast<int>(n)];
    t.a[static_cast<std::size_t>(n)] =
        (-t.b[static_cast<std::size_t>(n)] +
         (n % 2 == 0 ? t.c[static_cast<std::size_t>(n)] : -t.c[static_cast<std::size_t>(n)])) /
        Rational(n);
  }
  return t;
}

RealSeries gf_coefficients(int order, const PrecisionContext& ctx) {
  if (order < 1 || order > 14)
    throw ParameterError("gf_coefficients: order must be in 1..14");
  const mpfr_prec_t prec = ctx.work_bits();
  const Real zero(0, prec);

  // (i) exp(gamma z) * R(z), R = 1/Gamma(1-z) from the log-Gamma recurrence
  //     k r_k = -gamma r_{k-1} - sum_{j=2}^{k} zeta(j) r_{k-j}.
  std::vector<Real> r(static_cast<std::size_t>(order), zero);
  r[0] = Real(1, prec);
  for (int k = 1; k < order; ++k) {
    Real acc = -ctx.euler_gamma() * r[static_cast<std::size_t>(k - 1)];
    for (int j = 2; j <= k; ++j)
      acc -= zeta_int(j, ctx) * r[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = acc / static_cast<long>(k);
  }
  std::vector<Real> eg(static_cast<std::size_t>(order), zero);
  eg[0] = Real(1, prec);
  for (int k = 1; k < order; ++k)
    eg[static_cast<std::size_t>(k)] =
        eg[static_cast<std::size_t>(k - 1)] * ctx.euler_gamma() / static_cast<long>(k);
  RealSeries first = series_mul(RealSeries(std::move(eg)), RealSeries(std::move(r)));

  // (ii) sqrt(sin(pi z)/(pi z)) * exp(-sum zeta(2n+1) z^(2n+1)/(2n+1))
  std::vector<Real> sinc(static_cast<std::size_t>(order), zero);
  Real pi2 = ctx.pi() * ctx.pi();
  Real term(1, prec);
  sinc[0] = term;
  for (int m = 1; 2 * m < order; ++m) {
    term = -term * pi2 / static_cast<long>(2 * m * (2 * m + 1));
    sinc[static_cast<std::size_t>(2 * m)] = term;
  }
  RealSeries root = series_sqrt(RealSeries(std::move(sinc)));
  std::vector<Real> oddsum(static_cast<std::size_t>(order), zero);
  for (int n = 1; 2 * n + 1 < order; ++n)
    oddsum[static_cast<std::size_t>(2 * n + 1)] =
        -zeta_odd(2 * n + 1, ctx) / static_cast<long>(2 * n + 1);
  RealSeries second = series_mul(root, series_exp(RealSeries(std::move(oddsum))));

  const Real tol = ctx.eps_target();
  for (int k = 0; k < order; ++k) {
    if (abs(first[k] - second[k]) > tol)
      throw ConsistencyError(
          "generating-function constructions disagree at z^" + std::to_string(k) +
          ": " + first[k].to_string(30) + " vs " + second[k].to_string(30));
  }
  return first;
}

std::string dump_rational_series(const RationalSeries& s) {
  std::ostringstream os;
  for (const auto& c : s.coeffs) os << c.to_fraction_string() << '\n';
  return os.str();
}

RationalSeries parse_rational_series(const std::string& text) {
  std::istringstream is(text);
  std::vector<Rational> coeffs;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    coeffs.push_back(Rational::parse(line));
  }
  return RationalSeries(std::move(coeffs));
}

void save_rational_series(const RationalSeries& s, const std::string& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw ParameterError("cannot write series cache: " + path);
  f << dump_rational_series(s);
}

RationalSeries load_rational_series(const std::string& path) {
  std::ifstream f(path);
  if (!f) return RationalSeries{};
  std::ostringstream os;
  os << f.rdbuf();
  return parse_rational_series(os.str());
}

}  // namespace dickman
