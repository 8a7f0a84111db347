#ifndef DICKMAN_SERIES_HPP
#define DICKMAN_SERIES_HPP

#include <string>
#include <vector>

#include "dickman/errors.hpp"
#include "dickman/precision.hpp"
#include "dickman/rational.hpp"
#include "dickman/real.hpp"

namespace dickman {

// Truncated power series: coeffs[i] is the coefficient of z^i and
// order() == coeffs.size() is the (exclusive) truncation order.
// Binary operations truncate at the minimum input order and never silently
// drop below it.
template <class T>
struct Series {
  std::vector<T> coeffs;

  Series() = default;
  explicit Series(std::vector<T> c) : coeffs(std::move(c)) {}

  int order() const { return static_cast<int>(coeffs.size()); }
  const T& operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
  T& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
};

using RationalSeries = Series<Rational>;
using RealSeries = Series<Real>;

namespace detail {
template <class T>
T zero_like(const T& t) {
  return t * 0L;
}
}  // namespace detail

template <class T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
  if (a.order() == 0 || b.order() == 0) throw SeriesDomainError("series_mul: empty operand");
  int n = std::min(a.order(), b.order());
  T zero = detail::zero_like(a.coeffs.front());
  Series<T> out(std::vector<T>(static_cast<std::size_t>(n), zero));
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

template <class T>
Series<T> series_div(const Series<T>& a, const Series<T>& b) {
  if (a.order() == 0 || b.order() == 0) throw SeriesDomainError("series_div: empty operand");
  if (b.coeffs.front().is_zero())
    throw SeriesDomainError("series_div: divisor has zero constant term");
  int n = std::min(a.order(), b.order());
  T zero = detail::zero_like(a.coeffs.front());
  Series<T> out(std::vector<T>(static_cast<std::size_t>(n), zero));
  for (int i = 0; i < n; ++i) {
    T acc = a[i];
    for (int j = 1; j <= i; ++j) {
      if (j >= b.order() || b[j].is_zero() || out[i - j].is_zero()) continue;
      acc -= b[j] * out[i - j];
    }
    out[i] = acc / b.coeffs.front();
  }
  return out;
}

// exp of a series with zero constant term:  n e_n = sum_{j=1}^{n} j s_j e_{n-j}.
template <class T>
Series<T> series_exp(const Series<T>& s) {
  if (s.order() == 0) throw SeriesDomainError("series_exp: empty operand");
  if (!s.coeffs.front().is_zero())
    throw SeriesDomainError("series_exp: operand must have zero constant term");
  int n = s.order();
  T zero = detail::zero_like(s.coeffs.front());
  Series<T> out(std::vector<T>(static_cast<std::size_t>(n), zero));
  out[0] = zero + 1L;
  for (int i = 1; i < n; ++i) {
    T acc = zero;
    for (int j = 1; j <= i; ++j) {
      if (s[j].is_zero() || out[i - j].is_zero()) continue;
      acc += (s[j] * static_cast<long>(j)) * out[i - j];
    }
    out[i] = acc / static_cast<long>(i);
  }
  return out;
}

// sqrt of a series with constant term 1:  r_n = (s_n - sum_{1<=j<n} r_j r_{n-j}) / 2.
template <class T>
Series<T> series_sqrt(const Series<T>& s) {
  if (s.order() == 0) throw SeriesDomainError("series_sqrt: empty operand");
  T zero = detail::zero_like(s.coeffs.front());
  if (!(s.coeffs.front() == zero + 1L))
    throw SeriesDomainError("series_sqrt: operand must have constant term 1");
  int n = s.order();
  Series<T> out(std::vector<T>(static_cast<std::size_t>(n), zero));
  out[0] = zero + 1L;
  for (int i = 1; i < n; ++i) {
    T acc = s[i];
    for (int j = 1; j < i; ++j) acc -= out[j] * out[i - j];
    out[i] = acc / 2L;
  }
  return out;
}

// Antiderivative with zero constant term; order grows by one (no information
// is lost).
template <class T>
Series<T> series_integrate(const Series<T>& s) {
  T zero = detail::zero_like(s.coeffs.front());
  Series<T> out(std::vector<T>(static_cast<std::size_t>(s.order()) + 1, zero));
  for (int i = 0; i < s.order(); ++i) out[i + 1] = s[i] / static_cast<long>(i + 1);
  return out;
}

// Horner evaluation of a real-coefficient series at z.
Real series_eval(const RealSeries& s, const Real& z);
// Same, for rational coefficients converted on the fly at z's precision.
Real series_eval(const RationalSeries& s, const Real& z);

RealSeries to_real_series(const RationalSeries& s, const PrecisionContext& ctx);

// ---- the operations the Dickman tables are built from ----

// s evaluated at the rational substitution z -> (n+1)^2 y / (n^2 + n(n+1) y),
// expanded to s.order() by binomial expansion. Requires s to have zero
// constant term (true of every g_n).
RationalSeries compose_rational_arg(const RationalSeries& s, int n);

// Taylor series of g_n(z) = L_n(1/n - z) about z = 0 (n in 1..4), exact
// rationals. Leading term G_n z^n with G_n = (-1)^n (n^n/n!)^2; g_1 = log(1-z).
RationalSeries g_series(int n, int order);

// Coefficient tables behind the small-t tetralog sum:
//   b_n = -3/n^3 + sum_{k=1}^{n} (2^k k + (-1)^(k-1) n) / (k^2 n^2)
//   c_n = [z^n]  log(1+2z) Li_2(z) / (1+z)
//   a_n = (-b_n + (-1)^n c_n) / n
struct S4Coefficients {
  std::vector<Rational> a, b, c;  // index n, valid for 1 <= n < order
  int order = 0;
};
S4Coefficients s4_coefficients(int order);

// Coefficients of exp(gamma z)/Gamma(1-z), built two independent ways:
//   (i)  exp(gamma z) times the reciprocal-Gamma series from the standard
//        log-Gamma recurrence driven by gamma and zeta values;
//   (ii) sqrt(sin(pi z)/(pi z)) times exp(-sum_{n>0} zeta(2n+1) z^(2n+1)/(2n+1)).
// The constructions must agree coefficient-wise to 10^(-target_digits) or a
// ConsistencyError is thrown. order <= 14 (bounded by the zeta-odd table).
RealSeries gf_coefficients(int order, const PrecisionContext& ctx);

// Text dump format: one "numerator/denominator" per line, index-ordered.
std::string dump_rational_series(const RationalSeries& s);
RationalSeries parse_rational_series(const std::string& text);
void save_rational_series(const RationalSeries& s, const std::string& path);
// Returns an empty series if the file does not exist.
RationalSeries load_rational_series(const std::string& path);

}  // namespace dickman

#endif
