#include "dickman/rational.hpp"

#include <cctype>
#include <ostream>

#include "dickman/errors.hpp"

namespace dickman {

Rational::Rational(long num, unsigned long den) {
  mpq_init(q_);
  if (den == 0) throw ParameterError("rational with zero denominator");
  mpq_set_si(q_, num, den);
  mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParameterError("rational division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParameterError("empty rational literal");

  Rational r;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    if (s.find('.') != std::string::npos)
      throw ParameterError("rational literal mixes '/' and '.': " + text);
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
      throw ParameterError("malformed rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
      throw ParameterError("zero denominator in: " + text);
    mpq_canonicalize(r.q_);
    return r;
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
      throw ParameterError("malformed integer literal: " + text);
    return r;
  }

  // decimal: digits '.' digits  ->  (all digits) / 10^frac_len, exact
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw ParameterError("malformed decimal literal: " + text);
  mpz_t num, den;
  mpz_init(num);
  mpz_init(den);
  if (mpz_set_str(num, digits.c_str(), 10) != 0) {
    mpz_clear(num);
    mpz_clear(den);
    throw ParameterError("malformed decimal literal: " + text);
  }
  mpz_ui_pow_ui(den, 10, frac_len);
  mpq_set_num(r.q_, num);
  mpq_set_den(r.q_, den);
  mpq_canonicalize(r.q_);
  mpz_clear(num);
  mpz_clear(den);
  return r;
}

Rational Rational::pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.q_, r.q_, static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.q_, r.q_, static_cast<unsigned long>(-e));
  return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  Rational r;
  mpz_bin_uiui(mpq_numref(r.raw()), n, k);
  return r;
}

std::string Rational::to_fraction_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  std::free(s);
  if (out.find('/') == std::string::npos) out += "/1";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_fraction_string();
}

}  // namespace dickman
