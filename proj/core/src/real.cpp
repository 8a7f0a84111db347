#include "dickman/real.hpp"

#include <cstdlib>
#include <ostream>
#include <vector>

namespace dickman {

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*e", digits - 1, MPFR_RNDN, v_);
  return std::string(buf.data());
}

std::string Real::to_key() const {
  std::vector<char> buf(static_cast<std::size_t>(prec()) / 3 + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%Ra", v_);
  return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(20);
}

}  // namespace dickman
