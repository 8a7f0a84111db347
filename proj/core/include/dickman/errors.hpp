#ifndef DICKMAN_ERRORS_HPP
#define DICKMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dickman {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (out-of-range weights, invalid orders, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Series operation precondition violated (division by a series with zero
// constant term, sqrt of a series not starting at 1, ...).
struct SeriesDomainError : Error {
  using Error::Error;
};

// Weight/precision combination the evaluator does not serve.
struct UnsupportedWeightError : Error {
  using Error::Error;
};

// A quadrature hit its level cap without the requested agreement.
// Carries the best estimate and the last level difference as decimal strings.
struct NonConvergenceError : Error {
  std::string best_value;
  std::string error_estimate;
  NonConvergenceError(const std::string& what, std::string best, std::string err)
      : Error(what), best_value(std::move(best)), error_estimate(std::move(err)) {}
};

// An integrand produced a non-finite value; carries the offending abscissa.
struct EvaluationError : Error {
  std::string abscissa;
  EvaluationError(const std::string& what, std::string where)
      : Error(what), abscissa(std::move(where)) {}
};

// Two supposedly-equivalent internal constructions disagreed; indicates a
// constants or series bug, never a user error.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace dickman

#endif
