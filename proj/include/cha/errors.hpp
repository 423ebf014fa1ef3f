#ifndef CHA_ERRORS_HPP
#define CHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cha {

/// Operands live in algebras of different dimension (mismatched n).
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite input or invalid numeric configuration.
class NumericError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The series oracle was asked to sum outside its convergence domain.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& msg, double margin)
      : std::runtime_error(msg), spectral_margin(margin) {}

  /// max over quadrature nodes of |1 - e^{m(t)}| at the point of failure
  double spectral_margin;
};

} // namespace cha

#endif
