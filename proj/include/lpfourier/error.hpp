#ifndef LPFOURIER_ERROR_HPP
#define LPFOURIER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpfourier {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The adaptive quadrature ran out of panels before meeting its tolerance.
/// Carries whatever partial answer was available at the point of failure.
class QuadratureBudgetError : public std::runtime_error {
 public:
  QuadratureBudgetError(const std::string& what, double partial_value,
                        double err_estimate, std::size_t panels_used)
      : std::runtime_error(what),
        partial_value_(partial_value),
        err_estimate_(err_estimate),
        panels_used_(panels_used) {}

  double partial_value() const noexcept { return partial_value_; }
  double err_estimate() const noexcept { return err_estimate_; }
  std::size_t panels_used() const noexcept { return panels_used_; }

 private:
  double partial_value_;
  double err_estimate_;
  std::size_t panels_used_;
};

class NonFiniteIntegrandError : public std::runtime_error {
 public:
  NonFiniteIntegrandError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace lpfourier

#endif  // LPFOURIER_ERROR_HPP
