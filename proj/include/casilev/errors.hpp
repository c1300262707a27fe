#pragma once

#include <stdexcept>
#include <string>

namespace casilev {

// Thrown when an input sits outside a function's mathematical domain
// (pole of the dielectric function, overdamped sphere, resonant
// denominator).  These are caller errors, not numerical failures.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when an adaptive integral or series fails to reach the requested
// tolerance within its subdivision/term budget.  Carries the best estimate
// so callers can decide whether it is still usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace casilev
