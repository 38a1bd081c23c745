#pragma once

#include <stdexcept>
#include <string>

namespace conjlab {

/// Malformed input: bad document structure, length mismatch, non-finite data,
/// unsupported grid size. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation: argument outside its mathematical domain
/// (h outside (0, pi], radius outside [0, 1), ...). Maps to CLI exit code 3.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of panel budget before reaching the requested
/// tolerance. Carries the best estimate so callers can still report it.
/// Maps to CLI exit code 4.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_estimate,
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

}  // namespace conjlab
