#ifndef SOBOCON_ERRORS_HPP
#define SOBOCON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sobocon {

// Invalid argument or parameter triple outside the admissible domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result not representable in double (e.g. K_nu overflow at tiny argument).
class range_error : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Hypergeometric parameters at (or too close to) a pole of the closed form.
class singular_parameter_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Iterative scheme ran out of budget; carries the best estimate so far.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_estimate,
                    double abs_error)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        abs_error_(abs_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double abs_error() const noexcept { return abs_error_; }

 private:
  double best_estimate_;
  double abs_error_;
};

// Minimizer could not enclose a descent inside the initial bracket.
class bracketing_error : public std::runtime_error {
 public:
  bracketing_error(const std::string& what, double grid_min_arg,
                   double grid_min_value)
      : std::runtime_error(what),
        grid_min_arg_(grid_min_arg),
        grid_min_value_(grid_min_value) {}

  double grid_min_arg() const noexcept { return grid_min_arg_; }
  double grid_min_value() const noexcept { return grid_min_value_; }

 private:
  double grid_min_arg_;
  double grid_min_value_;
};

}  // namespace sobocon

#endif  // SOBOCON_ERRORS_HPP
