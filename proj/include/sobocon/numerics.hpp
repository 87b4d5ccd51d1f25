#ifndef SOBOCON_NUMERICS_HPP
#define SOBOCON_NUMERICS_HPP

#include <functional>
#include <utility>

namespace sobocon::numerics {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value;
  double abs_error_estimate;
  int subdivisions;
};

/// Integral of f over (0, inf). f must be finite on (0, inf) with integrable
/// behavior at 0 and exponential or algebraic decay at infinity. Panels
/// (0,1], [1,2], [2,4], ... are estimated with Gauss7/Kronrod15; the far tail
/// is cut off once consecutive panel integrals decay geometrically, with the
/// geometric bound folded into the error estimate; remaining error is driven
/// under tolerance by adaptive bisection of the worst panel.
/// Throws convergence_error (carrying the best estimate) if the subdivision
/// budget runs out or no decaying tail is detected.
QuadratureResult integrate_semiline(const std::function<double(double)>& f,
                                    double abs_tol, double rel_tol);
QuadratureResult integrate_semiline(const std::function<double(double)>& f,
                                    const QuadratureOptions& opts);

struct MinimizationResult {
  double arg_min;
  double min_value;
  int iterations;
  // certified enclosure of arg_min: g at both ends is >= min_value
  std::pair<double, double> bracket;
  bool multiple_minima;  // more than one local minimum on the scan grid
};

struct MinimizationOptions {
  double x_tol = 1e-10;
  int grid_points = 64;  // log-spaced pre-scan of the initial bracket
};

/// Minimum of g on (a, b), 0 < a < b. A log-spaced grid scan locates the
/// basin (guarding against non-unimodal objectives), golden-section search
/// refines to x_tol, and a final parabolic fit polishes the minimizer below
/// the sqrt(eps) noise floor of pure golden-section.
/// Throws bracketing_error when the grid minimum sits on the boundary.
MinimizationResult minimize_scalar(const std::function<double(double)>& g,
                                   std::pair<double, double> initial_bracket,
                                   double x_tol);
MinimizationResult minimize_scalar(const std::function<double(double)>& g,
                                   std::pair<double, double> initial_bracket,
                                   const MinimizationOptions& opts);

}  // namespace sobocon::numerics

#endif  // SOBOCON_NUMERICS_HPP
