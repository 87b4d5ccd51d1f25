#ifndef SOBOCON_BOUNDS_LOWER_HPP
#define SOBOCON_BOUNDS_LOWER_HPP

#include <optional>

#include "sobocon/numerics.hpp"

namespace sobocon::bounds {

enum class PhiRoute {
  Auto,            // Binomial for integer n, Quadrature otherwise
  Quadrature,      // defining integral
  Binomial,        // finite Beta sum, integer n only
  Hypergeometric,  // two-term 2F1 form; lambda < 1, non-singular parameters
  ExampleClosedForm  // hard-coded polynomials for (n,d) in {(1,1),(3,1),(2,2),(2,3)}
};
const char* to_string(PhiRoute route);

struct PhiEvaluation {
  double lambda;
  double value;
  PhiRoute route;  // route actually used (never Auto)
  double abs_error_estimate;
};

/// psi(n, d, lambda) = int_0^inf s^(d-1) (1 + lambda^2 s^2)^n (1 + s^2)^(-2n) ds,
/// the r-independent core of phi. Requires n > d/2 (else divergent).
PhiEvaluation phi_integral(double n, int d, double lambda,
                           PhiRoute route = PhiRoute::Auto,
                           const numerics::QuadratureOptions& opts = {});

/// phi_(r,n,d)(lambda) = lambda^-(d - 2d/r) * psi(n, d, lambda)
/// for n > d/2, 2 < r < inf, lambda > 0.
PhiEvaluation phi(double r, double n, int d, double lambda,
                  PhiRoute route = PhiRoute::Auto,
                  const numerics::QuadratureOptions& opts = {});

/// ln of I_(r,n,d) = int_0^inf t^(d-1) (t^(n-d/2) K_(n-d/2)(t))^r dt.
/// Closed form (pi/2)^(r/2) Gamma(d)/r^d when n = d/2 + 1/2; otherwise
/// peak-scaled quadrature in the log domain, so large r cannot overflow.
double i_integral_log(double r, double n, int d,
                      const numerics::QuadratureOptions& opts = {});

/// exp(i_integral_log); +inf if the value itself exceeds double range.
double i_integral(double r, double n, int d,
                  const numerics::QuadratureOptions& opts = {});

/// Minimum of phi over lambda > 0. Closed-form minimizers are used for
/// (n,d) = (1,1), (2,2), (2,3) and the positive sextic root for (3,1);
/// those paths are verified on every call against the numeric minimizer
/// (grid scan + golden section), which is also the generic fallback.
numerics::MinimizationResult phi_minimize(
    double r, double n, int d, const numerics::QuadratureOptions& opts = {});

struct LowerBoundBreakdown {
  double i_value;  // exp(log_i); +inf when I itself exceeds double range
  double log_i;
  numerics::MinimizationResult phi_min;  // lambda*, Phi
  double s_minus;
};

/// Trial-function lower bound S- for n > d/2, 2 < r < inf:
///   S- = (Gamma(d/2)/(2 pi^(d/2)))^(1/2 - 1/r) I^(1/r) / (2^(n-1) Gamma(n) sqrt(Phi)),
/// assembled in log space.
LowerBoundBreakdown lower_bound(double r, double n, int d,
                                const numerics::QuadratureOptions& opts = {});

enum class BracketKind { Sharp, Estimated, UpperOnly };
const char* to_string(BracketKind kind);

struct BoundBracket {
  std::optional<double> lower;
  double upper;
  std::optional<double> rel_uncertainty;  // (upper - lower)/lower
  BracketKind kind;
  std::optional<double> lambda_star;
};

/// Two-sided bracket for an admissible triple:
///  - r = 2: [1, 1], sharp;
///  - r = inf (so n > d/2): both sides equal to S+, sharp;
///  - n > d/2, 2 < r < inf: [S-, S+], estimated;
///  - n <= d/2, r != 2: upper bound only.
BoundBracket bracket(double r, double n, int d,
                     const numerics::QuadratureOptions& opts = {});

}  // namespace sobocon::bounds

#endif  // SOBOCON_BOUNDS_LOWER_HPP
