#ifndef SOBOCON_SPECFUN_HPP
#define SOBOCON_SPECFUN_HPP

namespace sobocon::specfun {

/// Value plus an absolute error estimate. The estimate is an honest upper
/// bound on rounding + truncation, never NaN; a result that cannot be
/// computed to the advertised accuracy throws instead of degrading silently.
struct SpecFunResult {
  double value;
  double abs_error_estimate;
};

/// ln Gamma(x) for x > 0. Relative accuracy ~1e-15 (Lanczos, g = 7).
SpecFunResult ln_gamma(double x);

/// Euler Beta B(z, w) = Gamma(z)Gamma(w)/Gamma(z+w), z, w > 0,
/// evaluated through ln_gamma so large arguments cannot overflow the ratio.
SpecFunResult beta(double z, double w);

/// E(s) = s^s for s >= 0, with the continuous completion E(0) = 1.
double e_power(double s);

/// Macdonald function K_nu(rho), nu >= 0, rho > 0.
/// Half-integer orders nu = m + 1/2 go through the finite closed form
///   rho^(m+1/2) K_(m+1/2)(rho) = sqrt(pi/2) e^-rho sum_i (2m-i)!/(i!(m-i)!) rho^i/2^(m-i);
/// other orders use the Temme series (rho <= 2) or the Steed continued
/// fraction CF2 (rho > 2) plus forward recurrence in the order.
SpecFunResult bessel_k(double nu, double rho);

/// e^rho K_nu(rho): same routes as bessel_k without the exponential decay,
/// usable for log-domain work at large rho.
SpecFunResult bessel_k_scaled(double nu, double rho);

/// Gauss hypergeometric 2F1(a, b; c; z) for 0 <= z < 1 by direct series.
/// c must not be a non-positive integer. Terminating series (a or b a
/// non-positive integer) are summed exactly.
SpecFunResult hyp2f1(double a, double b, double c, double z);

}  // namespace sobocon::specfun

#endif  // SOBOCON_SPECFUN_HPP
