#include "sobocon/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sobocon/bounds_lower.hpp"
#include "sobocon/bounds_upper.hpp"
#include "sobocon/errors.hpp"
#include "sobocon/specfun.hpp"

namespace sobocon::kernels {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

double g_kernel(const KernelSpec& spec, double radius) {
  if (!(spec.nu > 0.0))
    throw domain_error("g_kernel: nu must be positive (nu = 0 is the "
                       "distributional case), got nu=" +
                       std::to_string(spec.nu));
  if (spec.d < 1) throw domain_error("g_kernel: d must be >= 1");
  if (!(radius > 0.0))
    throw domain_error(
        "g_kernel: radius must be positive (the kernel may be singular at "
        "0), got " +
        std::to_string(radius));

  const double order = 0.5 * spec.nu - 0.5 * spec.d;
  const double k = specfun::bessel_k(std::fabs(order), radius).value;
  const double ln_pref = order * std::log(radius) -
                         (0.5 * spec.nu - 1.0) * kLn2 -
                         specfun::ln_gamma(0.5 * spec.nu).value;
  return std::exp(ln_pref) * k;
}

double scaled_ratio(double r, double n, int d, double lambda,
                    const numerics::QuadratureOptions& opts) {
  const double log_i = bounds::i_integral_log(r, n, d, opts);
  const bounds::PhiEvaluation p =
      bounds::phi(r, n, d, lambda, bounds::PhiRoute::Auto, opts);
  const double ln_prefactor =
      specfun::ln_gamma(0.5 * d).value - kLn2 - 0.5 * d * std::log(kPi);
  return std::exp((0.5 - 1.0 / r) * ln_prefactor + log_i / r -
                  (n - 1.0) * kLn2 - specfun::ln_gamma(n).value -
                  0.5 * std::log(p.value));
}

double supnorm_sharpness_residual(double n, int d) {
  if (d < 1) throw domain_error("supnorm_sharpness_residual: d must be >= 1");
  if (!(n > 0.5 * d))
    throw domain_error("supnorm_sharpness_residual: requires n > d/2");
  const double ratio = std::pow(2.0 * kPi, -0.5 * d) *
                       std::sqrt(bounds::radial_weight_integral(2.0 * n, d));
  const double sharp = bounds::upper_bound(kInf, n, d);
  return std::fabs(ratio - sharp) / sharp;
}

std::vector<double> l2_scaling_limit(double n, int d,
                                     std::span<const double> lambdas,
                                     const numerics::QuadratureOptions& opts) {
  if (d < 1) throw domain_error("l2_scaling_limit: d must be >= 1");
  if (!(n > 0.5 * d))
    throw domain_error(
        "l2_scaling_limit: the trial kernel lies in H^n only for n > d/2");
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0))
      throw domain_error("l2_scaling_limit: lambdas must be positive");
    if (i > 0 && !(lambdas[i] < lambdas[i - 1]))
      throw domain_error("l2_scaling_limit: lambdas must be strictly "
                         "decreasing");
  }

  // ||f||_L2^2 is the full radial weight integral at order 4n; the H^n norm
  // carries the lambda-scaled weight (1 + lambda^2 |h|^2)^n, i.e. the same
  // integral core as phi up to the surface measure of the unit sphere
  const double num = bounds::radial_weight_integral(4.0 * n, d);
  const double sphere =
      2.0 * std::pow(kPi, 0.5 * d) /
      std::exp(specfun::ln_gamma(0.5 * d).value);

  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lam : lambdas) {
    const bounds::PhiEvaluation psi =
        bounds::phi_integral(n, d, lam, bounds::PhiRoute::Auto, opts);
    out.push_back(std::sqrt(num / (sphere * psi.value)));
  }
  return out;
}

}  // namespace sobocon::kernels
