#include "sobocon/bounds_lower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sobocon/bounds_upper.hpp"
#include "sobocon/errors.hpp"
#include "sobocon/specfun.hpp"

namespace sobocon::bounds {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_integer(double x) { return x == std::floor(x); }

double sin_pi(double x) {
  // argument reduction keeps sin(pi x) accurate near integer x
  const double k = std::round(x);
  const double r = x - k;
  const double s = std::sin(kPi * r);
  return (std::fmod(std::fabs(k), 2.0) == 0.0) ? s : -s;
}

struct SignedLnGamma {
  double ln_abs;
  double sign;  // 0 at the poles (non-positive integers)
};

SignedLnGamma signed_ln_gamma(double x) {
  if (x > 0.0) return {specfun::ln_gamma(x).value, 1.0};
  if (is_integer(x)) return {std::numeric_limits<double>::infinity(), 0.0};
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = sin_pi(x);
  const double ln_abs = std::log(kPi / std::fabs(s)) -
                        specfun::ln_gamma(1.0 - x).value;
  return {ln_abs, s > 0.0 ? 1.0 : -1.0};
}

// Beta continued to negative non-integer arguments; 0 whenever z + w hits a
// Gamma pole that the numerator does not share.
double beta_signed(double z, double w) {
  const SignedLnGamma gz = signed_ln_gamma(z);
  const SignedLnGamma gw = signed_ln_gamma(w);
  if (gz.sign == 0.0 || gw.sign == 0.0)
    throw domain_error("beta_signed: argument at a Gamma pole");
  const SignedLnGamma gzw = signed_ln_gamma(z + w);
  if (gzw.sign == 0.0) return 0.0;
  return gz.sign * gw.sign * gzw.sign *
         std::exp(gz.ln_abs + gw.ln_abs - gzw.ln_abs);
}

void require_phi_domain(double n, int d, double lambda) {
  if (d < 1) throw domain_error("phi: d must be >= 1");
  if (!(n > 0.5 * d))
    throw domain_error("phi: requires n > d/2, got n=" + std::to_string(n) +
                       ", d=" + std::to_string(d));
  if (!(lambda > 0.0))
    throw domain_error("phi: lambda must be positive, got " +
                       std::to_string(lambda));
}

void require_lower_r(double r) {
  if (!(r > 2.0) || std::isinf(r))
    throw domain_error("lower bound: requires 2 < r < inf, got r=" +
                       std::to_string(r));
}

// 2n - d/2 - 1 in N makes the hypergeometric form of psi a 0/0 limit the
// closed form does not cover; refuse anything within 1e-8 of that set.
bool hyp_form_singular(double n, int d) {
  const double v = 2.0 * n - 0.5 * d - 1.0;
  const double nearest = std::round(v);
  return nearest >= 0.0 && std::fabs(v - nearest) <= 1e-8;
}

PhiEvaluation psi_binomial(double n, int d, double lambda) {
  const int ni = static_cast<int>(n);
  double coeff = 1.0;  // binomial(n, l)
  double lam_pow = 1.0;
  const double lam2 = lambda * lambda;
  double sum = 0.0, abs_err = 0.0;
  for (int l = 0; l <= ni; ++l) {
    const specfun::SpecFunResult b =
        specfun::beta(l + 0.5 * d, 2.0 * n - 0.5 * d - l);
    const double term = coeff * b.value * lam_pow;
    sum += term;
    abs_err += coeff * lam_pow * b.abs_error_estimate + kEps * std::fabs(term);
    coeff *= static_cast<double>(ni - l) / (l + 1.0);
    lam_pow *= lam2;
  }
  return {lambda, 0.5 * sum, PhiRoute::Binomial, 0.5 * abs_err};
}

PhiEvaluation psi_hypergeometric(double n, int d, double lambda) {
  if (!(lambda < 1.0))
    throw domain_error(
        "phi: hypergeometric route requires lambda < 1, got lambda=" +
        std::to_string(lambda));
  if (hyp_form_singular(n, d))
    throw singular_parameter_error(
        "phi: hypergeometric form singular (2n - d/2 - 1 is a non-negative "
        "integer) at n=" +
        std::to_string(n) + ", d=" + std::to_string(d));
  const double z = lambda * lambda;
  const double hd = 0.5 * d;
  const specfun::SpecFunResult b1 = specfun::beta(2.0 * n - hd, hd);
  const specfun::SpecFunResult f1 =
      specfun::hyp2f1(hd, -n, 1.0 + hd - 2.0 * n, z);
  const double b2 = beta_signed(n - hd, hd - 2.0 * n);
  const specfun::SpecFunResult f2 =
      specfun::hyp2f1(2.0 * n, n - hd, 1.0 - hd + 2.0 * n, z);
  const double lam_pow = std::pow(lambda, 4.0 * n - d);
  const double value = 0.5 * (b1.value * f1.value + lam_pow * b2 * f2.value);
  const double abs_err =
      0.5 * (std::fabs(b1.value) * f1.abs_error_estimate +
             b1.abs_error_estimate * std::fabs(f1.value) +
             lam_pow * std::fabs(b2) *
                 (f2.abs_error_estimate + 8.0 * kEps * std::fabs(f2.value))) +
      4.0 * kEps * std::fabs(value);
  return {lambda, value, PhiRoute::Hypergeometric, abs_err};
}

PhiEvaluation psi_quadrature(double n, int d, double lambda,
                             const numerics::QuadratureOptions& opts) {
  const double lam2 = lambda * lambda;
  const auto f = [n, d, lam2](double s) {
    const double s2 = s * s;
    // log form dodges overflow of (1 + lam^2 s^2)^n at large lambda*s
    return std::exp((d - 1) * std::log(s) + n * std::log1p(lam2 * s2) -
                    2.0 * n * std::log1p(s2));
  };
  const numerics::QuadratureResult q = numerics::integrate_semiline(f, opts);
  return {lambda, q.value, PhiRoute::Quadrature, q.abs_error_estimate};
}

PhiEvaluation psi_example_closed_form(double n, int d, double lambda) {
  const double l2 = lambda * lambda;
  double value;
  if (n == 1.0 && d == 1) {
    value = kPi * (l2 + 1.0) / 4.0;
  } else if (n == 3.0 && d == 1) {
    value = 3.0 * kPi * (((l2 + 3.0) * l2 + 7.0) * l2 + 21.0) / 512.0;
  } else if (n == 2.0 && d == 2) {
    value = ((l2 + 1.0) * l2 + 1.0) / 6.0;
  } else if (n == 2.0 && d == 3) {
    value = kPi * ((5.0 * l2 + 2.0) * l2 + 1.0) / 32.0;
  } else {
    throw domain_error(
        "phi: no example closed form for (n, d) = (" + std::to_string(n) +
        ", " + std::to_string(d) + ")");
  }
  return {lambda, value, PhiRoute::ExampleClosedForm, 8.0 * kEps * value};
}

// positive root of the (3,1) minimizer sextic, solved as a cubic in u =
// lambda^2; the sign pattern (+,+,+,-) guarantees a unique positive root
double sextic_root_31(double r) {
  const double c3 = 5.0 + 2.0 / r;
  const double c2 = 9.0 + 6.0 / r;
  const double c1 = 7.0 + 14.0 / r;
  const double c0 = -(21.0 - 42.0 / r);
  if (!(c3 > 0.0 && c2 > 0.0 && c1 > 0.0 && c0 < 0.0))
    throw std::logic_error(
        "phi_minimize: sextic coefficient signs violated at r=" +
        std::to_string(r));
  auto p = [&](double u) { return ((c3 * u + c2) * u + c1) * u + c0; };
  double lo = 0.0, hi = 2.0;
  if (!(p(lo) < 0.0 && p(hi) > 0.0))
    throw std::logic_error("phi_minimize: sextic root not bracketed in [0, 2]");
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::sqrt(0.5 * (lo + hi));
}

}  // namespace

const char* to_string(PhiRoute route) {
  switch (route) {
    case PhiRoute::Auto: return "auto";
    case PhiRoute::Quadrature: return "quadrature";
    case PhiRoute::Binomial: return "binomial";
    case PhiRoute::Hypergeometric: return "hypergeometric";
    case PhiRoute::ExampleClosedForm: return "example-closed-form";
  }
  return "?";
}

const char* to_string(BracketKind kind) {
  switch (kind) {
    case BracketKind::Sharp: return "sharp";
    case BracketKind::Estimated: return "estimated";
    case BracketKind::UpperOnly: return "upper-only";
  }
  return "?";
}

PhiEvaluation phi_integral(double n, int d, double lambda, PhiRoute route,
                           const numerics::QuadratureOptions& opts) {
  require_phi_domain(n, d, lambda);
  if (route == PhiRoute::Auto)
    route = is_integer(n) ? PhiRoute::Binomial : PhiRoute::Quadrature;
  switch (route) {
    case PhiRoute::Binomial:
      if (!is_integer(n))
        throw domain_error("phi: binomial route requires integer n, got n=" +
                           std::to_string(n));
      return psi_binomial(n, d, lambda);
    case PhiRoute::Hypergeometric:
      return psi_hypergeometric(n, d, lambda);
    case PhiRoute::Quadrature:
      return psi_quadrature(n, d, lambda, opts);
    case PhiRoute::ExampleClosedForm:
      return psi_example_closed_form(n, d, lambda);
    case PhiRoute::Auto:
      break;
  }
  throw std::logic_error("phi: unreachable route");
}

PhiEvaluation phi(double r, double n, int d, double lambda, PhiRoute route,
                  const numerics::QuadratureOptions& opts) {
  require_lower_r(r);
  PhiEvaluation psi = phi_integral(n, d, lambda, route, opts);
  const double prefactor = std::pow(lambda, -(d - 2.0 * d / r));
  psi.value *= prefactor;
  psi.abs_error_estimate *= prefactor;
  if (!(psi.value > 0.0) || !std::isfinite(psi.value))
    throw range_error("phi: non-positive or non-finite value at lambda=" +
                      std::to_string(lambda));
  return psi;
}

double i_integral_log(double r, double n, int d,
                      const numerics::QuadratureOptions& opts) {
  require_lower_r(r);
  if (d < 1) throw domain_error("i_integral: d must be >= 1");
  if (!(n > 0.5 * d)) throw domain_error("i_integral: requires n > d/2");

  if (n == 0.5 * d + 0.5) {
    // elementary case: the integrand is a pure monomial times e^(-rt)
    return 0.5 * r * std::log(0.5 * kPi) + specfun::ln_gamma(d).value -
           d * std::log(r);
  }

  const double nu = n - 0.5 * d;
  const auto log_integrand = [nu, r, d](double t) {
    const double ks = specfun::bessel_k_scaled(nu, t).value;
    return (d - 1.0) * std::log(t) +
           r * (nu * std::log(t) + std::log(ks) - t);
  };

  // locate the peak of the log-integrand so the quadrature runs on a
  // unit-scaled integrand regardless of how large (pi/2)^(r/2)-type factors
  // get; the peak sits near nu + (d-1)/r, so the probe window grows with nu
  double log_peak = -std::numeric_limits<double>::infinity();
  constexpr int kProbe = 200;
  const double t_hi = std::max(64.0, 4.0 * nu + 16.0);
  for (int i = 0; i < kProbe; ++i) {
    const double t = 1e-8 * std::pow(t_hi / 1e-8, i / (kProbe - 1.0));
    log_peak = std::max(log_peak, log_integrand(t));
  }
  if (!std::isfinite(log_peak))
    throw range_error("i_integral: integrand peak not representable");

  const auto f = [&](double t) { return std::exp(log_integrand(t) - log_peak); };
  const numerics::QuadratureResult q = numerics::integrate_semiline(f, opts);
  if (!(q.value > 0.0))
    throw convergence_error("i_integral: quadrature lost all significance",
                            q.value, q.abs_error_estimate);
  return log_peak + std::log(q.value);
}

double i_integral(double r, double n, int d,
                  const numerics::QuadratureOptions& opts) {
  return std::exp(i_integral_log(r, n, d, opts));
}

numerics::MinimizationResult phi_minimize(
    double r, double n, int d, const numerics::QuadratureOptions& opts) {
  require_lower_r(r);
  require_phi_domain(n, d, 1.0);

  double lambda_closed = std::numeric_limits<double>::quiet_NaN();
  if (n == 1.0 && d == 1) {
    lambda_closed = std::sqrt((1.0 - 2.0 / r) / (1.0 + 2.0 / r));
  } else if (n == 2.0 && d == 2) {
    lambda_closed =
        std::sqrt((-1.0 / r + std::sqrt(1.0 - 3.0 / (r * r))) / (1.0 + 2.0 / r));
  } else if (n == 2.0 && d == 3) {
    lambda_closed = std::sqrt(
        (1.0 - 6.0 / r + 4.0 * std::sqrt(1.0 + 3.0 / r - 9.0 / (r * r))) /
        (5.0 * (1.0 + 6.0 / r)));
  } else if (n == 3.0 && d == 1) {
    lambda_closed = sextic_root_31(r);
  }

  const auto objective = [&](double lam) {
    return phi(r, n, d, lam, PhiRoute::Auto, opts).value;
  };

  // widen the scan downward when the minimizer sits below the default
  // bracket (lambda* -> 0 as r -> 2)
  numerics::MinimizationResult numeric{};
  double lo = 1e-3;
  for (int attempt = 0;; ++attempt) {
    try {
      numeric = numerics::minimize_scalar(objective, {lo, 1e3}, 1e-10);
      break;
    } catch (const bracketing_error&) {
      if (attempt == 2) throw;
      lo *= 1e-3;
    }
  }

  if (std::isnan(lambda_closed)) return numeric;

  if (std::fabs(lambda_closed - numeric.arg_min) >
      1e-8 * std::max(1.0, lambda_closed))
    throw std::logic_error(
        "phi_minimize: closed-form and numeric minimizers disagree beyond "
        "1e-8 at (r, n, d) = (" +
        std::to_string(r) + ", " + std::to_string(n) + ", " +
        std::to_string(d) + "): " + std::to_string(lambda_closed) + " vs " +
        std::to_string(numeric.arg_min));

  numerics::MinimizationResult out = numeric;
  out.arg_min = lambda_closed;
  out.min_value = objective(lambda_closed);
  return out;
}

LowerBoundBreakdown lower_bound(double r, double n, int d,
                                const numerics::QuadratureOptions& opts) {
  require_lower_r(r);
  require_phi_domain(n, d, 1.0);

  LowerBoundBreakdown out{};
  out.log_i = i_integral_log(r, n, d, opts);
  out.i_value = std::exp(out.log_i);
  out.phi_min = phi_minimize(r, n, d, opts);
  if (!(out.phi_min.min_value > 0.0))
    throw range_error("lower_bound: Phi must be positive");

  const double ln_prefactor = specfun::ln_gamma(0.5 * d).value - kLn2 -
                              0.5 * d * std::log(kPi);
  const double ln_s =
      (0.5 - 1.0 / r) * ln_prefactor + out.log_i / r - (n - 1.0) * kLn2 -
      specfun::ln_gamma(n).value - 0.5 * std::log(out.phi_min.min_value);
  out.s_minus = std::exp(ln_s);
  return out;
}

BoundBracket bracket(double r, double n, int d,
                     const numerics::QuadratureOptions& opts) {
  const EmbeddingParams params{r, n, d};
  params.require_admissible();

  if (r == 2.0) return {1.0, 1.0, 0.0, BracketKind::Sharp, std::nullopt};

  if (std::isinf(r)) {
    // admissibility already forces n > d/2 here; Prop-3.2-type sharpness
    const double s = upper_bound(r, n, d);
    return {s, s, 0.0, BracketKind::Sharp, std::nullopt};
  }

  const double upper = upper_bound(r, n, d);
  if (!(n > 0.5 * d))
    return {std::nullopt, upper, std::nullopt, BracketKind::UpperOnly,
            std::nullopt};

  const LowerBoundBreakdown lb = lower_bound(r, n, d, opts);
  return {lb.s_minus, upper, (upper - lb.s_minus) / lb.s_minus,
          BracketKind::Estimated, lb.phi_min.arg_min};
}

}  // namespace sobocon::bounds
