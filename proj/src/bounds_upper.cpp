#include "sobocon/bounds_upper.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sobocon/errors.hpp"
#include "sobocon/specfun.hpp"

namespace sobocon::bounds {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::R2Only: return "r2-only";
    case Admissibility::Subcritical: return "subcritical";
    case Admissibility::Critical: return "critical";
    case Admissibility::Supercritical: return "supercritical";
    case Admissibility::Inadmissible: return "inadmissible";
  }
  return "?";
}

double EmbeddingParams::inv_r() const {
  return std::isinf(r) ? 0.0 : 1.0 / r;
}

Admissibility EmbeddingParams::classify() const {
  if (d < 1 || !(n >= 0.0) || std::isnan(r) || r < 2.0)
    return Admissibility::Inadmissible;
  if (n == 0.0)
    return r == 2.0 ? Admissibility::R2Only : Admissibility::Inadmissible;
  const double half_d = 0.5 * d;
  if (n < half_d) {
    // the limit exponent d/(d/2 - n) itself is excluded
    return r < d / (half_d - n) ? Admissibility::Subcritical
                                : Admissibility::Inadmissible;
  }
  if (n == half_d)
    return std::isinf(r) ? Admissibility::Inadmissible
                         : Admissibility::Critical;
  return Admissibility::Supercritical;
}

void EmbeddingParams::require_admissible() const {
  if (admissible()) return;
  std::string why;
  if (d < 1)
    why = "d must be a positive integer";
  else if (!(n >= 0.0))
    why = "n must be >= 0";
  else if (std::isnan(r) || r < 2.0)
    why = "r must lie in [2, inf]";
  else if (n == 0.0)
    why = "n = 0 admits only r = 2";
  else if (n < 0.5 * d)
    why = "0 < n < d/2 requires 2 <= r < d/(d/2 - n) = " +
          std::to_string(d / (0.5 * d - n)) + " (limit value excluded)";
  else
    why = "n = d/2 requires 2 <= r < inf";
  throw domain_error("inadmissible (r, n, d) = (" + std::to_string(r) + ", " +
                     std::to_string(n) + ", " + std::to_string(d) + "): " +
                     why);
}

Admissibility classify(double r, double n, int d) {
  return EmbeddingParams{r, n, d}.classify();
}

double hausdorff_young_constant(double r, int d) {
  if (std::isnan(r) || r < 2.0)
    throw domain_error("hausdorff_young_constant: r must lie in [2, inf]");
  if (d < 1) throw domain_error("hausdorff_young_constant: d must be >= 1");
  const double ir = std::isinf(r) ? 0.0 : 1.0 / r;
  return std::pow(2.0 * kPi, -(0.5 * d - d * ir)) *
         std::pow(specfun::e_power(ir) / specfun::e_power(1.0 - ir), 0.5 * d);
}

double radial_weight_integral(double mu, int d) {
  if (d < 1) throw domain_error("radial_weight_integral: d must be >= 1");
  if (!(mu > d))
    throw domain_error(
        "radial_weight_integral: integral diverges unless mu > d (mu=" +
        std::to_string(mu) + ", d=" + std::to_string(d) + ")");
  const double lg_num = specfun::ln_gamma(0.5 * (mu - d)).value;
  const double lg_den = specfun::ln_gamma(0.5 * mu).value;
  return std::exp(0.5 * d * std::log(kPi) + lg_num - lg_den);
}

UpperBoundBreakdown upper_bound_breakdown(const EmbeddingParams& p) {
  p.require_admissible();
  const double ir = p.inv_r();
  UpperBoundBreakdown out{};
  out.p_conjugate = (ir == 0.0) ? 1.0 : p.r / (p.r - 1.0);

  if (p.r == 2.0) {
    out.s_conjugate = kInf;
    out.hy_constant = 1.0;
    out.weight_integral = std::numeric_limits<double>::quiet_NaN();
    out.s_plus = 1.0;
    return out;
  }

  const double half_exp = 0.5 - ir;       // 1/s
  const double s = 1.0 / half_exp;        // = 2/(1 - 2/r), equals 2 at r = inf
  out.s_conjugate = s;
  const double ns = p.n * s;
  // admissibility guarantees n s > d here; the weight integral would throw
  // otherwise
  out.hy_constant = hausdorff_young_constant(p.r, p.d);
  out.weight_integral = radial_weight_integral(ns, p.d);

  // closed form in log space: gamma ratios stay tame even as r -> 2
  const double lg_ratio = specfun::ln_gamma(0.5 * ns - 0.5 * p.d).value -
                          specfun::ln_gamma(0.5 * ns).value;
  const double ln_splus =
      -(0.25 * p.d - 0.5 * p.d * ir) * std::log(4.0 * kPi) +
      half_exp * lg_ratio +
      0.5 * p.d * std::log(specfun::e_power(ir) / specfun::e_power(1.0 - ir));
  out.s_plus = std::exp(ln_splus);

  // the bound must equal the Hausdorff-Young constant times the weight
  // integral to the power 1/s; both routes are cheap, so verify every call
  const double composed =
      out.hy_constant * std::pow(out.weight_integral, half_exp);
  if (std::fabs(composed - out.s_plus) > 1e-12 * out.s_plus)
    throw std::logic_error(
        "upper_bound: closed form and Hausdorff-Young composition disagree "
        "beyond 1e-12 at (r, n, d) = (" +
        std::to_string(p.r) + ", " + std::to_string(p.n) + ", " +
        std::to_string(p.d) + ")");
  return out;
}

double upper_bound(double r, double n, int d) {
  return upper_bound_breakdown(EmbeddingParams{r, n, d}).s_plus;
}

}  // namespace sobocon::bounds
