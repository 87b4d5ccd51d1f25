#ifndef SOBOCON_BOUNDS_UPPER_HPP
#define SOBOCON_BOUNDS_UPPER_HPP

namespace sobocon::bounds {

/// Which branch of the admissibility condition a triple (r, n, d) falls in.
enum class Admissibility {
  R2Only,         // n = 0: only r = 2
  Subcritical,    // 0 < n < d/2, 2 <= r < d/(d/2 - n)
  Critical,       // n = d/2, 2 <= r < infinity
  Supercritical,  // n > d/2, 2 <= r <= infinity
  Inadmissible
};

const char* to_string(Admissibility a);

/// Parameter triple for the imbedding H^n(R^d) -> L^r(R^d).
/// r may be +infinity; all exponent arithmetic runs through inv_r() = 1/r,
/// which is exactly 0 at r = infinity.
struct EmbeddingParams {
  double r;
  double n;
  int d;

  double inv_r() const;
  Admissibility classify() const;
  bool admissible() const { return classify() != Admissibility::Inadmissible; }
  /// Throws domain_error naming the violated condition.
  void require_admissible() const;
};

Admissibility classify(double r, double n, int d);

/// Sharp Hausdorff-Young constant
///   C_(r,d) = (2 pi)^-(d/2 - d/r) (E(1/r)/E(1 - 1/r))^(d/2),  r in [2, inf].
double hausdorff_young_constant(double r, int d);

/// Radial weight integral over R^d:
///   int dk (1 + |k|^2)^(-mu/2) = pi^(d/2) Gamma((mu - d)/2)/Gamma(mu/2),
/// finite iff mu > d (throws domain_error otherwise).
double radial_weight_integral(double mu, int d);

struct UpperBoundBreakdown {
  double s_conjugate;      // s with 1/s = 1/2 - 1/r (infinity at r = 2)
  double p_conjugate;      // Hoelder conjugate of r (infinity at... r = 1; here in (1, 2])
  double hy_constant;      // C_(r,d)
  double weight_integral;  // radial_weight_integral(n*s, d)
  double s_plus;
};

/// Upper bound S+ for an admissible triple. At r = 2 this is exactly 1; at
/// r = infinity the Gamma-ratio closed form; otherwise the general closed
/// form, cross-checked at runtime against the product
/// C_(r,d) * weight_integral^(1/s) to 1e-12 relative.
UpperBoundBreakdown upper_bound_breakdown(const EmbeddingParams& p);
double upper_bound(double r, double n, int d);

}  // namespace sobocon::bounds

#endif  // SOBOCON_BOUNDS_UPPER_HPP
