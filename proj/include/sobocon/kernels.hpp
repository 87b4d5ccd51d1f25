#ifndef SOBOCON_KERNELS_HPP
#define SOBOCON_KERNELS_HPP

#include <span>
#include <vector>

#include "sobocon/numerics.hpp"

namespace sobocon::kernels {

/// Bessel-potential kernel order and dimension. nu must be positive: the
/// nu = 0 kernel is a point mass, not a pointwise function.
struct KernelSpec {
  double nu;
  int d;
};

/// G_(nu,d) at |x| = radius > 0:
///   G_(nu,d)(x) = |x|^(nu/2 - d/2) / (2^(nu/2 - 1) Gamma(nu/2)) K_(nu/2 - d/2)(|x|),
/// with the Macdonald order taken as |nu/2 - d/2|.
double g_kernel(const KernelSpec& spec, double radius);

/// L^r/H^n norm ratio of the rescaled trial kernel G^(lambda)_(2n,d);
/// n > d/2, 2 < r < inf, lambda > 0. sup over lambda equals the lower bound.
double scaled_ratio(double r, double n, int d, double lambda,
                    const numerics::QuadratureOptions& opts = {});

/// |ratio - S+_inf| / S+_inf where ratio = (2 pi)^(-d/2) sqrt(radial weight
/// integral at 2n): both sides are closed forms, so this is a cross-module
/// consistency residual and must sit at rounding level.
double supnorm_sharpness_residual(double n, int d);

/// ||f^(lambda)||_L2 / ||f^(lambda)||_Hn for the trial kernel f = G_(2n,d)
/// (n > d/2), one entry per lambda; lambdas must be positive and decreasing.
/// The ratios increase toward the sharp value 1 as lambda decreases.
std::vector<double> l2_scaling_limit(double n, int d,
                                     std::span<const double> lambdas,
                                     const numerics::QuadratureOptions& opts = {});

}  // namespace sobocon::kernels

#endif  // SOBOCON_KERNELS_HPP
