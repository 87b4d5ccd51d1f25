#include "sobocon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sobocon/errors.hpp"

namespace sobocon::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

// One G7K15 evaluation; error is the conservative |G7 - K15|.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  resk *= h;
  resg *= h;
  if (!std::isfinite(resk))
    throw convergence_error("integrate_semiline: integrand not finite on [" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                "]",
                            resk, std::numeric_limits<double>::infinity());
  const double err =
      std::fabs(resk - resg) + kEps * std::fabs(resk);
  return {a, b, resk, err};
}

}  // namespace

QuadratureResult integrate_semiline(const std::function<double(double)>& f,
                                    const QuadratureOptions& opts) {
  constexpr double kCut = 64.0;  // hand over to the 1/t map beyond here

  // the far tail [kCut, inf) is folded onto u in (0, 1/kCut] by t = 1/u,
  // which turns both exponential and algebraic decay into an integrable
  // endpoint handled by the same adaptive rule as every other panel
  const std::function<double(double)> tail = [&f](double u) {
    return f(1.0 / u) / (u * u);
  };

  struct Piece {
    const std::function<double(double)>* g;
    Panel panel;
  };
  std::vector<Piece> pieces;
  auto push = [&](const std::function<double(double)>* g, double a, double b) {
    pieces.push_back({g, gk15(*g, a, b)});
  };
  push(&f, 0.0, 0.5);
  push(&f, 0.5, 1.0);
  for (double lo = 1.0; lo < kCut; lo *= 2.0) push(&f, lo, lo * 2.0);
  push(&tail, 0.0, 1.0 / kCut);
  int subdivisions = static_cast<int>(pieces.size());

  auto totals = [&](double& value, double& err) {
    value = 0.0;
    err = 0.0;
    for (const Piece& p : pieces) {
      value += p.panel.value;
      err += p.panel.error;
    }
  };

  while (true) {
    double value, err;
    totals(value, err);
    if (err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(value)))
      return {value, err, subdivisions};
    if (subdivisions >= opts.max_subdivisions)
      throw convergence_error(
          "integrate_semiline: subdivision budget (" +
              std::to_string(opts.max_subdivisions) + ") exhausted",
          value, err);
    size_t worst = 0;
    for (size_t i = 1; i < pieces.size(); ++i)
      if (pieces[i].panel.error > pieces[worst].panel.error) worst = i;
    const Piece p = pieces[worst];
    const double mid = 0.5 * (p.panel.a + p.panel.b);
    pieces[worst].panel = gk15(*p.g, p.panel.a, mid);
    pieces.push_back({p.g, gk15(*p.g, mid, p.panel.b)});
    ++subdivisions;
  }
}

QuadratureResult integrate_semiline(const std::function<double(double)>& f,
                                    double abs_tol, double rel_tol) {
  QuadratureOptions opts;
  opts.abs_tol = abs_tol;
  opts.rel_tol = rel_tol;
  return integrate_semiline(f, opts);
}

MinimizationResult minimize_scalar(const std::function<double(double)>& g,
                                   std::pair<double, double> initial_bracket,
                                   const MinimizationOptions& opts) {
  const double a0 = initial_bracket.first;
  const double b0 = initial_bracket.second;
  if (!(a0 > 0.0) || !(b0 > a0))
    throw domain_error("minimize_scalar: need 0 < bracket.first < bracket.second");

  // log-spaced pre-scan
  const int m = std::max(4, opts.grid_points);
  std::vector<double> xs(static_cast<size_t>(m)), fs(static_cast<size_t>(m));
  const double lr = std::log(b0 / a0);
  for (int i = 0; i < m; ++i) {
    xs[static_cast<size_t>(i)] = a0 * std::exp(lr * i / (m - 1.0));
    fs[static_cast<size_t>(i)] = g(xs[static_cast<size_t>(i)]);
  }
  size_t best = 0;
  for (size_t i = 1; i < xs.size(); ++i)
    if (fs[i] < fs[best]) best = i;

  int local_minima = 0;
  for (size_t i = 1; i + 1 < xs.size(); ++i)
    if (fs[i] < fs[i - 1] && fs[i] < fs[i + 1]) ++local_minima;
  const bool multiple = local_minima > 1;

  if (best == 0 || best + 1 == xs.size())
    throw bracketing_error(
        "minimize_scalar: grid minimum on the bracket boundary (no enclosed "
        "descent)",
        xs[best], fs[best]);

  // the basin cell certifies the enclosure: g at both ends >= grid minimum
  const double cell_lo = xs[best - 1], cell_hi = xs[best + 1];

  // golden-section inside the cell
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = cell_lo, b = cell_hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  int iterations = 0;
  while (b - a > opts.x_tol && iterations < 400) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = g(x2);
    }
    ++iterations;
  }
  double xm = (f1 < f2) ? x1 : x2;
  double fm = std::min(f1, f2);

  // parabolic polish: golden on its own localizes the minimizer only to
  // ~sqrt(eps) because of rounding noise in g; a vertex fit over a wider
  // stencil averages the noise out. The vertex may evaluate a rounding hair
  // above the incumbent, so ties within noise are accepted.
  for (int pass = 0; pass < 2; ++pass) {
    const double h = std::max(1e-5 * std::fabs(xm), 1e-9);
    const double xl = xm - h, xr = xm + h;
    if (!(xl > cell_lo) || !(xr < cell_hi)) break;
    const double fl = g(xl), fr = g(xr);
    const double d1 = xm - xl, d2 = xm - xr;
    const double den = d1 * (fm - fr) - d2 * (fm - fl);
    if (den == 0.0) break;
    // vertex of the parabola through (xl, fl), (xm, fm), (xr, fr)
    const double cand =
        xm - 0.5 * (d1 * d1 * (fm - fr) - d2 * d2 * (fm - fl)) / den;
    if (!(std::fabs(cand - xm) <= h)) break;
    const double fc = g(cand);
    const double noise = 64.0 * kEps * std::fabs(fm);
    if (fc > fm + noise || fc > std::min(fl, fr)) break;
    xm = cand;
    fm = fc;
    ++iterations;
  }

  return {xm, fm, std::max(iterations, 1), {cell_lo, cell_hi}, multiple};
}

MinimizationResult minimize_scalar(const std::function<double(double)>& g,
                                   std::pair<double, double> initial_bracket,
                                   double x_tol) {
  MinimizationOptions opts;
  opts.x_tol = x_tol;
  return minimize_scalar(g, initial_bracket, opts);
}

}  // namespace sobocon::numerics
