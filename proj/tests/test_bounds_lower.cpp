#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "sobocon/bounds_lower.hpp"
#include "sobocon/bounds_upper.hpp"
#include "sobocon/errors.hpp"
#include "sobocon/numerics.hpp"
#include "sobocon/specfun.hpp"

using namespace sobocon;
using bounds::PhiRoute;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_rel(double got, double want, double tol) {
  CHECK(std::fabs(got - want) <= tol * std::fabs(want));
}

// the fully explicit (1,1) lower bound
double s_minus_11_explicit(double r) {
  const double ir = 1.0 / r;
  return specfun::e_power(ir) / std::pow(2.0, 0.5 - ir) *
         std::pow(specfun::e_power(1.0 + 2.0 * ir), 0.25) *
         std::pow(specfun::e_power(1.0 - 2.0 * ir), 0.25);
}
}  // namespace

TEST_CASE("i_integral closed forms") {
  // (r, 1, 1): (pi/2)^(r/2) / r
  check_rel(bounds::i_integral(4.0, 1.0, 1), 0.61685027506808491368, 1e-12);
  check_rel(bounds::i_integral(2.5, 1.0, 1),
            std::pow(0.5 * kPi, 1.25) / 2.5, 1e-12);
  // (r, 2, 3): (pi/2)^(r/2) * 2 / r^3
  check_rel(bounds::i_integral(2.5, 2.0, 3),
            std::pow(0.5 * kPi, 1.25) * 2.0 / std::pow(2.5, 3.0), 1e-12);
  check_rel(bounds::i_integral(7.0, 2.0, 3),
            std::pow(0.5 * kPi, 3.5) * 2.0 / 343.0, 1e-12);
}

TEST_CASE("i_integral quadrature for (3, 2, 2) with Simpson cross-check") {
  const double got = bounds::i_integral(3.0, 2.0, 2);
  check_rel(got, 0.3609713433871476528, 1e-9);

  // independent coarse Simpson oracle on [1e-6, 60]
  const auto f = [](double t) {
    const double k1 = specfun::bessel_k(1.0, t).value;
    return t * std::pow(t * k1, 3.0);
  };
  const double simpson = oracles::simpson(f, 1e-6, 60.0, 60000);
  check_rel(got, simpson, 1e-8);
}

TEST_CASE("closed-form I equals quadrature of the defining integral") {
  // n = d/2 + 1/2 goes through the elementary form; quadrature the
  // definition directly with bessel_k
  for (int d : {1, 2, 3})
    for (double r : {2.5, 4.0, 10.0}) {
      const double n = 0.5 * d + 0.5;
      const double nu = n - 0.5 * d;  // = 1/2
      const auto f = [nu, r, d](double t) {
        const double k = specfun::bessel_k(nu, t).value;
        return std::pow(t, d - 1.0) * std::pow(std::pow(t, nu) * k, r);
      };
      const auto q = numerics::integrate_semiline(f, 1e-14, 1e-12);
      check_rel(bounds::i_integral(r, n, d), q.value, 1e-9);
    }
}

TEST_CASE("i_integral elementary expansion oracle for (r, 3, 1)") {
  // integer r: expand (t^2+3t+3)^r and integrate term by term; no
  // quadrature involved on the oracle side
  const struct { int r; double want; } refs[] = {
      {3, 73.5629929563578042},
      {6, 2658.68846567684688},
      {10, 403697.398032991071},
  };
  for (const auto& ref : refs) {
    const double oracle = oracles::i_integral_31_expansion(ref.r);
    check_rel(oracle, ref.want, 1e-12);  // oracle against frozen reference
    check_rel(bounds::i_integral(ref.r, 3.0, 1), oracle, 1e-9);
  }
}

TEST_CASE("i_integral_log stays finite when I overflows double") {
  const double li = bounds::i_integral_log(1000.0, 3.5, 2);
  CHECK(std::isfinite(li));
  CHECK(li > 709.0);  // the plain value would overflow
  CHECK(bounds::i_integral(1000.0, 3.5, 2) ==
        std::numeric_limits<double>::infinity());
  // the assembled lower bound stays finite and ordered
  const auto lb = bounds::lower_bound(1000.0, 3.5, 2);
  CHECK(std::isfinite(lb.s_minus));
  CHECK(lb.s_minus <= bounds::upper_bound(1000.0, 3.5, 2));
}

TEST_CASE("i_integral domain errors") {
  CHECK_THROWS_AS(bounds::i_integral(2.0, 1.0, 1), domain_error);
  CHECK_THROWS_AS(bounds::i_integral(kInf, 1.0, 1), domain_error);
  CHECK_THROWS_AS(bounds::i_integral(4.0, 0.5, 1), domain_error);
}

TEST_CASE("phi closed-form values") {
  // phi_(4,1,1)(1) = pi/2
  check_rel(bounds::phi(4.0, 1.0, 1, 1.0).value, 0.5 * kPi, 1e-12);
  // phi_(4,2,2)(1) = 1/2
  check_rel(bounds::phi(4.0, 2.0, 2, 1.0).value, 0.5, 1e-12);
  // (r, 3, 1) display at lambda = 0.8, r = 5
  const double lam = 0.8, r = 5.0;
  const double l2 = lam * lam;
  const double want = 3.0 * kPi * (l2 * l2 * l2 + 3.0 * l2 * l2 + 7.0 * l2 + 21.0) /
                      (512.0 * std::pow(lam, 1.0 - 2.0 / r));
  check_rel(bounds::phi(r, 3.0, 1, lam).value, want, 1e-12);
  // (r, 2, 3) display at lambda = 1.3, r = 7
  const double mu = 1.3, q = 7.0, m2 = mu * mu;
  const double want23 = kPi * (5.0 * m2 * m2 + 2.0 * m2 + 1.0) /
                        (32.0 * std::pow(mu, 3.0 - 6.0 / q));
  check_rel(bounds::phi(q, 2.0, 3, mu).value, want23, 1e-12);
}

TEST_CASE("phi route selection and agreement") {
  // auto picks the binomial sum for integer n, quadrature otherwise
  CHECK(bounds::phi(4.0, 2.0, 2, 0.7).route == PhiRoute::Binomial);
  CHECK(bounds::phi(4.0, 1.5, 1, 0.7).route == PhiRoute::Quadrature);

  // non-integer probe: quadrature vs hypergeometric, value frozen from a
  // 50-digit evaluation
  const auto pq = bounds::phi(4.0, 1.5, 1, 0.5, PhiRoute::Quadrature);
  const auto ph = bounds::phi(4.0, 1.5, 1, 0.5, PhiRoute::Hypergeometric);
  check_rel(pq.value, 0.9506341318500465897, 1e-9);
  check_rel(ph.value, 0.9506341318500465897, 1e-9);
  CHECK(std::fabs(pq.value - ph.value) <=
        pq.abs_error_estimate + ph.abs_error_estimate);

  // integer n, odd d: all three routes plus the example closed form
  for (double lam : {0.2, 0.5, 0.9}) {
    const auto b = bounds::phi(3.0, 1.0, 1, lam, PhiRoute::Binomial);
    const auto h = bounds::phi(3.0, 1.0, 1, lam, PhiRoute::Hypergeometric);
    const auto qd = bounds::phi(3.0, 1.0, 1, lam, PhiRoute::Quadrature);
    const auto ex = bounds::phi(3.0, 1.0, 1, lam, PhiRoute::ExampleClosedForm);
    check_rel(h.value, b.value, 1e-8);
    check_rel(qd.value, b.value, 1e-8);
    check_rel(ex.value, b.value, 1e-12);
    CHECK(b.value > 0.0);
  }

  // example closed forms match the binomial sum for all four cases
  struct Case { double n; int d; };
  for (const Case c : {Case{1.0, 1}, Case{3.0, 1}, Case{2.0, 2}, Case{2.0, 3}})
    for (double lam : {0.3, 1.0, 2.5}) {
      const auto b = bounds::phi(5.0, c.n, c.d, lam, PhiRoute::Binomial);
      const auto ex =
          bounds::phi(5.0, c.n, c.d, lam, PhiRoute::ExampleClosedForm);
      check_rel(ex.value, b.value, 1e-12);
    }
}

TEST_CASE("phi route preconditions") {
  CHECK_THROWS_AS(bounds::phi(4.0, 1.5, 1, 0.5, PhiRoute::Binomial),
                  domain_error);
  CHECK_THROWS_AS(bounds::phi(4.0, 1.5, 1, 1.5, PhiRoute::Hypergeometric),
                  domain_error);
  // 2n - d/2 - 1 = 2 for (n, d) = (2, 2): singular hypergeometric form
  CHECK_THROWS_AS(bounds::phi(4.0, 2.0, 2, 0.5, PhiRoute::Hypergeometric),
                  singular_parameter_error);
  // non-integer n can be singular too: (1.25, 1) gives 2n - d/2 - 1 = 1
  CHECK_THROWS_AS(bounds::phi(4.0, 1.25, 1, 0.5, PhiRoute::Hypergeometric),
                  singular_parameter_error);
  CHECK_THROWS_AS(bounds::phi(4.0, 2.3, 1, 0.5, PhiRoute::ExampleClosedForm),
                  domain_error);
  CHECK_THROWS_AS(bounds::phi(2.0, 1.0, 1, 0.5), domain_error);
  CHECK_THROWS_AS(bounds::phi(4.0, 0.5, 1, 0.5), domain_error);
  CHECK_THROWS_AS(bounds::phi(4.0, 1.0, 1, 0.0), domain_error);
  CHECK_THROWS_AS(bounds::phi(4.0, 1.0, 1, -1.0), domain_error);
}

TEST_CASE("phi_minimize closed-form minimizers") {
  // lambda*_(6,1,1) = sqrt((2/3)/(4/3)) = 1/sqrt(2)
  const auto m611 = bounds::phi_minimize(6.0, 1.0, 1);
  check_rel(m611.arg_min, 1.0 / std::sqrt(2.0), 1e-10);

  // r -> inf limit: lambda* -> 1
  const auto mbig = bounds::phi_minimize(1e6, 1.0, 1);
  CHECK(std::fabs(mbig.arg_min - 1.0) < 1e-5);

  // (6, 3, 1): positive root of the minimizer sextic, frozen reference
  const auto m631 = bounds::phi_minimize(6.0, 3.0, 1);
  check_rel(m631.arg_min, 0.85045982054011809898, 1e-9);

  // independent bisection of the sextic written out directly
  const double r = 6.0;
  const auto sextic = [r](double l) {
    const double u = l * l;
    return (5.0 + 2.0 / r) * u * u * u + (9.0 + 6.0 / r) * u * u +
           (7.0 + 14.0 / r) * u - (21.0 - 42.0 / r);
  };
  double lo = 0.0, hi = 2.0;
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sextic(mid) < 0.0 ? lo : hi) = mid;
  }
  check_rel(m631.arg_min, 0.5 * (lo + hi), 1e-10);
}

TEST_CASE("closed-form minimizers satisfy the stationarity condition") {
  // central difference |phi'(lambda*)| < 1e-7 phi(lambda*)/lambda*
  struct Case { double r, n; int d; };
  for (const Case c : {Case{4.0, 1.0, 1}, Case{18.0, 2.0, 2},
                       Case{7.0, 2.0, 3}, Case{6.0, 3.0, 1}}) {
    const auto m = bounds::phi_minimize(c.r, c.n, c.d);
    const double lam = m.arg_min;
    const double h = 1e-6 * lam;
    const double der = (bounds::phi(c.r, c.n, c.d, lam + h).value -
                        bounds::phi(c.r, c.n, c.d, lam - h).value) /
                       (2.0 * h);
    CHECK(std::fabs(der) < 1e-7 * m.min_value / lam);
  }
}

TEST_CASE("phi_minimize generic fallback handles fractional n") {
  const auto m = bounds::phi_minimize(5.0, 1.7, 2);
  CHECK(m.bracket.first < m.arg_min);
  CHECK(m.arg_min < m.bracket.second);
  CHECK_FALSE(m.multiple_minima);
  // stationarity of the numeric minimizer
  const double lam = m.arg_min, h = 1e-5 * lam;
  const double der = (bounds::phi(5.0, 1.7, 2, lam + h).value -
                      bounds::phi(5.0, 1.7, 2, lam - h).value) /
                     (2.0 * h);
  CHECK(std::fabs(der) < 1e-5 * m.min_value / lam);
}

TEST_CASE("lower_bound reproduces the tabulated rows") {
  check_rel(bounds::lower_bound(4.0, 1.0, 1).s_minus, 0.6347942379, 1e-8);
  check_rel(bounds::lower_bound(6.0, 3.0, 1).s_minus, 0.4872286708, 1e-8);
  check_rel(bounds::lower_bound(18.0, 2.0, 2).s_minus, 0.2582758247, 1e-8);
  check_rel(bounds::lower_bound(7.0, 2.0, 3).s_minus, 0.1486180229, 1e-8);
}

TEST_CASE("lower_bound matches the fully explicit (1,1) form") {
  for (double r : {2.2, 3.0, 4.0, 6.0, 50.0, 1000.0})
    check_rel(bounds::lower_bound(r, 1.0, 1).s_minus, s_minus_11_explicit(r),
              1e-10);
}

TEST_CASE("lower_bound breakdown assembles to s_minus") {
  const auto lb = bounds::lower_bound(5.0, 2.0, 2);
  const double ln_pref = specfun::ln_gamma(1.0).value - std::log(2.0) -
                         std::log(kPi);
  const double assembled =
      std::exp((0.5 - 0.2) * ln_pref + lb.log_i / 5.0 - std::log(2.0) -
               specfun::ln_gamma(2.0).value -
               0.5 * std::log(lb.phi_min.min_value));
  check_rel(lb.s_minus, assembled, 1e-12);
  CHECK(lb.i_value == doctest::Approx(std::exp(lb.log_i)));
}

TEST_CASE("lower bound never exceeds the upper bound (spot checks)") {
  struct Case { double r, n; int d; };
  for (const Case c : {Case{2.2, 1.0, 1}, Case{6.0, 3.0, 1}, Case{3.0, 2.0, 2},
                       Case{11.0, 2.0, 3}, Case{4.5, 2.6, 4}}) {
    const double lo = bounds::lower_bound(c.r, c.n, c.d).s_minus;
    const double hi = bounds::upper_bound(c.r, c.n, c.d);
    CHECK(lo <= hi);
  }
}

TEST_CASE("bracket covers all four outcome shapes") {
  const auto sharp2 = bounds::bracket(2.0, 5.0, 3);
  CHECK(sharp2.kind == bounds::BracketKind::Sharp);
  CHECK(*sharp2.lower == 1.0);
  CHECK(sharp2.upper == 1.0);

  const auto sharpinf = bounds::bracket(kInf, 1.0, 1);
  CHECK(sharpinf.kind == bounds::BracketKind::Sharp);
  check_rel(*sharpinf.lower, 1.0 / std::sqrt(2.0), 1e-12);
  check_rel(sharpinf.upper, 1.0 / std::sqrt(2.0), 1e-12);

  const auto est = bounds::bracket(6.0, 1.0, 1);
  CHECK(est.kind == bounds::BracketKind::Estimated);
  CHECK(*est.lower <= est.upper);
  check_rel(*est.lower, 0.6057068643, 1e-8);
  check_rel(est.upper, 0.6344970746, 1e-8);
  CHECK(*est.rel_uncertainty < 0.05);
  CHECK(est.lambda_star.has_value());

  const auto upper_only = bounds::bracket(3.0, 1.0, 3);
  CHECK(upper_only.kind == bounds::BracketKind::UpperOnly);
  CHECK_FALSE(upper_only.lower.has_value());
  CHECK_FALSE(upper_only.rel_uncertainty.has_value());

  const auto critical = bounds::bracket(4.0, 1.5, 3);
  CHECK(critical.kind == bounds::BracketKind::UpperOnly);

  CHECK_THROWS_AS(bounds::bracket(6.0, 1.0, 3), domain_error);
}

TEST_CASE("large-r row stays inside the tabulated sandwich") {
  // S-(1000, 1, 1) lies between its table row and the sharp r = inf value
  const double s = bounds::lower_bound(1000.0, 1.0, 1).s_minus;
  CHECK(s >= 0.7027);
  CHECK(s <= 0.7072);
}

TEST_CASE("bracket order on a randomized admissible grid") {
  oracles::Rng rng(424242u);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.uniform_int(1, 4);
    const double n = 0.5 * d + rng.uniform(0.05, 5.0);
    const double r =
        std::exp(rng.uniform(std::log(2.02), std::log(1000.0)));
    const auto b = bounds::bracket(r, n, d);
    REQUIRE(b.lower.has_value());
    CHECK(*b.lower <= b.upper);
    CHECK(*b.rel_uncertainty >= 0.0);
  }
}
