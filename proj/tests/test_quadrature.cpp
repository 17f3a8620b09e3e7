#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "neq/quadrature.hpp"
#include "neq/special_functions.hpp"

using namespace neq;
using namespace neq::quad;

TEST_CASE("gamma function integral: x^3 e^-x over (0,inf) = 6") {
  IntegrandSpec spec;
  spec.f = [](double x) { return x * x * x * std::exp(-x); };
  spec.rate = 1.0;
  const auto r = integrate_semi_infinite(spec, 1e-10);
  CHECK(r.value == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(r.abs_error >= std::abs(r.value - 6.0));
  CHECK(r.evaluations > 0);
  CHECK(r.truncation_point > 45.0);
}

TEST_CASE("Bose-weighted rational integrand matches the I2 closed form") {
  IntegrandSpec spec;
  spec.f = [](double x) {
    const double d = x * x + 1.0;
    return x * x * x / (d * d) * bose(x);
  };
  spec.rate = 1.0;
  const auto r = integrate_semi_infinite(spec, 1e-10);
  CHECK(r.value == doctest::Approx(specfun::I2(1.0)).epsilon(1e-9));
}

TEST_CASE("oscillatory damped integral: sin(u) e^{-bu} = 1/(1+b^2)") {
  for (double b : {0.1, 1.0, 10.0}) {
    CAPTURE(b);
    IntegrandSpec spec;
    spec.f = [b](double u) { return std::sin(u) * std::exp(-b * u); };
    spec.rate = b;
    spec.oscillation_period = 2.0 * M_PI;
    const auto r = integrate_semi_infinite(spec, 1e-10);
    CHECK(r.value == doctest::Approx(1.0 / (1.0 + b * b)).epsilon(1e-9));
  }
}

TEST_CASE("halving the tolerance never worsens agreement with closed forms") {
  const std::vector<double> ws = {0.01, 0.1, 1.0, 10.0, 100.0};
  for (double w : ws) {
    CAPTURE(w);
    IntegrandSpec spec;
    spec.f = [w](double x) { return x / (x * x + 1.0) * bose(w * x); };
    spec.rate = w;
    const double exact = specfun::I1(w);
    double prev = std::abs(integrate_semi_infinite(spec, 1e-6).value - exact);
    for (double tol : {5e-7, 2.5e-7, 1.25e-7}) {
      const double err =
          std::abs(integrate_semi_infinite(spec, tol).value - exact);
      // Tightening tolerance may not help once converged, but must not
      // blow the discrepancy past the previous tolerance band.
      CHECK(err <= std::max(prev, tol * std::abs(exact)) * 1.0001);
      prev = err;
    }
  }
}

TEST_CASE("error estimates are honest on the oracle suite") {
  struct Case {
    std::function<double(double)> f;
    double rate;
    double exact;
  };
  std::vector<Case> suite;
  for (double w : {0.03, 0.3, 3.0, 30.0}) {
    suite.push_back({[w](double x) { return x / (x * x + 1.0) * bose(w * x); },
                     w, specfun::I1(w)});
    suite.push_back({[w](double x) {
                       const double d = x * x + 1.0;
                       return x * x * x / (d * d) * bose(w * x);
                     },
                     w, specfun::I2(w)});
    suite.push_back({[w](double x) {
                       const double d = x * x + 1.0;
                       return x / (d * d) * bose(w * x);
                     },
                     w, specfun::J_slab(w)});
  }
  int honest = 0;
  for (const auto& c : suite) {
    IntegrandSpec spec;
    spec.f = c.f;
    spec.rate = c.rate;
    const auto r = integrate_semi_infinite(spec, 1e-8);
    if (std::abs(r.value - c.exact) <= r.abs_error) ++honest;
  }
  CHECK(honest >= (int)(0.95 * suite.size()));
}

TEST_CASE("transverse-force integrand converges with a tight error estimate") {
  // Fig. 5 parameters: gold damping, a = 100 nm, T = 300 K, T' = 600 K.
  const double a = length_to_natural(100e-9);
  const double eps = 2.0 * 0.035 * a;
  const double b = 1.0 / (2.0 * a * temperature_to_energy(300).eV());
  const double bp = 1.0 / (2.0 * a * temperature_to_energy(600).eV());
  IntegrandSpec spec;
  spec.f = [=](double u) {
    const double d = u * u + eps * eps;
    const double num = 6.0 * u * std::cos(u) + 2.0 * (u * u - 3.0) * std::sin(u);
    return num / (d * d) * (bose(b * u) - bose(bp * u));
  };
  spec.rate = bp;
  spec.oscillation_period = 2.0 * M_PI;
  const auto r = integrate_semi_infinite(spec, 1e-9);
  CHECK(std::isfinite(r.value));
  CHECK(r.abs_error < 1e-8 * std::abs(r.value));
}

TEST_CASE("power-law decay: 1/(1+u^2)^2 over (0,inf) = pi/4") {
  IntegrandSpec spec;
  spec.f = [](double u) {
    const double d = 1.0 + u * u;
    return 1.0 / (d * d);
  };
  spec.decay = Decay::PowerLaw;
  const auto r = integrate_semi_infinite(spec, 1e-9);
  CHECK(r.value == doctest::Approx(M_PI / 4.0).epsilon(1e-8));
}

TEST_CASE("bose factor limits") {
  CHECK(bose(1.0) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
  // Laurent behavior for small argument.
  for (double x : {1e-8, 1e-4, 1e-2}) {
    CHECK(bose(x) == doctest::Approx(1.0 / x - 0.5 + x / 12.0)
                         .epsilon(1e-10));
  }
  CHECK(bose(800.0) == 0.0);
  CHECK(std::isfinite(bose(699.0)));
  // Energy overload.
  CHECK(bose(Energy(0.025), Energy(0.025)) == doctest::Approx(bose(1.0)));
  // csch^2(x/2) identity against the direct evaluation.
  for (double x : {0.1, 1.0, 20.0}) {
    const double direct = std::pow(1.0 / std::sinh(0.5 * x), 2);
    CHECK(csch_sq_half(x) == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK(csch_sq_half(1500.0) == 0.0);
}

TEST_CASE("nonconvergence carries a partial estimate") {
  Options opt;
  opt.rel_tol = 1e-13;
  opt.max_panels = 8;
  bool threw = false;
  try {
    integrate([](double x) { return std::sin(50.0 * x) / (1e-6 + x * x); }, 0.0,
              10.0, opt);
  } catch (const ConvergenceError& e) {
    threw = true;
    CHECK(std::isfinite(e.partial.value));
    CHECK(e.partial.abs_error > 0.0);
  }
  CHECK(threw);
}

TEST_CASE("invalid tolerance and rate are rejected") {
  IntegrandSpec spec;
  spec.f = [](double x) { return std::exp(-x); };
  spec.rate = 1.0;
  CHECK_THROWS_AS(integrate_semi_infinite(spec, 0.5), std::invalid_argument);
  spec.rate = -1.0;
  CHECK_THROWS_AS(integrate_semi_infinite(spec, 1e-8), std::invalid_argument);
}
