#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "neq/force.hpp"
#include "neq/quadrature.hpp"

using namespace neq;
using namespace neq::force;

namespace {

MaterialParams gold(double radius_m = 100e-9, double omega_c_eV = 1e-4) {
  return gold_preset().material(radius_m, Energy(omega_c_eV));
}

ThermalPair kelvin_pair(double T, double Tp) {
  return {temperature_to_energy(T), temperature_to_energy(Tp)};
}

struct PcScales {
  double eps, b, bp;
};

PcScales pc_scales(double a_m, double T, double Tp) {
  const double a = length_to_natural(a_m);
  return {2.0 * 0.035 * a, 1.0 / (2.0 * a * temperature_to_energy(T).eV()),
          1.0 / (2.0 * a * temperature_to_energy(Tp).eV())};
}

}  // namespace

TEST_CASE("vacuum force vanishes identically") {
  for (auto [t1, t2] : {std::pair{300.0, 300.0}, {300.0, 600.0}, {77.0, 4.0}}) {
    const auto r = vacuum_force(gold(), kelvin_pair(t1, t2));
    CHECK(r.F_x_eV2 == 0.0);
    CHECK(r.F_x_newton == 0.0);
    CHECK(r.mechanism == Mechanism::Vacuum);
  }
  CHECK(vacuum_force(gold(100e-9, 0.0), kelvin_pair(300, 600)).F_x_eV2 == 0.0);
}

TEST_CASE("slab f: closed form vs quadrature and antisymmetry") {
  for (double w : {0.3, 1.4, 12.0}) {
    for (double wp : {0.11, 2.8, 30.0}) {
      CAPTURE(w);
      CAPTURE(wp);
      CHECK(slab_f(w, wp) ==
            doctest::Approx(slab_f_quadrature(w, wp)).epsilon(1e-9));
      CHECK(slab_f(w, wp) == doctest::Approx(-slab_f(wp, w)).epsilon(1e-13));
    }
  }
  CHECK(slab_f(1.0, 1.0) == 0.0);
}

TEST_CASE("slab force prefactor and scaling") {
  const auto mat = gold();
  const auto th = kelvin_pair(300, 600);
  const auto r = slab_force(mat, th, 1e-6, mat.eta, mat.omega_p);
  // Positive toward the hotter-body convention and the known magnitude:
  // prefactor 5.10e-21 N for nu = eta, a = 1 um, R = 100 nm.
  CHECK(r.F_x_newton > 0.0);
  CHECK(r.F_x_newton / r.f_dimensionless ==
        doctest::Approx(5.10e-21).epsilon(0.005));
  // a^-4 scaling.
  const auto r2 = slab_force(mat, th, 2e-6, mat.eta, mat.omega_p);
  CHECK(r.F_x_newton / r2.F_x_newton == doctest::Approx(16.0).epsilon(1e-9));
  // T = T' gives zero.
  CHECK(slab_force(mat, kelvin_pair(300, 300), 1e-6, mat.eta, mat.omega_p)
            .F_x_eV2 == 0.0);
}

TEST_CASE("pc force numerator series against direct evaluation") {
  for (double u : {0.02, 0.05, 0.09}) {
    CAPTURE(u);
    const double direct =
        6.0 * u * std::cos(u) + 2.0 * (u * u - 3.0) * std::sin(u);
    const double u2 = u * u;
    const double series =
        u2 * u2 * u * (-2.0 / 15.0 + u2 * (1.0 / 105.0 - u2 / 3780.0));
    CHECK(series == doctest::Approx(direct).epsilon(1e-6));
  }
  CHECK(pc_force_numerator(1e-3) ==
        doctest::Approx(-2.0 / 15.0 * 1e-15).epsilon(1e-4));
}

TEST_CASE("pc force basics") {
  const auto mat10 = gold(10e-9);
  const auto th = kelvin_pair(300, 600);
  const auto r = pc_force(mat10, th, 100e-9);
  CHECK(r.F_x_newton > 0.0);
  // Known prefactor for the 10 nm sphere, 100 nm above the plate.
  CHECK(r.F_x_newton / r.f_dimensionless ==
        doctest::Approx(1.2544e-20).epsilon(0.005));
  // Equilibrium: zero.
  CHECK(pc_force(mat10, kelvin_pair(300, 300), 100e-9).F_x_eV2 == 0.0);
  // Antisymmetry of f0 under b <-> b'.
  const auto s = pc_scales(100e-9, 300, 600);
  CHECK(pc_f0(s.eps, s.b, s.bp) ==
        doctest::Approx(-pc_f0(s.eps, s.bp, s.b)).epsilon(1e-10));
  // Decay with separation: 1 mm is already orders below 100 nm.
  const auto far = pc_force(mat10, th, 1e-3, 1e-8);
  CHECK(std::abs(far.F_x_newton) < 1e-4 * r.F_x_newton);
  CHECK_THROWS_AS(pc_force(mat10, th, 0.0), UnitError);
}

TEST_CASE("pc force high-temperature limit f0 -> pi/(8 b')") {
  // Deep in the regime b' << 1/eps, b the limit is clean.
  {
    const double eps = 1e-3, b = 1e3, bp = 1e-3;
    const double f0 = pc_f0(eps, b, bp);
    CHECK(f0 == doctest::Approx(M_PI / (8.0 * bp)).epsilon(0.005));
  }
  // At the Fig. 5 separation the finite-eps correction ~ 0.8 eps plus the
  // constant -1/3 leave the limit a few percent short.
  const auto s = pc_scales(100e-9, 300, 600);
  const double bp = 1e-3 * std::min(1.0 / s.eps, s.b);
  const double f0 = pc_f0(s.eps, s.b, bp);
  const double expected =
      M_PI / (8.0 * bp) * (1.0 - 0.8 * s.eps) - 1.0 / 3.0;
  CHECK(f0 == doctest::Approx(expected).epsilon(0.005));
}

TEST_CASE("friction brackets: series, limits, Einstein-Hopf constant") {
  for (double u : {0.02, 0.05, 0.09}) {
    CAPTURE(u);
    const double direct_n =
        1.0 - (2.0 * u * std::cos(u) + (u * u - 2.0) * std::sin(u)) /
                  (u * u * u);
    CHECK(friction_bracket_noneq(u) == doctest::Approx(direct_n).epsilon(1e-6));
    const double u2 = u * u;
    const double m = -u * (u2 - 12.0) * std::cos(u) +
                     (5.0 * u2 - 12.0) * std::sin(u);
    const double direct_e = 1.0 - 3.0 * m / (u2 * u2 * u);
    CHECK(friction_bracket_eh(u) == doctest::Approx(direct_e).epsilon(1e-6));
  }
  // Small-u constants 2/3 and 4/5, with the quadratic corrections.
  CHECK(friction_bracket_noneq(1e-3) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(friction_bracket_eh(1e-3) == doctest::Approx(0.8).epsilon(1e-6));
  CHECK((friction_bracket_noneq(0.1) - 2.0 / 3.0) / 0.01 ==
        doctest::Approx(0.1).epsilon(0.01));
  CHECK((friction_bracket_eh(0.1) - 0.8) / 0.01 ==
        doctest::Approx(3.0 / 70.0).epsilon(0.01));
  // The series must still match the direct branch just above the crossover.
  {
    const double u = 0.12;
    const double u2 = u * u;
    const double series_n =
        2.0 / 3.0 + u2 * (0.1 + u2 * (-1.0 / 168.0 + u2 / 6480.0));
    CHECK(friction_bracket_noneq(u) == doctest::Approx(series_n).epsilon(1e-10));
    const double series_e =
        0.8 + u2 * (3.0 / 70.0 + u2 * (-1.0 / 504.0 + u2 / 23760.0));
    CHECK(friction_bracket_eh(u) == doctest::Approx(series_e).epsilon(1e-10));
    const double series_0 =
        u2 * u2 * u * (-2.0 / 15.0 + u2 * (1.0 / 105.0 - u2 / 3780.0));
    CHECK(pc_force_numerator(u) == doctest::Approx(series_0).epsilon(2e-9));
  }
  // Large u: both approach 1, so the Einstein-Hopf part of the friction
  // integrand carries the vacuum coefficient 2/3.
  CHECK(vacuum_einstein_hopf_coefficient == doctest::Approx(2.0 / 3.0));
  double mean = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i)
    mean += friction_bracket_eh(400.0 + 2.0 * M_PI * i / n);
  mean /= n;
  CHECK(mean == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("friction positive and independent of omega_c") {
  const auto geom = gold_preset().geometry(100e-9);
  const auto th = kelvin_pair(300, 600);
  const auto dyn1 = pc_friction_linear(gold(100e-9, 1e-4), th, geom, 100e-9, 1e-7);
  const auto dyn2 = pc_friction_linear(gold(100e-9, 3e-4), th, geom, 100e-9, 1e-7);
  CHECK(dyn1.f1.total() > 0.0);
  CHECK(!dyn1.runaway);
  // F1' does not involve omega_c; F0 is linear in it.
  CHECK(dyn1.F_1_prime_eV2 == doctest::Approx(dyn2.F_1_prime_eV2).epsilon(1e-12));
  CHECK(dyn2.F_0_eV2 == doctest::Approx(3.0 * dyn1.F_0_eV2).epsilon(1e-9));
  // Velocity scale 2 omega_c a for a = 100 nm.
  CHECK(dyn1.velocity_scale == doctest::Approx(1.014e-4).epsilon(0.001));
  REQUIRE(dyn1.terminal_velocity_scaled.has_value());
  CHECK(*dyn1.terminal_velocity_scaled ==
        doctest::Approx(dyn1.f0 / dyn1.f1.total()).epsilon(1e-12));
  REQUIRE(dyn1.damping_time_s.has_value());
  CHECK(*dyn1.damping_time_s > 0.0);
}

TEST_CASE("friction split pieces both contribute") {
  const auto s = pc_scales(100e-9, 300, 600);
  const auto split = pc_f1_split(s.eps, s.b, s.bp, 1e-8);
  CHECK(split.noneq > 0.0);
  CHECK(split.einstein_hopf > 0.0);
  CHECK(split.total() == doctest::Approx(split.noneq + split.einstein_hopf));
  // Equal temperatures: only the Einstein-Hopf drag remains.
  const auto eq = pc_f1_split(s.eps, s.b, s.b, 1e-8);
  CHECK(eq.noneq == 0.0);
  CHECK(eq.einstein_hopf > 0.0);
}

TEST_CASE("force-from-torque consistency on a fixed configuration") {
  const auto mat = gold();
  const auto drude = [&](Energy w) {
    return material::drude_epsilon(mat.omega_p, mat.eta, w);
  };
  const double residual = force_from_torque_consistency(
      mat, kelvin_pair(300, 600), 200e-9, drude, 1e-9);
  CHECK(residual < 1e-8);
  // Reciprocal body: both routes are exactly zero.
  const double zero = force_from_torque_consistency(
      gold(100e-9, 0.0), kelvin_pair(300, 600), 200e-9, drude, 1e-9);
  CHECK(zero == 0.0);
}
