#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "neq/quadrature.hpp"
#include "neq/torque.hpp"

using namespace neq;
using namespace neq::torque;

namespace {

MaterialParams gold(double radius_m = 100e-9, double omega_c_eV = 1e-4) {
  return gold_preset().material(radius_m, Energy(omega_c_eV));
}

ThermalPair kelvin_pair(double T, double Tp) {
  return {temperature_to_energy(T), temperature_to_energy(Tp)};
}

}  // namespace

TEST_CASE("vacuum torque equilibrium and sign") {
  const auto mat = gold();
  CHECK(vacuum_torque(mat, kelvin_pair(300, 300)) == 0.0);
  // Positive for a hotter body, negative for a colder one.
  CHECK(vacuum_torque(mat, kelvin_pair(300, 600)) > 0.0);
  CHECK(vacuum_torque(mat, kelvin_pair(300, 150)) < 0.0);
}

TEST_CASE("vacuum torque antisymmetric under temperature exchange") {
  const auto mat = gold();
  for (auto [t1, t2] : {std::pair{300.0, 600.0}, {120.0, 900.0}, {40.0, 77.0}}) {
    const double fwd = vacuum_torque(mat, kelvin_pair(t1, t2));
    const double rev = vacuum_torque(mat, kelvin_pair(t2, t1));
    CHECK(fwd == doctest::Approx(-rev).epsilon(1e-12));
  }
}

TEST_CASE("vacuum torque linear in omega_c") {
  const auto th = kelvin_pair(300, 600);
  const double tau1 = vacuum_torque(gold(100e-9, 1e-4), th);
  const double tau2 = vacuum_torque(gold(100e-9, 2e-4), th);
  CHECK(tau2 == doctest::Approx(2.0 * tau1).epsilon(1e-10));
  CHECK(vacuum_torque(gold(100e-9, -1e-4), th) ==
        doctest::Approx(-tau1).epsilon(1e-12));
}

TEST_CASE("torque prefactor for the gold 100 nm sphere") {
  CHECK(torque_to_si(vacuum_torque_prefactor(gold())) ==
        doctest::Approx(8.36e-25).epsilon(0.005));
}

TEST_CASE("frozen values for the standard configuration") {
  // Anchors computed by the defining-integral route and confirmed by the
  // closed forms; both must keep reproducing them.
  const auto mat = gold();
  CHECK(vacuum_torque_bracket(kelvin_pair(300, 600), mat.eta) ==
        doctest::Approx(1.33576886486).epsilon(1e-10));
  CHECK(tau1_prime(mat, kelvin_pair(300, 600)) ==
        doctest::Approx(0.360173952313).epsilon(1e-10));
  const auto critical = tau1_sign_change(mat, temperature_to_energy(300.0));
  REQUIRE(critical.has_value());
  CHECK(critical->kelvin() == doctest::Approx(192.1665121).epsilon(1e-8));
}

TEST_CASE("closed form against the frequency-integral route") {
  const auto mat = gold();
  // beta eta and beta' eta both covering [0.05, 50].
  const double eta = mat.eta.eV();
  for (double w : {0.05, 0.7, 5.0, 50.0}) {
    for (double wp : {0.05, 1.3, 8.0, 50.0}) {
      if (w == wp) continue;
      CAPTURE(w);
      CAPTURE(wp);
      const ThermalPair th{Energy(eta / w), Energy(eta / wp)};
      const double closed = vacuum_torque(mat, th);
      const double quadrature = vacuum_torque_quadrature(mat, th);
      CHECK(closed == doctest::Approx(quadrature).epsilon(1e-8));
    }
  }
}

TEST_CASE("tau_1' closed form against its defining integral") {
  const auto mat = gold();
  const double eta = mat.eta.eV();
  for (double w : {0.1, 1.4, 20.0}) {
    for (double wp : {0.07, 2.0, 35.0}) {
      CAPTURE(w);
      CAPTURE(wp);
      const ThermalPair th{Energy(eta / w), Energy(eta / wp)};
      CHECK(tau1_prime(mat, th) ==
            doctest::Approx(tau1_prime_quadrature(mat, th)).epsilon(1e-8));
    }
  }
}

TEST_CASE("terminal angular velocity reaches omega_c/3 at high T'") {
  const auto mat = gold();
  const auto geom = gold_preset().geometry(100e-9);
  const Energy T = temperature_to_energy(300.0);
  // Log corrections decay like (eta/T') ln(T'/eta): about 0.009 omega_c at
  // T'/eta = 50, under 1% of the limit itself by T'/eta = 400.
  for (double ratio : {50.0, 400.0}) {
    const ThermalPair th{T, Energy(ratio * mat.eta.eV())};
    const auto dyn = rotating_torque_linear(mat, th, geom);
    REQUIRE(dyn.terminal_omega_per_s.has_value());
    const double omega_c_si = rate_to_si(mat.omega_c.eV());
    CHECK(std::abs(*dyn.terminal_omega_per_s / omega_c_si - 1.0 / 3.0) < 0.01);
  }
  const ThermalPair far{T, Energy(400.0 * mat.eta.eV())};
  const auto dyn = rotating_torque_linear(mat, far, geom);
  CHECK(*dyn.terminal_omega_per_s / rate_to_si(mat.omega_c.eV()) ==
        doctest::Approx(1.0 / 3.0).epsilon(0.01));
}

TEST_CASE("friction coefficient changes sign below a critical T'") {
  const auto mat = gold();
  const Energy T = temperature_to_energy(300.0);
  const auto critical = tau1_sign_change(mat, T);
  REQUIRE(critical.has_value());
  // Located around half room temperature for the gold preset.
  CHECK(critical->kelvin() > 100.0);
  CHECK(critical->kelvin() < 250.0);
  const double delta = 1.0 + 1e-3;
  CHECK(tau1_prime(mat, {T, Energy(critical->eV() * delta)}) > 0.0);
  CHECK(tau1_prime(mat, {T, Energy(critical->eV() / delta)}) < 0.0);
  // Cold body: growth flagged, terminal values undefined.
  const auto dyn =
      rotating_torque_linear(mat, kelvin_pair(300, 50), gold_preset().geometry(100e-9));
  CHECK(dyn.exponential_growth);
  CHECK(!dyn.terminal_omega_per_s.has_value());
  CHECK_THROWS_AS(spin_trajectory(dyn, {0.0}), material::ModelError);
}

TEST_CASE("spin dynamics internal identity") {
  // Initial acceleration equals terminal velocity over relaxation time.
  const auto dyn = rotating_torque_linear(gold(), kelvin_pair(300, 450),
                                          gold_preset().geometry(100e-9));
  REQUIRE(dyn.terminal_omega_per_s.has_value());
  CHECK(*dyn.initial_accel_per_s2 ==
        doctest::Approx(*dyn.terminal_omega_per_s / *dyn.relaxation_time_s)
            .epsilon(1e-12));
}

TEST_CASE("spin trajectory endpoints") {
  const auto dyn = rotating_torque_linear(gold(), kelvin_pair(300, 600),
                                          gold_preset().geometry(100e-9));
  REQUIRE(dyn.terminal_omega_per_s.has_value());
  const double t0 = *dyn.relaxation_time_s;
  const auto omega = spin_trajectory(dyn, {0.0, t0, 50.0 * t0});
  CHECK(omega[0] == 0.0);
  CHECK(omega[1] ==
        doctest::Approx(*dyn.terminal_omega_per_s * (1.0 - std::exp(-1.0)))
            .epsilon(1e-12));
  CHECK(omega[2] == doctest::Approx(*dyn.terminal_omega_per_s).epsilon(1e-9));
  // Monotone increasing toward the terminal value.
  CHECK(omega[0] < omega[1]);
  CHECK(omega[1] < omega[2]);
}

TEST_CASE("approximation branches track the exact bracket in their windows") {
  const auto mat = gold();
  const Energy T(0.714 * mat.eta.eV());
  using specfun::ExpansionRegime;
  // High-temperature branch within 2% of exact for T'/eta > 10.
  for (double r : {10.0, 30.0, 300.0}) {
    CAPTURE(r);
    const ThermalPair th{T, Energy(r * mat.eta.eV())};
    const double exact = vacuum_torque_bracket(th, mat.eta);
    const double branch = vacuum_torque_bracket_regime(
        th, mat.eta, ExpansionRegime::HighTemperature);
    CHECK(std::abs(branch / exact - 1.0) < 0.02);
  }
  // Low-temperature branch within 2% for T'/eta < 0.05.
  for (double r : {0.05, 0.02, 0.005}) {
    CAPTURE(r);
    const ThermalPair th{T, Energy(r * mat.eta.eV())};
    const double exact = vacuum_torque_bracket(th, mat.eta);
    const double branch = vacuum_torque_bracket_regime(
        th, mat.eta, ExpansionRegime::LowTemperature);
    CHECK(std::abs(branch / exact - 1.0) < 0.02);
  }
}

TEST_CASE("plate bracket small-u series and limits") {
  // Series against the direct evaluation where both are accurate.
  for (double u : {0.02, 0.035, 0.08}) {
    CAPTURE(u);
    const double direct =
        1.0 - 1.5 * (u * std::cos(u) + (u * u - 1.0) * std::sin(u)) / (u * u * u);
    const double series = u * u * (0.2 + u * u * (-3.0 / 280.0 + u * u / 3780.0));
    CHECK(series == doctest::Approx(direct).epsilon(1e-9));
  }
  // u^2/5 behavior at small u and approach to 1 at large u.
  for (double u : {1e-3, 1e-2, 5e-2}) {
    CHECK(pc_bracket(u) / (u * u) == doctest::Approx(0.2).epsilon(2e-3));
  }
  // Just above the crossover the implementation uses the direct form; the
  // series must still match it there.
  {
    const double u = 0.12;
    const double u2 = u * u;
    const double series = u2 * (0.2 + u2 * (-3.0 / 280.0 + u2 / 3780.0));
    CHECK(pc_bracket(u) == doctest::Approx(series).epsilon(1e-9));
  }
  CHECK(pc_bracket(1000.0) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(pc_bracket(40.0) > 0.8);
}

TEST_CASE("scattering part agrees with its own integral") {
  // The combined total-torque integrand folds the vacuum and scattering
  // pieces; re-derive the scattering part alone and compare.
  const auto mat = gold();
  const auto th = kelvin_pair(300, 600);
  const double a_m = 2e-6;
  const auto res = plate_torque_pc(mat, th, a_m, 1e-10);

  const double a = length_to_natural(a_m);
  const double eps = 2.0 * a * mat.eta.eV();
  const double b = th.beta() / (2.0 * a);
  const double bp = th.beta_body() / (2.0 * a);
  quad::IntegrandSpec spec;
  spec.f = [&](double u) {
    const double d = u * u + eps * eps;
    const double num = u * std::cos(u) + (u * u - 1.0) * std::sin(u);
    return num / (d * d) * (quad::bose(b * u) - quad::bose(bp * u));
  };
  spec.rate = std::min(b, bp);
  spec.oscillation_period = 2.0 * M_PI;
  const double wp2 = mat.omega_p.eV() * mat.omega_p.eV();
  const double direct = 2.0 / (M_PI * M_PI) * mat.volume_natural() *
                        mat.omega_c.eV() * wp2 * mat.eta.eV() *
                        quad::integrate_semi_infinite(spec, 1e-10).value;
  CHECK(res.scattering_eV == doctest::Approx(direct).epsilon(1e-7));
}

TEST_CASE("LL friction coefficient against its defining integrals") {
  // tau_1' = (1/pi^2) int w^2 im alpha_S [n' - n]
  //        + (beta/12 pi^2) int w^3 im alpha_S csch^2(beta w/2),
  // with im alpha_S = 18 V w eta / omega_p^2.
  const auto mat = gold();
  for (auto [t1, t2] : {std::pair{300.0, 500.0}, {240.0, 90.0}}) {
    const double T_env = t1, T_body = t2;
    CAPTURE(T_env);
    CAPTURE(T_body);
    const auto th = kelvin_pair(T_env, T_body);
    const double beta = th.beta();
    const double beta_p = th.beta_body();
    const auto im_alpha = [&](double w) {
      return material::ll_im_alpha_trace_xy_approx(mat, Energy(w));
    };
    quad::IntegrandSpec noneq;
    noneq.f = [&](double w) {
      return w * w * im_alpha(w) * (quad::bose(beta_p * w) - quad::bose(beta * w));
    };
    noneq.rate = std::min(beta, beta_p);
    quad::IntegrandSpec eh;
    eh.f = [&](double w) {
      return w * w * w * im_alpha(w) * quad::csch_sq_half(beta * w);
    };
    eh.rate = beta;
    const double pi2 = M_PI * M_PI;
    double quadrature = 0.0;
    if (t1 != t2)
      quadrature += quad::integrate_semi_infinite(noneq, 1e-10).value / pi2;
    quadrature +=
        beta / (12.0 * pi2) * quad::integrate_semi_infinite(eh, 1e-10).value;
    CHECK(ll_tau1_prime(mat, th) == doctest::Approx(quadrature).epsilon(1e-8));
  }
}

TEST_CASE("plate torque limits in the separation") {
  const auto mat = gold();
  const auto th = kelvin_pair(300, 600);
  const double vac = vacuum_torque(mat, th);

  // Conducting plate quenches the torque as a -> 0.
  const auto near = plate_torque_pc(mat, th, 1e-9);
  CHECK(std::abs(near.tau_z_eV) < 1e-4 * std::abs(vac));
  CHECK(near.vacuum_eV + near.scattering_eV ==
        doctest::Approx(near.tau_z_eV).epsilon(1e-12));

  // Far from the plate the vacuum result returns.
  const auto far = plate_torque_pc(mat, th, 1e-2, 1e-7);
  CHECK(far.tau_z_eV == doctest::Approx(vac).epsilon(1e-3));

  CHECK_THROWS_AS(plate_torque_pc(mat, th, -1.0), UnitError);
}

TEST_CASE("slab torque trivial zeros") {
  const auto mat = gold();
  const auto eps_fn = [](Energy w) {
    return material::drude_epsilon(Energy(9.0), Energy(0.035), w);
  };
  const auto equal = plate_torque_slab(mat, kelvin_pair(300, 300), 1e-7, eps_fn);
  CHECK(equal.tau_z_eV == doctest::Approx(equal.vacuum_eV));
  CHECK(equal.vacuum_eV == 0.0);
  const auto reciprocal =
      plate_torque_slab(gold(100e-9, 0.0), kelvin_pair(300, 600), 1e-7, eps_fn);
  CHECK(reciprocal.tau_z_eV == 0.0);
}

TEST_CASE("slab torque approaches the perfect-conductor result") {
  const auto mat = gold();
  const auto th = kelvin_pair(300, 600);
  const double a = 200e-9;
  const auto pc = plate_torque_pc(mat, th, a, 1e-9);
  const auto slab = plate_torque_slab(
      mat, th, a, [](Energy) { return material::complex(1e10, 0.0); }, 1e-6);
  CHECK(slab.tau_z_eV == doctest::Approx(pc.tau_z_eV).epsilon(1e-4));
}

TEST_CASE("LL torque closed form, sign, and quadrature route") {
  const auto mat = gold();
  CHECK(ll_vacuum_torque(mat, kelvin_pair(300, 300)) == 0.0);
  // Hotter body spins DOWN in the LL-corrected model (T^6 - T'^6 < 0).
  CHECK(ll_vacuum_torque(mat, kelvin_pair(300, 600)) < 0.0);
  for (auto [t1, t2] : {std::pair{300.0, 600.0}, {200.0, 150.0}}) {
    const auto th = kelvin_pair(t1, t2);
    CHECK(ll_vacuum_torque(mat, th) ==
          doctest::Approx(ll_vacuum_torque_quadrature(mat, th)).epsilon(1e-6));
  }
  // Coefficient of (1 - T'^6/T^6) for the 100 nm sphere at 300 K.
  const double T6 = std::pow(temperature_to_energy(300.0).eV(), 6);
  const double coeff = 32.0 / 7.0 * std::pow(M_PI, 4) * mat.volume_natural() *
                       1e-4 * 0.035 / std::pow(9.0, 4) * T6;
  CHECK(torque_to_si(coeff) == doctest::Approx(6.2e-36).epsilon(0.02));
}

TEST_CASE("LL friction positive and spin dynamics finite") {
  const auto mat = gold();
  const auto geom = gold_preset().geometry(100e-9);
  for (double tp : {30.0, 300.0, 3000.0}) {
    CHECK(ll_tau1_prime(mat, kelvin_pair(300, tp)) > 0.0);
  }
  const auto dyn = ll_spin_dynamics(mat, kelvin_pair(300, 200), geom);
  REQUIRE(dyn.terminal_omega_per_s.has_value());
  CHECK(std::isfinite(*dyn.terminal_omega_per_s));
  CHECK(*dyn.relaxation_time_s > 1e10);
}
