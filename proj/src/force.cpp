#include "neq/force.hpp"

#include <cmath>

#include "neq/quadrature.hpp"
#include "neq/special_functions.hpp"

namespace neq::force {

using quad::bose;

namespace {
constexpr double pi2 = M_PI * M_PI;
}

ForceResult vacuum_force(const MaterialParams& params, const ThermalPair& thermal) {
  params.validate();
  thermal.validate();
  ForceResult r;
  r.mechanism = Mechanism::Vacuum;
  return r;
}

double slab_f(double beta_eta, double beta_body_eta) {
  return specfun::J_slab(beta_body_eta) - specfun::J_slab(beta_eta);
}

double slab_f_quadrature(double beta_eta, double beta_body_eta, double rel_tol) {
  if (beta_eta == beta_body_eta) return 0.0;
  quad::IntegrandSpec spec;
  spec.f = [beta_eta, beta_body_eta](double x) {
    const double d = x * x + 1.0;
    return -x / (d * d) * (bose(beta_eta * x) - bose(beta_body_eta * x));
  };
  spec.rate = std::min(beta_eta, beta_body_eta);
  return quad::integrate_semi_infinite(spec, rel_tol).value;
}

ForceResult slab_force(const MaterialParams& params, const ThermalPair& thermal,
                       double a_m, Energy nu_slab, Energy omega_p_slab) {
  params.validate();
  thermal.validate();
  if (!(a_m > 0.0)) throw UnitError("separation must be positive");

  const double b = params.eta / thermal.T_env;
  const double bp = params.eta / thermal.T_body;
  const double a = length_to_natural(a_m);
  const double wp_ratio2 = std::pow(params.omega_p / omega_p_slab, 2);

  ForceResult r;
  r.mechanism = Mechanism::SlabDissipation;
  r.f_dimensionless = slab_f(b, bp);
  r.F_x_eV2 = 3.0 * params.volume_natural() / (4.0 * pi2 * std::pow(a, 4)) *
              (nu_slab / params.eta) * params.omega_c.eV() * wp_ratio2 *
              r.f_dimensionless;
  r.F_x_newton = force_to_si(r.F_x_eV2);
  return r;
}

double pc_force_numerator(double u) {
  // The direct form cancels down from O(u) to O(u^5); switch branches where
  // both are good to ~1e-11 relative.
  if (u < 0.1) {
    const double u2 = u * u;
    return u2 * u2 * u *
           (-2.0 / 15.0 + u2 * (1.0 / 105.0 - u2 / 3780.0));
  }
  return 6.0 * u * std::cos(u) + 2.0 * (u * u - 3.0) * std::sin(u);
}

double pc_f0(double eps, double b, double bp, double rel_tol, double abs_floor) {
  if (b == bp) return 0.0;
  quad::IntegrandSpec spec;
  spec.f = [eps, b, bp](double u) {
    const double d = u * u + eps * eps;
    return pc_force_numerator(u) / (d * d) * (bose(b * u) - bose(bp * u));
  };
  spec.rate = std::min(b, bp);
  spec.oscillation_period = 2.0 * M_PI;
  return quad::integrate_semi_infinite(spec, rel_tol, abs_floor).value;
}

ForceResult pc_force(const MaterialParams& params, const ThermalPair& thermal,
                     double a_m, double rel_tol, double f0_floor) {
  params.validate();
  thermal.validate();
  if (!(a_m > 0.0)) throw UnitError("separation must be positive");

  const double a = length_to_natural(a_m);
  const double eps = 2.0 * params.eta.eV() * a;
  const double b = thermal.beta() / (2.0 * a);
  const double bp = thermal.beta_body() / (2.0 * a);

  ForceResult r;
  r.mechanism = Mechanism::RadiationPC;
  r.f_dimensionless = pc_f0(eps, b, bp, rel_tol, f0_floor);
  const double wp2 = params.omega_p.eV() * params.omega_p.eV();
  r.F_x_eV2 = params.omega_c.eV() * params.eta.eV() * wp2 *
              params.volume_natural() / (2.0 * pi2 * a) * r.f_dimensionless;
  r.F_x_newton = force_to_si(r.F_x_eV2);
  return r;
}

double friction_bracket_noneq(double u) {
  if (u < 0.1) {
    const double u2 = u * u;
    return 2.0 / 3.0 + u2 * (0.1 + u2 * (-1.0 / 168.0 + u2 / 6480.0));
  }
  const double u3 = u * u * u;
  return 1.0 - (2.0 * u * std::cos(u) + (u * u - 2.0) * std::sin(u)) / u3;
}

double friction_bracket_eh(double u) {
  if (u < 0.1) {
    const double u2 = u * u;
    return 0.8 + u2 * (3.0 / 70.0 + u2 * (-1.0 / 504.0 + u2 / 23760.0));
  }
  const double u2 = u * u;
  const double u5 = u2 * u2 * u;
  const double m =
      -u * (u2 - 12.0) * std::cos(u) + (5.0 * u2 - 12.0) * std::sin(u);
  return 1.0 - 3.0 * m / u5;
}

FrictionSplit pc_f1_split(double eps, double b, double bp, double rel_tol) {
  FrictionSplit split;

  if (b != bp) {
    quad::IntegrandSpec noneq;
    noneq.f = [eps, b, bp](double u) {
      return u * u * u / (u * u + eps * eps) * friction_bracket_noneq(u) *
             (bose(bp * u) - bose(b * u));
    };
    noneq.rate = std::min(b, bp);
    noneq.oscillation_period = 2.0 * M_PI;
    split.noneq = quad::integrate_semi_infinite(noneq, rel_tol).value;
  }

  quad::IntegrandSpec eh;
  eh.f = [eps, b](double u) {
    return u * u * u / (u * u + eps * eps) *
           (b * u * quad::csch_sq_half(b * u) / 12.0) * friction_bracket_eh(u);
  };
  eh.rate = b;
  eh.oscillation_period = 2.0 * M_PI;
  split.einstein_hopf = quad::integrate_semi_infinite(eh, rel_tol).value;
  return split;
}

double pc_f1(double eps, double b, double bp, double rel_tol) {
  return pc_f1_split(eps, b, bp, rel_tol).total();
}

LinearDynamics pc_friction_linear(const MaterialParams& params,
                                  const ThermalPair& thermal,
                                  const Geometry& geometry, double a_m,
                                  double rel_tol) {
  params.validate();
  thermal.validate();
  geometry.validate();
  if (!(a_m > 0.0)) throw UnitError("separation must be positive");

  const double a = length_to_natural(a_m);
  const double eps = 2.0 * params.eta.eV() * a;
  const double b = thermal.beta() / (2.0 * a);
  const double bp = thermal.beta_body() / (2.0 * a);

  LinearDynamics dyn;
  dyn.mass_kg = geometry.mass_kg();
  dyn.f0 = pc_f0(eps, b, bp, rel_tol);
  dyn.f1 = pc_f1_split(eps, b, bp, rel_tol);
  dyn.velocity_scale = 2.0 * params.omega_c.eV() * a;

  const double wp2 = params.omega_p.eV() * params.omega_p.eV();
  dyn.F_0_eV2 = params.omega_c.eV() * params.eta.eV() * wp2 *
                params.volume_natural() / (2.0 * pi2 * a) * dyn.f0;
  dyn.F_1_prime_eV2 = wp2 * params.eta.eV() * params.volume_natural() /
                      (pi2 * 4.0 * a * a) * dyn.f1.total();

  if (dyn.f1.total() > 0.0) {
    const double scaled = dyn.f0 / dyn.f1.total();
    dyn.terminal_velocity_scaled = scaled;
    dyn.terminal_velocity_m_s =
        dyn.velocity_scale * scaled * constants::speed_of_light_m_s;
    dyn.damping_time_s =
        time_to_si(geometry.mass_natural() / dyn.F_1_prime_eV2);
  } else {
    dyn.runaway = true;
  }
  return dyn;
}

double force_from_torque_consistency(
    const MaterialParams& params, const ThermalPair& thermal, double a_m,
    const std::function<material::complex(Energy)>& epsilon_fn,
    double rel_tol) {
  params.validate();
  thermal.validate();
  if (!(a_m > 0.0)) throw UnitError("separation must be positive");

  const double a = length_to_natural(a_m);
  const double beta = thermal.beta();
  const double beta_p = thermal.beta_body();
  const double inner_tol = std::max(0.1 * rel_tol, 1e-11);

  const auto epsilon_at = [&](double w) { return epsilon_fn(Energy(w)); };

  // Route 1: k^2 weight from the torque identity, wavenumber integral done
  // in the phase-linear variable s over the propagating sector and in kappa
  // over the evanescent sector.
  const auto inner_route1 = [&](double w) {
    const material::complex epsilon = epsilon_at(w);
    quad::Options popt;
    popt.rel_tol = inner_tol;
    popt.max_panel_width = 0.5 * M_PI / (2.0 * a);
    const auto prop = quad::integrate(
        [&](double s) {
          const double k = std::sqrt(std::max(w * w - s * s, 0.0));
          const auto rc = material::reflection(epsilon, Energy(w), k);
          const material::complex phase =
              std::exp(material::complex(0.0, 2.0 * a * s));
          return (w * w - s * s) * s * (rc.r_H * phase).imag();
        },
        0.0, w, popt);
    quad::Options eopt;
    eopt.rel_tol = inner_tol;
    const auto evan = quad::integrate(
        [&](double kap) {
          const double k = std::sqrt(w * w + kap * kap);
          const auto rc = material::reflection(epsilon, Energy(w), k);
          return (w * w + kap * kap) * kap * rc.r_H.imag() *
                 std::exp(-2.0 * kap * a);
        },
        0.0, 45.0 / (2.0 * a), eopt);
    return (prop.value + evan.value) / (2.0 * M_PI);
  };

  // Route 2: 2 k_x^2 weight with the angular average done numerically and
  // the radial integral kept in the raw wavenumber variable.
  quad::Options aopt;
  aopt.rel_tol = inner_tol;
  const double angular =
      quad::integrate([](double th) { return std::cos(th) * std::cos(th); },
                      0.0, 2.0 * M_PI, aopt)
          .value;

  const auto inner_route2 = [&](double w) {
    const material::complex epsilon = epsilon_at(w);
    const auto im_rh_phase = [&](double k) {
      const auto rc = material::reflection(epsilon, Energy(w), k);
      const material::complex decay = std::exp(-2.0 * a * rc.kappa);
      return (rc.r_H * decay).imag();
    };
    quad::Options popt;
    popt.rel_tol = inner_tol;
    // Phase compresses toward k = omega; let adaptive refinement resolve it
    // but keep panels below a quarter period at mid-range.
    popt.max_panel_width = (2.0 * a * w > M_PI) ? 0.25 * M_PI / (2.0 * a) : 0.0;
    const auto prop = quad::integrate(
        [&](double k) { return k * k * k * im_rh_phase(k); }, 0.0, w, popt);
    quad::Options eopt;
    eopt.rel_tol = inner_tol;
    const double k_max =
        std::sqrt(w * w + std::pow(45.0 / (2.0 * a), 2));
    const auto evan = quad::integrate(
        [&](double k) { return k * k * k * im_rh_phase(k); }, w, k_max, eopt);
    return 2.0 * angular / (2.0 * M_PI) / (2.0 * M_PI) *
           (prop.value + evan.value);
  };

  const auto route = [&](const std::function<double(double)>& inner) {
    const double support = 45.0 / std::min(beta, beta_p);
    quad::IntegrandSpec spec;
    spec.f = [&](double w) {
      if (w > support) return 0.0;
      const double hat_alpha =
          params.volume_natural() * material::hat_chi_xz_metal(params, Energy(w));
      return (bose(beta * w) - bose(beta_p * w)) * hat_alpha * inner(w);
    };
    spec.rate = std::min(beta, beta_p);
    return quad::integrate_semi_infinite(spec, rel_tol).value / (2.0 * M_PI);
  };

  const double F1 = route(inner_route1);
  const double F2 = route(inner_route2);
  const double scale = std::max(std::abs(F1), std::abs(F2));
  if (scale == 0.0) return 0.0;
  return std::abs(F1 - F2) / scale;
}

}  // namespace neq::force
