#include "neq/cooling.hpp"

#include <cmath>

#include "neq/quadrature.hpp"

namespace neq::cooling {

using quad::bose;

double radiated_power_quadrature(const ThermalPair& thermal,
                                 const std::function<double(double)>& im_alpha,
                                 double rel_tol) {
  thermal.validate();
  if (thermal.T_env == thermal.T_body) return 0.0;
  const double beta = thermal.beta();
  const double beta_p = thermal.beta_body();
  quad::IntegrandSpec spec;
  spec.f = [&](double w) {
    return std::pow(w, 4) * im_alpha(w) * (bose(beta * w) - bose(beta_p * w));
  };
  spec.rate = std::min(beta, beta_p);
  return quad::integrate_semi_infinite(spec, rel_tol).value / (M_PI * M_PI);
}

double ll_im_alpha(const MaterialParams& params, double omega_eV) {
  const double wp = params.omega_p.eV();
  const double omega1_sq = wp * wp / 3.0;
  return params.volume_natural() * wp * wp * omega_eV * params.eta.eV() /
         (omega1_sq * omega1_sq);
}

double radiated_power_ll(const MaterialParams& params, const ThermalPair& thermal) {
  params.validate();
  thermal.validate();
  const double T = thermal.T_env.eV();
  const double Tp = thermal.T_body.eV();
  return 8.0 * std::pow(M_PI, 4) / 7.0 * params.volume_natural() *
         params.eta.eV() / (params.omega_p.eV() * params.omega_p.eV()) *
         (std::pow(T, 6) - std::pow(Tp, 6));
}

double debye_heat_capacity(Energy T, Energy theta, double n_atoms) {
  if (!(T.eV() > 0)) throw UnitError("temperature must be positive");
  const double y = theta / T;
  quad::Options opt;
  opt.rel_tol = 1e-11;
  const auto integral = quad::integrate(
      [](double x) {
        const double n = bose(x);
        return std::pow(x, 4) * n * (n + 1.0);
      },
      0.0, y, opt);
  return 9.0 * n_atoms * std::pow(1.0 / y, 3) * integral.value;
}

void CoolingSpec::validate() const {
  if (!(T_env.eV() > 0)) throw UnitError("environment temperature must be positive");
  if (!(T_end > T_env))
    throw UnitError("cooling time diverges: T'_1 must exceed T");
  if (!(T_start > T_end)) throw UnitError("requires T'_0 > T'_1");
}

double cooling_kernel_highT(double u) {
  // 1/(u^6-1) = (1/6)[1/(u-1) - 1/(u+1) - (u+2)/(u^2+u+1) + (u-2)/(u^2-u+1)]
  const double sqrt3 = std::sqrt(3.0);
  return std::log((u - 1.0) / (u + 1.0)) / 6.0 +
         std::log((u * u - u + 1.0) / (u * u + u + 1.0)) / 12.0 -
         (std::atan((2.0 * u + 1.0) / sqrt3) +
          std::atan((2.0 * u - 1.0) / sqrt3)) /
             (2.0 * sqrt3);
}

double cooling_kernel_lowT(double y) {
  // y/(y^3-1) = (1/3)[1/(y-1) - (y-1)/(y^2+y+1)]
  const double sqrt3 = std::sqrt(3.0);
  return std::log(y - 1.0) / 3.0 - std::log(y * y + y + 1.0) / 6.0 +
         std::atan((2.0 * y + 1.0) / sqrt3) / sqrt3;
}

namespace {

double t0_highT_seconds(const MaterialParams& material, const Geometry& geometry,
                        Energy T) {
  const double n = geometry.atom_density_natural();
  const double wp2 = material.omega_p.eV() * material.omega_p.eV();
  const double t0_nat = 21.0 / (8.0 * std::pow(M_PI, 4)) * n * wp2 /
                        material.eta.eV() / std::pow(T.eV(), 5);
  return time_to_si(t0_nat);
}

double t0_lowT_seconds(const MaterialParams& material, const Geometry& geometry,
                       Energy T, Energy theta) {
  const double n = geometry.atom_density_natural();
  const double wp2 = material.omega_p.eV() * material.omega_p.eV();
  const double t0_nat = 21.0 / 20.0 * n * wp2 / material.eta.eV() *
                        std::pow(T / theta, 3) / std::pow(T.eV(), 5);
  return time_to_si(t0_nat);
}

}  // namespace

CoolingResult cooling_time_highT(const CoolingSpec& spec,
                                 const MaterialParams& material,
                                 const Geometry& geometry) {
  spec.validate();
  material.validate();
  const double u0 = spec.T_start / spec.T_env;
  const double u1 = spec.T_end / spec.T_env;
  CoolingResult r;
  r.scale_t0_seconds = t0_highT_seconds(material, geometry, spec.T_env);
  r.dimensionless_integral = cooling_kernel_highT(u0) - cooling_kernel_highT(u1);
  r.time_seconds = r.scale_t0_seconds * r.dimensionless_integral;
  return r;
}

CoolingResult cooling_time_lowT(const CoolingSpec& spec,
                                const MaterialParams& material,
                                const Geometry& geometry) {
  spec.validate();
  material.validate();
  if (!(spec.debye_theta.eV() > 0))
    throw UnitError("low-temperature regime needs a Debye temperature");
  const double y0 = std::pow(spec.T_start / spec.T_env, 2);
  const double y1 = std::pow(spec.T_end / spec.T_env, 2);
  CoolingResult r;
  r.scale_t0_seconds =
      t0_lowT_seconds(material, geometry, spec.T_env, spec.debye_theta);
  r.dimensionless_integral = cooling_kernel_lowT(y0) - cooling_kernel_lowT(y1);
  r.time_seconds = r.scale_t0_seconds * r.dimensionless_integral;
  return r;
}

double cooling_scale_ratio(Energy T_low, Energy T_high, Energy theta) {
  return 2.0 * std::pow(M_PI, 4) / 5.0 * std::pow(T_low / theta, 3) *
         std::pow(T_high / T_low, 5);
}

double cool_from_hot(double T_ratio_end, specfun::ExpansionRegime regime) {
  if (!(T_ratio_end > 1.0))
    throw UnitError("cool_from_hot requires T'_1/T > 1");
  const double sqrt3 = std::sqrt(3.0);
  if (regime == specfun::ExpansionRegime::LowTemperature) {
    const double h_inf = M_PI / (2.0 * sqrt3);
    return h_inf - cooling_kernel_lowT(T_ratio_end * T_ratio_end);
  }
  const double g_inf = -M_PI / (2.0 * sqrt3);
  return g_inf - cooling_kernel_highT(T_ratio_end);
}

}  // namespace neq::cooling
