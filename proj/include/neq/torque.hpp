#ifndef NEQ_TORQUE_HPP
#define NEQ_TORQUE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "neq/material.hpp"
#include "neq/special_functions.hpp"
#include "neq/units.hpp"

// Vacuum torque on a nonreciprocal nanosphere out of thermal equilibrium,
// the linear-response torque on a slowly rotating body with its terminal
// angular velocity and spin-up dynamics, the plate-modified torque, and the
// Lorenz-Lorentz-corrected variants.

namespace neq::torque {

struct TorqueResult {
  double tau_z_eV = 0.0;   // natural units (a torque is an energy)
  double tau_z_si = 0.0;   // N m
  double vacuum_eV = 0.0;
  double scattering_eV = 0.0;
  std::string regime_notes;
};

// Dimensionless bracket of the vacuum torque, 4 [I2(beta' eta) - I2(beta eta)];
// antisymmetric under T <-> T'.
double vacuum_torque_bracket(const ThermalPair& thermal, Energy eta);

// Same bracket with the body-temperature I2 replaced by the requested
// expansion branch (environment always exact).
double vacuum_torque_bracket_regime(const ThermalPair& thermal, Energy eta,
                                    specfun::ExpansionRegime regime);

// Torque prefactor eta omega_c omega_p^2 V / (3 pi^2) in eV.
double vacuum_torque_prefactor(const MaterialParams& params);

// tau_z = prefactor * bracket; metal model, omega_c << eta.
double vacuum_torque(const MaterialParams& params, const ThermalPair& thermal);

// Same quantity by adaptive quadrature of the defining frequency integral.
double vacuum_torque_quadrature(const MaterialParams& params,
                                const ThermalPair& thermal,
                                double rel_tol = 1e-10);

// Linear-in-Omega friction coefficient (dimensionless in hbar = 1):
// tau_1' = (2 omega_p^2 eta V / 3 pi^2) [3 I1(b') - I1(b) - 2 I2(b)].
double tau1_prime(const MaterialParams& params, const ThermalPair& thermal);
double tau1_prime_quadrature(const MaterialParams& params,
                             const ThermalPair& thermal,
                             double rel_tol = 1e-10);

struct SpinDynamics {
  double tau_0_eV = 0.0;
  double tau_1_prime = 0.0;            // dimensionless
  double moment_of_inertia_kg_m2 = 0.0;
  bool exponential_growth = false;     // tau_1' <= 0
  // Defined only when tau_1' > 0:
  std::optional<double> terminal_omega_per_s;
  std::optional<double> relaxation_time_s;
  std::optional<double> initial_accel_per_s2;
};

SpinDynamics rotating_torque_linear(const MaterialParams& params,
                                    const ThermalPair& thermal,
                                    const Geometry& geometry);

// Omega(t) = Omega_T (1 - e^{-t/t0}); requires tau_1' > 0.
std::vector<double> spin_trajectory(const SpinDynamics& dyn,
                                    const std::vector<double>& t_grid_s);

// Body temperature at which tau_1' changes sign, located by bisection in
// (0, T_env); empty if no sign change was bracketed.
std::optional<Energy> tau1_sign_change(const MaterialParams& params,
                                       Energy T_env);

// Total torque above a perfectly conducting plate at separation a;
// total -> 0 as a -> 0 and -> vacuum torque as a -> infinity.
TorqueResult plate_torque_pc(const MaterialParams& params,
                             const ThermalPair& thermal, double a_m,
                             double rel_tol = 1e-9);

// Dimensionless integrand bracket 1 - (3/2)(u cos u + (u^2-1) sin u)/u^3
// with the Taylor branch below u* = 1e-2.
double pc_bracket(double u);

// Total torque above a dielectric half-space with permittivity eps(omega),
// background in equilibrium at T; nested (omega, wavenumber) quadrature.
TorqueResult plate_torque_slab(const MaterialParams& params,
                               const ThermalPair& thermal, double a_m,
                               const std::function<material::complex(Energy)>&
                                   epsilon_fn,
                               double rel_tol = 1e-6);

// Lorenz-Lorentz-corrected vacuum torque,
// tau_z = (32/7) pi^4 V (omega_c eta / omega_p^4) T^6 [1 - (T'/T)^6].
double ll_vacuum_torque(const MaterialParams& params, const ThermalPair& thermal);
double ll_vacuum_torque_quadrature(const MaterialParams& params,
                                   const ThermalPair& thermal,
                                   double rel_tol = 1e-10);

// LL friction coefficient (2 pi^2/5)(V eta/omega_p^2) T^4 [1 + 3 (T'/T)^4],
// positive for all temperatures.
double ll_tau1_prime(const MaterialParams& params, const ThermalPair& thermal);

SpinDynamics ll_spin_dynamics(const MaterialParams& params,
                              const ThermalPair& thermal,
                              const Geometry& geometry);

}  // namespace neq::torque

#endif  // NEQ_TORQUE_HPP
