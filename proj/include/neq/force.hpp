#ifndef NEQ_FORCE_HPP
#define NEQ_FORCE_HPP

#include <functional>
#include <optional>
#include <string>

#include "neq/material.hpp"
#include "neq/units.hpp"

// Transverse forces on a nonreciprocal nanoparticle above a plate out of
// thermal equilibrium: the lossy-slab force, the perfect-conductor force,
// the linear friction that limits the terminal velocity, and the vanishing
// quantum vacuum force.

namespace neq::force {

enum class Mechanism { Vacuum, SlabDissipation, RadiationPC };

struct ForceResult {
  double F_x_eV2 = 0.0;          // natural units (energy^2)
  double F_x_newton = 0.0;
  double f_dimensionless = 0.0;  // the f, f0 factor of the mechanism
  Mechanism mechanism = Mechanism::Vacuum;
};

// No first-order force on a body in empty space: the gradient of the vacuum
// Green's dyadic vanishes in the coincidence limit.
ForceResult vacuum_force(const MaterialParams& params, const ThermalPair& thermal);

// Dimensionless slab force f(b, b') = J(b') - J(b), positive for T' > T.
double slab_f(double beta_eta, double beta_body_eta);
double slab_f_quadrature(double beta_eta, double beta_body_eta,
                         double rel_tol = 1e-10);

// Low-frequency lossy-slab force
//   F_x = (3V / 4 pi^2 a^4)(nu/eta) omega_c (omega_p^2 / omega_p_slab^2) f.
// Valid for nu << omega << omega_p and omega << k; not checked at runtime.
ForceResult slab_force(const MaterialParams& params, const ThermalPair& thermal,
                       double a_m, Energy nu_slab, Energy omega_p_slab);

// Perfect-conductor transverse force F_x = (omega_c eta omega_p^2 V/2 pi^2 a) f0.
// At very large separations f0 is cancellation-limited; abs_floor sets the
// absolute accuracy demanded of it there.
double pc_f0(double eps, double b, double bp, double rel_tol = 1e-9,
             double abs_floor = 0.0);
ForceResult pc_force(const MaterialParams& params, const ThermalPair& thermal,
                     double a_m, double rel_tol = 1e-9, double f0_floor = 0.0);

// Oscillatory numerator 6u cos u + 2(u^2-3) sin u with its small-u series.
double pc_force_numerator(double u);

// Friction integrand brackets (both -> 1 as u -> infinity).
double friction_bracket_noneq(double u);  // 1 - (2u cos u + (u^2-2) sin u)/u^3
double friction_bracket_eh(double u);     // 1 - 3(-u(u^2-12)cos u + (5u^2-12)sin u)/u^5

// Constant term of the Einstein-Hopf part of the friction bracket; the
// far-plate limit reproduces the vacuum Einstein-Hopf drag coefficient.
inline constexpr double vacuum_einstein_hopf_coefficient = 2.0 / 3.0;

// Dimensionless friction f1 = noneq part + Einstein-Hopf part; the two
// pieces are exposed separately for diagnostics.
struct FrictionSplit {
  double noneq = 0.0;          // from the Bose-difference bracket
  double einstein_hopf = 0.0;  // from the csch^2 term
  double total() const { return noneq + einstein_hopf; }
};

FrictionSplit pc_f1_split(double eps, double b, double bp, double rel_tol = 1e-9);
double pc_f1(double eps, double b, double bp, double rel_tol = 1e-9);

struct LinearDynamics {
  double F_0_eV2 = 0.0;
  double F_1_prime_eV2 = 0.0;  // force per unit velocity (c = 1)
  double mass_kg = 0.0;
  double f0 = 0.0;
  FrictionSplit f1;
  double velocity_scale = 0.0;  // 2 omega_c a, in units of c
  bool runaway = false;         // f1 <= 0
  std::optional<double> terminal_velocity_m_s;
  std::optional<double> terminal_velocity_scaled;  // units of 2 omega_c a
  std::optional<double> damping_time_s;
};

LinearDynamics pc_friction_linear(const MaterialParams& params,
                                  const ThermalPair& thermal,
                                  const Geometry& geometry, double a_m,
                                  double rel_tol = 1e-9);

// Evaluates the transverse slab force by two independent reductions of the
// same wavenumber integral (the torque-derived form with k^2 and the direct
// form with 2 k_x^2) and returns the relative residual.
double force_from_torque_consistency(
    const MaterialParams& params, const ThermalPair& thermal, double a_m,
    const std::function<material::complex(Energy)>& epsilon_fn,
    double rel_tol = 1e-9);

}  // namespace neq::force

#endif  // NEQ_FORCE_HPP
