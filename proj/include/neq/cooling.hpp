#ifndef NEQ_COOLING_HPP
#define NEQ_COOLING_HPP

#include <functional>

#include "neq/special_functions.hpp"
#include "neq/units.hpp"

// Radiated power out of equilibrium, Debye heat capacity, and the cooling
// times of a nanosphere toward its environment in the two Debye regimes.

namespace neq::cooling {

// P(T,T') = (1/pi^2) int_0^inf dw w^4 im alpha(w) [n(bw) - n(b'w)], in eV^2;
// negative when the body is hotter (net heat flows out).
double radiated_power_quadrature(const ThermalPair& thermal,
                                 const std::function<double(double)>& im_alpha,
                                 double rel_tol = 1e-10);

// Im alpha of the Lorenz-Lorentz metal sphere, V omega_p^2 w eta / omega_1^4
// with omega_1 = omega_p/sqrt(3).
double ll_im_alpha(const MaterialParams& params, double omega_eV);

// LL closed form P = (8 pi^4/7)(V eta/omega_p^2)(T^6 - T'^6).
double radiated_power_ll(const MaterialParams& params, const ThermalPair& thermal);

// Debye heat capacity, C_V = 9 N (T/Theta)^3 int_0^{Theta/T} x^4 e^x/(e^x-1)^2,
// in units of k_B (multiply by N's dimensionless count).
double debye_heat_capacity(Energy T, Energy theta, double n_atoms);

struct CoolingSpec {
  Energy T_env;
  Energy T_start;  // T'_0
  Energy T_end;    // T'_1
  Energy debye_theta;
  specfun::ExpansionRegime regime = specfun::ExpansionRegime::HighTemperature;

  void validate() const;
};

struct CoolingResult {
  double time_seconds = 0.0;
  double scale_t0_seconds = 0.0;       // t0 or t0~ of the regime
  double dimensionless_integral = 0.0;  // time = scale * integral
};

// Antiderivative of 1/(u^6 - 1) on u > 1 (high-temperature regime kernel).
double cooling_kernel_highT(double u);
// Antiderivative of y/(y^3 - 1) on y > 1 (low-temperature regime kernel).
double cooling_kernel_lowT(double y);

// t = t0 int du/(u^6-1) from T'_1/T up to T'_0/T,
// t0 = (21/8 pi^4) n (omega_p^2/eta) T^-5; volume-independent.
CoolingResult cooling_time_highT(const CoolingSpec& spec,
                                 const MaterialParams& material,
                                 const Geometry& geometry);

// t = t0~ int dy y/(y^3-1) over y = (T'/T)^2,
// t0~ = (21/20) n (omega_p^2/eta) (T/Theta)^3 T^-5.
CoolingResult cooling_time_lowT(const CoolingSpec& spec,
                                const MaterialParams& material,
                                const Geometry& geometry);

// Scale ratio t0~/t0 = (2 pi^4/5)(T_low/Theta)^3 (T_high/T_low)^5.
double cooling_scale_ratio(Energy T_low, Energy T_high, Energy theta);

// Cooling time from infinitely hot down to T'_1, in units of the regime
// scale; diverges logarithmically as T'_1/T -> 1+.
double cool_from_hot(double T_ratio_end, specfun::ExpansionRegime regime);

}  // namespace neq::cooling

#endif  // NEQ_COOLING_HPP
