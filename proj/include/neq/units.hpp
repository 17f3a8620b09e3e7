#ifndef NEQ_UNITS_HPP
#define NEQ_UNITS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

// Natural Heaviside-Lorentz units with hbar = c = 1.  Every frequency,
// temperature and damping rate is carried internally as an energy in eV;
// SI appears only at the I/O boundary.

namespace neq {

namespace constants {

// CODATA 2018 exact/recommended values.
inline constexpr double boltzmann_eV_per_K = 8.617333262e-5;
inline constexpr double hbar_eV_s          = 6.582119569e-16;
inline constexpr double hbar_c_eV_m        = 1.973269804e-7;
inline constexpr double eV_to_joule        = 1.602176634e-19;
inline constexpr double speed_of_light_m_s = 2.99792458e8;
inline constexpr double electron_mass_eV   = 0.51099895e6;
// Critical (Schwinger) field B_c = m^2/e at which omega_c equals the
// electron mass.
inline constexpr double critical_field_tesla = 4.41e9;

// Derived conversion factors.
inline constexpr double ev2_to_newton = eV_to_joule / hbar_c_eV_m;   // force
inline constexpr double ev_to_per_second = 1.0 / hbar_eV_s;         // rate
inline constexpr double ev2_to_watt = eV_to_joule / hbar_eV_s;      // power
inline constexpr double kg_to_eV =
    speed_of_light_m_s * speed_of_light_m_s / eV_to_joule;

}  // namespace constants

class UnitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An energy in eV.  Doubles as frequency, temperature, inverse length and
// inverse time through the conversions below.
class Energy {
 public:
  Energy() = default;
  constexpr explicit Energy(double ev) : ev_(ev) {}

  static constexpr Energy from_eV(double ev) { return Energy(ev); }
  static Energy from_kelvin(double kelvin) {
    if (kelvin < 0) throw UnitError("negative temperature");
    return Energy(kelvin * constants::boltzmann_eV_per_K);
  }
  static constexpr Energy from_per_second(double rate) {
    return Energy(rate * constants::hbar_eV_s);
  }
  static constexpr Energy from_per_meter(double k) {
    return Energy(k * constants::hbar_c_eV_m);
  }

  constexpr double eV() const { return ev_; }
  constexpr double kelvin() const { return ev_ / constants::boltzmann_eV_per_K; }
  constexpr double per_second() const { return ev_ / constants::hbar_eV_s; }
  constexpr double per_meter() const { return ev_ / constants::hbar_c_eV_m; }
  constexpr double joule() const { return ev_ * constants::eV_to_joule; }

  constexpr Energy operator+(Energy o) const { return Energy(ev_ + o.ev_); }
  constexpr Energy operator-(Energy o) const { return Energy(ev_ - o.ev_); }
  constexpr Energy operator*(double s) const { return Energy(ev_ * s); }
  constexpr Energy operator/(double s) const { return Energy(ev_ / s); }
  constexpr double operator/(Energy o) const { return ev_ / o.ev_; }
  constexpr bool operator==(const Energy&) const = default;
  constexpr auto operator<=>(const Energy&) const = default;

 private:
  double ev_ = 0.0;
};

constexpr Energy operator*(double s, Energy e) { return e * s; }

// omega_c = eB/m = m_e * B / B_c, linear in B.
Energy cyclotron_frequency(double B_tesla);

// k_B T in eV; rejects negative temperatures.
Energy temperature_to_energy(double kelvin);

// Length/volume to natural units.
inline double length_to_natural(double meters) {
  return meters / constants::hbar_c_eV_m;  // eV^-1
}
inline double volume_to_natural(double m3) {
  const double l = constants::hbar_c_eV_m;
  return m3 / (l * l * l);  // eV^-3
}

// A torque in natural units is an energy.
inline double torque_to_si(double tau_eV) {
  return tau_eV * constants::eV_to_joule;  // N m
}
inline double force_to_si(double f_eV2) { return f_eV2 * constants::ev2_to_newton; }
inline double power_to_si(double p_eV2) { return p_eV2 * constants::ev2_to_watt; }
inline double rate_to_si(double r_eV) { return r_eV * constants::ev_to_per_second; }
inline double time_to_si(double t_inv_eV) { return t_inv_eV * constants::hbar_eV_s; }

// Magnetized-oscillator material: fully defines the model susceptibility.
struct MaterialParams {
  Energy omega_p;          // plasma frequency
  Energy eta;              // damping
  Energy omega_0{0.0};     // resonance; 0 for metals
  Energy omega_c{0.0};     // cyclotron frequency, sign = field direction
  double volume_m3 = 0.0;

  double volume_natural() const { return volume_to_natural(volume_m3); }
  void validate() const;
};

// Environment temperature T and body temperature T'.
struct ThermalPair {
  Energy T_env;
  Energy T_body;

  double beta() const { return 1.0 / T_env.eV(); }        // eV^-1
  double beta_body() const { return 1.0 / T_body.eV(); }  // eV^-1
  void validate() const;
};

// Nanosphere geometry; derives mass and moment of inertia for a uniform
// solid sphere.
struct Geometry {
  double radius_m = 0.0;
  double mass_density_kg_m3 = 0.0;
  double atom_number_density_m3 = 0.0;
  std::optional<double> separation_m;  // height above the plate

  double volume_m3() const {
    return 4.0 / 3.0 * M_PI * radius_m * radius_m * radius_m;
  }
  double mass_kg() const { return mass_density_kg_m3 * volume_m3(); }
  double moment_of_inertia_kg_m2() const {
    return 0.4 * mass_kg() * radius_m * radius_m;
  }
  double mass_natural() const { return mass_kg() * constants::kg_to_eV; }
  double moment_of_inertia_natural() const {  // eV^-1
    const double r = length_to_natural(radius_m);
    return 0.4 * mass_natural() * r * r;
  }
  double atom_density_natural() const {  // eV^3
    const double l = constants::hbar_c_eV_m;
    return atom_number_density_m3 * l * l * l;
  }
  double atom_count() const { return atom_number_density_m3 * volume_m3(); }
  void validate() const;
};

// Built-in material preset plus key=value overrides.
struct MaterialPreset {
  std::string name;
  double omega_p_eV = 0.0;
  double eta_eV = 0.0;
  double omega_0_eV = 0.0;
  double mass_density_kg_m3 = 0.0;
  double atom_number_density_m3 = 0.0;
  double debye_theta_K = 0.0;

  MaterialParams material(double radius_m, Energy omega_c) const;
  Geometry geometry(double radius_m) const;
};

// omega_p = 9 eV, eta = 0.035 eV, rho = 19300 kg/m^3, n = 5.9e28 m^-3,
// Theta = 170 K.
MaterialPreset gold_preset();

MaterialPreset preset_by_name(const std::string& name);

// Documented constants table for export.
std::string constants_table();

}  // namespace neq

#endif  // NEQ_UNITS_HPP
