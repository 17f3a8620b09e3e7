#include "neq/units.hpp"

#include <cmath>
#include <sstream>

namespace neq {

Energy cyclotron_frequency(double B_tesla) {
  if (!std::isfinite(B_tesla)) throw UnitError("magnetic field must be finite");
  return Energy(constants::electron_mass_eV * B_tesla /
                constants::critical_field_tesla);
}

Energy temperature_to_energy(double kelvin) { return Energy::from_kelvin(kelvin); }

void MaterialParams::validate() const {
  if (!(omega_p.eV() > 0)) throw UnitError("omega_p must be positive");
  if (!(eta.eV() > 0)) throw UnitError("eta must be positive");
  if (omega_0.eV() < 0) throw UnitError("omega_0 must be nonnegative");
  if (!(volume_m3 > 0)) throw UnitError("volume must be positive");
}

void ThermalPair::validate() const {
  if (!(T_env.eV() > 0) || !(T_body.eV() > 0))
    throw UnitError("temperatures must be strictly positive");
}

void Geometry::validate() const {
  if (!(radius_m > 0)) throw UnitError("radius must be positive");
  if (!(mass_density_kg_m3 > 0)) throw UnitError("mass density must be positive");
  if (separation_m && !(*separation_m > 0))
    throw UnitError("separation must be positive");
}

MaterialParams MaterialPreset::material(double radius_m, Energy omega_c) const {
  MaterialParams p;
  p.omega_p = Energy(omega_p_eV);
  p.eta = Energy(eta_eV);
  p.omega_0 = Energy(omega_0_eV);
  p.omega_c = omega_c;
  p.volume_m3 = 4.0 / 3.0 * M_PI * radius_m * radius_m * radius_m;
  return p;
}

Geometry MaterialPreset::geometry(double radius_m) const {
  Geometry g;
  g.radius_m = radius_m;
  g.mass_density_kg_m3 = mass_density_kg_m3;
  g.atom_number_density_m3 = atom_number_density_m3;
  return g;
}

MaterialPreset gold_preset() {
  MaterialPreset p;
  p.name = "gold";
  p.omega_p_eV = 9.0;
  p.eta_eV = 0.035;
  p.omega_0_eV = 0.0;
  p.mass_density_kg_m3 = 19300.0;
  p.atom_number_density_m3 = 5.9e28;
  p.debye_theta_K = 170.0;
  return p;
}

MaterialPreset preset_by_name(const std::string& name) {
  if (name == "gold") return gold_preset();
  if (name == "custom") {
    MaterialPreset p;
    p.name = "custom";
    return p;
  }
  throw UnitError("unknown material preset: " + name);
}

std::string constants_table() {
  std::ostringstream os;
  os.precision(10);
  os << "# Physical constants (natural Heaviside-Lorentz units, hbar = c = 1)\n"
     << "# name                      value              unit\n"
     << "boltzmann                 " << constants::boltzmann_eV_per_K << "  eV/K\n"
     << "hbar                      " << constants::hbar_eV_s << "  eV s\n"
     << "hbar_c                    " << constants::hbar_c_eV_m << "  eV m\n"
     << "eV                        " << constants::eV_to_joule << "  J\n"
     << "speed_of_light            " << constants::speed_of_light_m_s << "  m/s\n"
     << "electron_mass             " << constants::electron_mass_eV << "  eV\n"
     << "critical_field            " << constants::critical_field_tesla << "  T\n"
     << "# conversions\n"
     << "torque: 1 eV            = " << constants::eV_to_joule << "  N m\n"
     << "force:  1 eV^2          = " << constants::ev2_to_newton << "  N\n"
     << "rate:   1 eV            = " << constants::ev_to_per_second << "  1/s\n"
     << "time:   1 eV^-1         = " << constants::hbar_eV_s << "  s\n"
     << "power:  1 eV^2          = " << constants::ev2_to_watt << "  W\n";
  return os.str();
}

}  // namespace neq
