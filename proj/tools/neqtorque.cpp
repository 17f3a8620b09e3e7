// neqtorque: nonequilibrium torques, transverse forces, spin/velocity
// dynamics and cooling times for nonreciprocal nanoparticles.
//
// Everything is computed for a magnetized-oscillator (metal) nanosphere in
// natural units and reported in SI.  Subcommands emit a one-row CSV or a
// sweep; `reproduce` regenerates the standard figure sweeps and `report`
// compares headline numbers against their order-of-magnitude references.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "neq/cooling.hpp"
#include "neq/force.hpp"
#include "neq/material.hpp"
#include "neq/quadrature.hpp"
#include "neq/reproduce.hpp"
#include "neq/special_functions.hpp"
#include "neq/torque.hpp"
#include "neq/units.hpp"

namespace {

using namespace neq;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitReportMismatch = 4;

struct CommonOptions {
  std::string material = "gold";
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  double radius_nm = 100.0;
  double omega_c_eV = 1e-4;
  double B_tesla = std::nan("");
  double T_kelvin = 300.0;
  double Tp_kelvin = 600.0;
  double T_over_eta = std::nan("");
  double Tp_over_eta = std::nan("");
  double a_um = 1.0;
  double tol = 1e-7;
  int jobs = 1;
  std::string out_path;

  // Sweeps: "min:max:points[:log]".
  std::string sweep_tp;
  std::string sweep_a;

  // Explicit flags take precedence over config-file values.
  CLI::Option* radius_flag = nullptr;
  CLI::Option* omega_c_flag = nullptr;
  CLI::Option* T_flag = nullptr;
  CLI::Option* Tp_flag = nullptr;
  CLI::Option* a_flag = nullptr;

  bool flag_given(const CLI::Option* f) const { return f && f->count() > 0; }
};

void add_common_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--material", o.material, "material preset (gold|custom)");
  cmd->add_option("--config", o.config_path, "key=value config file");
  cmd->add_option("--set", o.overrides, "override key=value (repeatable)");
  o.radius_flag = cmd->add_option("--radius-nm", o.radius_nm, "sphere radius [nm]");
  o.omega_c_flag =
      cmd->add_option("--omega-c-eV", o.omega_c_eV, "cyclotron frequency [eV]");
  cmd->add_option("--B-tesla", o.B_tesla,
                  "magnetic field [T]; overrides --omega-c-eV");
  o.T_flag = cmd->add_option("--T-kelvin", o.T_kelvin,
                             "environment temperature [K]");
  o.Tp_flag = cmd->add_option("--Tp-kelvin", o.Tp_kelvin, "body temperature [K]");
  cmd->add_option("--T-over-eta", o.T_over_eta,
                  "environment temperature as T/eta (overrides --T-kelvin)");
  cmd->add_option("--Tp-over-eta", o.Tp_over_eta,
                  "body temperature as T'/eta (overrides --Tp-kelvin)");
  o.a_flag = cmd->add_option("--a-um", o.a_um, "plate separation [um]");
  cmd->add_option("--tol", o.tol, "quadrature relative tolerance");
  cmd->add_option("--jobs", o.jobs, "worker threads for sweeps");
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
}

struct Scenario {
  MaterialPreset preset;
  MaterialParams material;
  Geometry geometry;
  ThermalPair thermal;
  double a_m = 0.0;
};

double to_double(const std::string& s, const std::string& key) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UnitError("bad numeric value for " + key + ": " + s);
  }
}

Scenario build_scenario(const CommonOptions& o) {
  auto preset = preset_by_name(o.material);

  std::map<std::string, std::string> kv;
  if (!o.config_path.empty()) kv = cli::load_config_file(o.config_path);
  for (const auto& item : o.overrides) {
    const auto parsed = cli::parse_key_values(item);
    for (const auto& [k, v] : parsed) kv[k] = v;
  }

  double radius_nm = o.radius_nm;
  double omega_c_eV = o.omega_c_eV;
  double T_kelvin = o.T_kelvin;
  double Tp_kelvin = o.Tp_kelvin;
  double a_um = o.a_um;
  for (const auto& [k, v] : kv) {
    if (k == "omega_p_eV") preset.omega_p_eV = to_double(v, k);
    else if (k == "eta_eV") preset.eta_eV = to_double(v, k);
    else if (k == "omega0_eV") preset.omega_0_eV = to_double(v, k);
    else if (k == "density_kg_m3") preset.mass_density_kg_m3 = to_double(v, k);
    else if (k == "atom_density_m3") preset.atom_number_density_m3 = to_double(v, k);
    else if (k == "debye_theta_K") preset.debye_theta_K = to_double(v, k);
    else if (k == "radius_nm") {
      if (!o.flag_given(o.radius_flag)) radius_nm = to_double(v, k);
    } else if (k == "omega_c_eV") {
      if (!o.flag_given(o.omega_c_flag)) omega_c_eV = to_double(v, k);
    } else if (k == "B_tesla") {
      if (!o.flag_given(o.omega_c_flag))
        omega_c_eV = cyclotron_frequency(to_double(v, k)).eV();
    } else if (k == "T_kelvin") {
      if (!o.flag_given(o.T_flag)) T_kelvin = to_double(v, k);
    } else if (k == "Tp_kelvin") {
      if (!o.flag_given(o.Tp_flag)) Tp_kelvin = to_double(v, k);
    } else if (k == "a_um") {
      if (!o.flag_given(o.a_flag)) a_um = to_double(v, k);
    } else {
      throw UnitError("unknown config key: " + k);
    }
  }

  if (!std::isnan(o.B_tesla)) omega_c_eV = cyclotron_frequency(o.B_tesla).eV();

  Scenario s;
  s.preset = preset;
  const double radius_m = radius_nm * 1e-9;
  s.material = preset.material(radius_m, Energy(omega_c_eV));
  s.geometry = preset.geometry(radius_m);

  Energy T = temperature_to_energy(T_kelvin);
  Energy Tp = temperature_to_energy(Tp_kelvin);
  if (!std::isnan(o.T_over_eta)) T = Energy(o.T_over_eta * preset.eta_eV);
  if (!std::isnan(o.Tp_over_eta)) Tp = Energy(o.Tp_over_eta * preset.eta_eV);
  s.thermal = ThermalPair{T, Tp};
  s.thermal.validate();
  s.material.validate();

  s.a_m = a_um * 1e-6;
  s.geometry.separation_m = s.a_m;
  return s;
}

void emit(const CommonOptions& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw UnitError("cannot write output file: " + o.out_path);
  out << text;
}

struct SweepAxis {
  double lo = 0.0, hi = 0.0;
  int points = 1;
  bool log = false;
  double at(int i) const {
    if (points < 2) return lo;
    if (log) return lo * std::pow(hi / lo, double(i) / (points - 1));
    return lo + (hi - lo) * double(i) / (points - 1);
  }
};

SweepAxis parse_sweep(const std::string& text) {
  SweepAxis ax;
  std::vector<std::string> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ':')) parts.push_back(token);
  if (parts.size() < 3 || parts.size() > 4)
    throw UnitError("sweep must be min:max:points[:log]");
  ax.lo = to_double(parts[0], "sweep min");
  ax.hi = to_double(parts[1], "sweep max");
  ax.points = (int)to_double(parts[2], "sweep points");
  if (parts.size() == 4) {
    if (parts[3] == "log") ax.log = true;
    else if (parts[3] == "lin") ax.log = false;
    else throw UnitError("sweep scale must be lin or log");
  }
  if (!(ax.hi > ax.lo) || ax.points < 2)
    throw UnitError("sweep bounds must be ordered with points >= 2");
  if (ax.log && !(ax.lo > 0.0)) throw UnitError("log sweep needs min > 0");
  return ax;
}

// Runs `row` over the requested body-temperature or separation sweep (or a
// single point) and emits the CSV.
void emit_rows(const CommonOptions& o, const std::vector<std::string>& header,
               const std::function<std::vector<double>(const Scenario&)>& row) {
  const Scenario base = build_scenario(o);
  std::vector<std::vector<double>> rows;
  if (!o.sweep_tp.empty() && !o.sweep_a.empty())
    throw UnitError("choose one sweep axis");
  if (!o.sweep_tp.empty()) {
    const auto ax = parse_sweep(o.sweep_tp);
    rows = cli::run_sweep(ax.points, o.jobs, [&](int i) {
      Scenario s = base;
      s.thermal.T_body = temperature_to_energy(ax.at(i));
      s.thermal.validate();
      return row(s);
    });
  } else if (!o.sweep_a.empty()) {
    const auto ax = parse_sweep(o.sweep_a);
    rows = cli::run_sweep(ax.points, o.jobs, [&](int i) {
      Scenario s = base;
      s.a_m = ax.at(i) * 1e-6;
      return row(s);
    });
  } else {
    rows.push_back(row(base));
  }
  emit(o, cli::to_csv(header, rows));
}

int run(int argc, char** argv) {
  CLI::App app{"nonequilibrium nonreciprocal torque/force calculator"};
  app.require_subcommand(1);

  // ---- specfun ----
  auto* specfun_cmd = app.add_subcommand("specfun", "special function values");
  auto* specfun_eval = specfun_cmd->add_subcommand("eval", "evaluate one function");
  std::string fn_name = "digamma";
  double fn_arg = 1.0;
  specfun_eval->add_option("--function", fn_name,
                           "digamma|trigamma|I1|I2|J|I1_highT|I2_highT|"
                           "I1_lowT|I2_lowT");
  specfun_eval->add_option("--argument", fn_arg, "argument (z or beta*eta)");
  specfun_eval->callback([&] {
    double v;
    if (fn_name == "digamma") v = specfun::digamma(fn_arg);
    else if (fn_name == "trigamma") v = specfun::trigamma(fn_arg);
    else if (fn_name == "I1") v = specfun::I1(fn_arg);
    else if (fn_name == "I2") v = specfun::I2(fn_arg);
    else if (fn_name == "J") v = specfun::J_slab(fn_arg);
    else if (fn_name == "I1_highT") v = specfun::I1_high_temperature(fn_arg);
    else if (fn_name == "I2_highT") v = specfun::I2_high_temperature(fn_arg);
    else if (fn_name == "I1_lowT") v = specfun::I1_low_temperature(fn_arg);
    else if (fn_name == "I2_lowT") v = specfun::I2_low_temperature(fn_arg);
    else throw UnitError("unknown function: " + fn_name);
    std::cout << fn_name << "(" << cli::format_number(fn_arg)
              << ") = " << cli::format_number(v) << "\n";
  });

  // ---- constants ----
  CommonOptions const_opt;
  auto* constants_cmd =
      app.add_subcommand("constants", "export the constants table");
  constants_cmd->add_option("--out", const_opt.out_path, "output file");
  constants_cmd->callback([&] { emit(const_opt, constants_table()); });

  // ---- torque ----
  auto* torque_cmd = app.add_subcommand("torque", "torque calculations");
  CommonOptions to;
  bool torque_check = false;

  auto* tv = torque_cmd->add_subcommand(
      "vacuum", "vacuum torque; columns: T_K,Tp_K,omega_c_eV,bracket,tau_eV,tau_Nm");
  add_common_flags(tv, to);
  tv->add_option("--sweep-tp", to.sweep_tp, "sweep T' [K] as min:max:points[:log]");
  tv->add_flag("--check-quadrature", torque_check,
               "append the frequency-integral route");
  tv->callback([&] {
    std::vector<std::string> header{"T_K", "Tp_K", "omega_c_eV", "bracket",
                                    "tau_eV", "tau_Nm"};
    if (torque_check) header.push_back("tau_quadrature_Nm");
    emit_rows(to, header, [&](const Scenario& s) {
      const double bracket =
          torque::vacuum_torque_bracket(s.thermal, s.material.eta);
      const double tau = torque::vacuum_torque(s.material, s.thermal);
      std::vector<double> r{s.thermal.T_env.kelvin(), s.thermal.T_body.kelvin(),
                            s.material.omega_c.eV(), bracket, tau,
                            torque_to_si(tau)};
      if (torque_check)
        r.push_back(torque_to_si(
            torque::vacuum_torque_quadrature(s.material, s.thermal)));
      return r;
    });
  });

  auto* tr = torque_cmd->add_subcommand(
      "rotating",
      "spin-up dynamics; columns: T_K,Tp_K,tau0_Nm,tau1_prime,"
      "Omega_T_per_s,relax_time_s,accel_per_s2,growth");
  CommonOptions tro;
  add_common_flags(tr, tro);
  tr->add_option("--sweep-tp", tro.sweep_tp, "sweep T' [K] as min:max:points[:log]");
  bool find_critical = false;
  tr->add_flag("--find-critical", find_critical,
               "also report the T' where tau_1' changes sign");
  tr->callback([&] {
    if (find_critical) {
      const Scenario s = build_scenario(tro);
      const auto critical =
          torque::tau1_sign_change(s.material, s.thermal.T_env);
      if (critical)
        std::cout << "# tau1_prime sign change at T' = "
                  << cli::format_number(critical->kelvin()) << " K\n";
      else
        std::cout << "# no tau1_prime sign change bracketed below T\n";
    }
    emit_rows(tro,
              {"T_K", "Tp_K", "tau0_Nm", "tau1_prime", "Omega_T_per_s",
               "relax_time_s", "accel_per_s2", "growth"},
              [&](const Scenario& s) {
                const auto dyn = torque::rotating_torque_linear(
                    s.material, s.thermal, s.geometry);
                return std::vector<double>{
                    s.thermal.T_env.kelvin(), s.thermal.T_body.kelvin(),
                    torque_to_si(dyn.tau_0_eV), dyn.tau_1_prime,
                    dyn.terminal_omega_per_s.value_or(std::nan("")),
                    dyn.relaxation_time_s.value_or(std::nan("")),
                    dyn.initial_accel_per_s2.value_or(std::nan("")),
                    dyn.exponential_growth ? 1.0 : 0.0};
              });
  });

  auto* tp = torque_cmd->add_subcommand(
      "plate",
      "torque above a plate; columns: T_K,Tp_K,a_um,tau_Nm,vacuum_Nm,"
      "scattering_Nm");
  CommonOptions tpo;
  add_common_flags(tp, tpo);
  tp->add_option("--sweep-a", tpo.sweep_a, "sweep a [um] as min:max:points[:log]");
  tp->add_option("--sweep-tp", tpo.sweep_tp, "sweep T' [K]");
  bool plate_slab = false;
  double slab_nu_over_eta = 1.0;
  double slab_omega_p_eV = std::nan("");
  tp->add_flag("--slab", plate_slab,
               "dielectric Drude slab instead of a perfect conductor");
  tp->add_option("--slab-nu-over-eta", slab_nu_over_eta, "slab damping / eta");
  tp->add_option("--slab-omega-p-eV", slab_omega_p_eV,
                 "slab plasma frequency [eV] (default: particle's)");
  tp->callback([&] {
    emit_rows(tpo,
              {"T_K", "Tp_K", "a_um", "tau_Nm", "vacuum_Nm", "scattering_Nm"},
              [&](const Scenario& s) {
                torque::TorqueResult res;
                if (plate_slab) {
                  const Energy wp(std::isnan(slab_omega_p_eV)
                                      ? s.material.omega_p.eV()
                                      : slab_omega_p_eV);
                  const Energy nu(slab_nu_over_eta * s.material.eta.eV());
                  res = torque::plate_torque_slab(
                      s.material, s.thermal, s.a_m,
                      [wp, nu](Energy w) {
                        return material::drude_epsilon(wp, nu, w);
                      },
                      std::max(tpo.tol, 1e-6));
                } else {
                  res = torque::plate_torque_pc(s.material, s.thermal, s.a_m,
                                                tpo.tol);
                }
                return std::vector<double>{
                    s.thermal.T_env.kelvin(), s.thermal.T_body.kelvin(),
                    s.a_m * 1e6, torque_to_si(res.tau_z_eV),
                    torque_to_si(res.vacuum_eV),
                    torque_to_si(res.scattering_eV)};
              });
  });

  auto* tll = torque_cmd->add_subcommand(
      "ll",
      "Lorenz-Lorentz corrected torque and spin dynamics; columns: "
      "T_K,Tp_K,tau_Nm,tau1_prime,Omega_T_per_s,relax_time_s,accel_per_s2");
  CommonOptions tllo;
  add_common_flags(tll, tllo);
  tll->add_option("--sweep-tp", tllo.sweep_tp, "sweep T' [K]");
  tll->callback([&] {
    emit_rows(tllo,
              {"T_K", "Tp_K", "tau_Nm", "tau1_prime", "Omega_T_per_s",
               "relax_time_s", "accel_per_s2"},
              [&](const Scenario& s) {
                const auto dyn =
                    torque::ll_spin_dynamics(s.material, s.thermal, s.geometry);
                return std::vector<double>{
                    s.thermal.T_env.kelvin(), s.thermal.T_body.kelvin(),
                    torque_to_si(dyn.tau_0_eV), dyn.tau_1_prime,
                    dyn.terminal_omega_per_s.value_or(std::nan("")),
                    dyn.relaxation_time_s.value_or(std::nan("")),
                    dyn.initial_accel_per_s2.value_or(std::nan(""))};
              });
  });

  // ---- force ----
  auto* force_cmd = app.add_subcommand("force", "transverse force calculations");

  auto* fv = force_cmd->add_subcommand("vacuum",
                                       "vacuum force (identically zero)");
  CommonOptions fvo;
  add_common_flags(fv, fvo);
  fv->callback([&] {
    emit_rows(fvo, {"T_K", "Tp_K", "F_N"}, [&](const Scenario& s) {
      const auto r = force::vacuum_force(s.material, s.thermal);
      return std::vector<double>{s.thermal.T_env.kelvin(),
                                 s.thermal.T_body.kelvin(), r.F_x_newton};
    });
  });

  auto* fs = force_cmd->add_subcommand(
      "slab", "lossy-slab force; columns: T_K,Tp_K,a_um,f,F_N");
  CommonOptions fso;
  double nu_over_eta = 1.0;
  double slab_wp_eV = std::nan("");
  add_common_flags(fs, fso);
  fs->add_option("--nu-over-eta", nu_over_eta, "slab damping / particle eta");
  fs->add_option("--slab-omega-p-eV", slab_wp_eV,
                 "slab plasma frequency [eV] (default: particle's)");
  fs->add_option("--sweep-tp", fso.sweep_tp, "sweep T' [K]");
  fs->callback([&] {
    emit_rows(fso, {"T_K", "Tp_K", "a_um", "f", "F_N"}, [&](const Scenario& s) {
      const Energy nu(nu_over_eta * s.material.eta.eV());
      const Energy wp(std::isnan(slab_wp_eV) ? s.material.omega_p.eV()
                                             : slab_wp_eV);
      const auto r = force::slab_force(s.material, s.thermal, s.a_m, nu, wp);
      return std::vector<double>{s.thermal.T_env.kelvin(),
                                 s.thermal.T_body.kelvin(), s.a_m * 1e6,
                                 r.f_dimensionless, r.F_x_newton};
    });
  });

  auto* fp = force_cmd->add_subcommand(
      "pc", "perfect-conductor force; columns: T_K,Tp_K,a_um,f0,F_N");
  CommonOptions fpo;
  add_common_flags(fp, fpo);
  fp->add_option("--sweep-tp", fpo.sweep_tp, "sweep T' [K]");
  fp->add_option("--sweep-a", fpo.sweep_a, "sweep a [um]");
  fp->callback([&] {
    emit_rows(fpo, {"T_K", "Tp_K", "a_um", "f0", "F_N"}, [&](const Scenario& s) {
      const auto r = force::pc_force(s.material, s.thermal, s.a_m,
                                     std::min(fpo.tol, 1e-7));
      return std::vector<double>{s.thermal.T_env.kelvin(),
                                 s.thermal.T_body.kelvin(), s.a_m * 1e6,
                                 r.f_dimensionless, r.F_x_newton};
    });
  });

  auto* ft = force_cmd->add_subcommand(
      "terminal",
      "terminal velocity above a perfect conductor; columns: T_K,Tp_K,a_um,"
      "f0,f1,f1_noneq,f1_einstein_hopf,vT_over_2wca,vT_m_s,damping_time_s");
  CommonOptions fto;
  add_common_flags(ft, fto);
  ft->add_option("--sweep-tp", fto.sweep_tp, "sweep T' [K]");
  ft->callback([&] {
    emit_rows(fto,
              {"T_K", "Tp_K", "a_um", "f0", "f1", "f1_noneq",
               "f1_einstein_hopf", "vT_over_2wca", "vT_m_s", "damping_time_s"},
              [&](const Scenario& s) {
                const auto dyn = force::pc_friction_linear(
                    s.material, s.thermal, s.geometry, s.a_m,
                    std::min(fto.tol, 1e-7));
                return std::vector<double>{
                    s.thermal.T_env.kelvin(),
                    s.thermal.T_body.kelvin(),
                    s.a_m * 1e6,
                    dyn.f0,
                    dyn.f1.total(),
                    dyn.f1.noneq,
                    dyn.f1.einstein_hopf,
                    dyn.terminal_velocity_scaled.value_or(std::nan("")),
                    dyn.terminal_velocity_m_s.value_or(std::nan("")),
                    dyn.damping_time_s.value_or(std::nan(""))};
              });
  });

  auto* fc = force_cmd->add_subcommand(
      "consistency",
      "dual-route residual of the slab force; columns: T_K,Tp_K,a_um,residual");
  CommonOptions fco;
  double fc_nu_over_eta = 1.0;
  add_common_flags(fc, fco);
  fc->add_option("--nu-over-eta", fc_nu_over_eta, "slab damping / particle eta");
  fc->callback([&] {
    emit_rows(fco, {"T_K", "Tp_K", "a_um", "residual"}, [&](const Scenario& s) {
      const Energy nu(fc_nu_over_eta * s.material.eta.eV());
      const Energy wp = s.material.omega_p;
      const double res = force::force_from_torque_consistency(
          s.material, s.thermal, s.a_m,
          [nu, wp](Energy w) { return material::drude_epsilon(wp, nu, w); },
          1e-9);
      return std::vector<double>{s.thermal.T_env.kelvin(),
                                 s.thermal.T_body.kelvin(), s.a_m * 1e6, res};
    });
  });

  // ---- cooling ----
  auto* cooling_cmd = app.add_subcommand("cooling", "radiative cooling times");

  auto* ct = cooling_cmd->add_subcommand(
      "time", "cooling time; columns: T_K,Tp0_K,Tp1_K,scale_s,integral,time_s");
  CommonOptions cto;
  double tp0_kelvin = 900.0;
  double tp1_kelvin = 330.0;
  std::string regime = "high";
  add_common_flags(ct, cto);
  ct->add_option("--Tp0-kelvin", tp0_kelvin, "initial body temperature [K]");
  ct->add_option("--Tp1-kelvin", tp1_kelvin, "final body temperature [K]");
  ct->add_option("--regime", regime, "high|low Debye regime");
  ct->callback([&] {
    const Scenario s = build_scenario(cto);
    cooling::CoolingSpec spec;
    spec.T_env = s.thermal.T_env;
    spec.T_start = temperature_to_energy(tp0_kelvin);
    spec.T_end = temperature_to_energy(tp1_kelvin);
    spec.debye_theta = temperature_to_energy(s.preset.debye_theta_K);
    cooling::CoolingResult res;
    if (regime == "high") {
      spec.regime = specfun::ExpansionRegime::HighTemperature;
      res = cooling::cooling_time_highT(spec, s.material, s.geometry);
    } else if (regime == "low") {
      spec.regime = specfun::ExpansionRegime::LowTemperature;
      res = cooling::cooling_time_lowT(spec, s.material, s.geometry);
    } else {
      throw UnitError("regime must be high or low");
    }
    emit(cto, cli::to_csv({"T_K", "Tp0_K", "Tp1_K", "scale_s", "integral",
                           "time_s"},
                          {{s.thermal.T_env.kelvin(), tp0_kelvin, tp1_kelvin,
                            res.scale_t0_seconds, res.dimensionless_integral,
                            res.time_seconds}}));
  });

  auto* cs = cooling_cmd->add_subcommand(
      "scales",
      "regime time scales; columns: T_high_K,T_low_K,theta_K,t0_s,t0_low_s,"
      "ratio");
  CommonOptions cso;
  double t_low_kelvin = 1.0;
  add_common_flags(cs, cso);
  cs->add_option("--T-low-kelvin", t_low_kelvin, "low-regime temperature [K]");
  cs->callback([&] {
    const Scenario s = build_scenario(cso);
    const Energy theta = temperature_to_energy(s.preset.debye_theta_K);
    const Energy t_high = s.thermal.T_env;
    const Energy t_low = temperature_to_energy(t_low_kelvin);
    cooling::CoolingSpec spec;
    spec.T_env = t_high;
    spec.T_start = Energy(3.0 * t_high.eV());
    spec.T_end = Energy(1.1 * t_high.eV());
    spec.debye_theta = theta;
    const double t0 =
        cooling::cooling_time_highT(spec, s.material, s.geometry).scale_t0_seconds;
    cooling::CoolingSpec low = spec;
    low.T_env = t_low;
    low.T_start = Energy(3.0 * t_low.eV());
    low.T_end = Energy(1.1 * t_low.eV());
    const double t0_low =
        cooling::cooling_time_lowT(low, s.material, s.geometry).scale_t0_seconds;
    emit(cso,
         cli::to_csv({"T_high_K", "T_low_K", "theta_K", "t0_s", "t0_low_s",
                      "ratio"},
                     {{t_high.kelvin(), t_low.kelvin(), theta.kelvin(), t0,
                       t0_low, t0_low / t0}}));
  });

  // ---- reproduce ----
  auto* rep = app.add_subcommand("reproduce", "regenerate figure sweeps as CSV");
  std::string figure_name = "all";
  std::string out_dir = "figures";
  CommonOptions ro;
  rep->add_option("figure", figure_name, "fig1..fig7, fig5b, or all");
  rep->add_option("--out", ro.out_path, "output file (single figure)");
  rep->add_option("--out-dir", out_dir, "output directory for 'all'");
  rep->add_option("--jobs", ro.jobs, "worker threads");
  rep->add_option("--tol", ro.tol, "sweep tolerance");
  int rep_points = 0;
  rep->add_option("--sweep-points", rep_points, "points per sweep");
  rep->callback([&] {
    cli::SweepOptions opt;
    opt.jobs = ro.jobs;
    opt.tol = ro.tol;
    opt.points = rep_points;
    if (figure_name == "all") {
      std::filesystem::create_directories(out_dir);
      for (const auto& name : cli::figure_names()) {
        const auto fig = cli::figure_by_name(name);
        const auto csv = cli::reproduce_csv(*fig, opt);
        std::ofstream out(out_dir + "/" + name + ".csv", std::ios::binary);
        if (!out) throw UnitError("cannot write in " + out_dir);
        out << csv;
        std::cout << "wrote " << out_dir << "/" << name << ".csv\n";
      }
      return;
    }
    const auto fig = cli::figure_by_name(figure_name);
    if (!fig) throw UnitError("unknown figure: " + figure_name);
    emit(ro, cli::reproduce_csv(*fig, opt));
  });

  // ---- report ----
  auto* report_cmd =
      app.add_subcommand("report", "headline numbers vs references");
  CommonOptions repo;
  report_cmd->add_option("--out", repo.out_path, "output file");
  bool report_failed = false;
  report_cmd->callback([&] {
    const auto rows = cli::headline_rows();
    emit(repo, cli::format_headline_report(rows));
    for (const auto& r : rows)
      if (!r.within()) report_failed = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  if (report_failed) return kExitReportMismatch;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const quad::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
