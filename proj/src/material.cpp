#include "neq/material.hpp"

#include <cmath>

namespace neq::material {

namespace {
const complex I{0.0, 1.0};
}

Mat3c operator*(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      complex s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3c inverse(const Mat3c& a) {
  const complex c00 = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  const complex c01 = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  const complex c02 = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  const complex det = a(0, 0) * c00 + a(0, 1) * c01 + a(0, 2) * c02;
  // Scale-aware singularity test.
  double scale = 0.0;
  for (const auto& v : a.m) scale = std::max(scale, std::abs(v));
  if (std::abs(det) <= 1e-300 ||
      std::abs(det) < 1e-14 * scale * scale * scale)
    throw ModelError("singular 3x3 matrix");
  Mat3c r;
  r(0, 0) = c00 / det;
  r(1, 0) = c01 / det;
  r(2, 0) = c02 / det;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / det;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / det;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / det;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / det;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / det;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / det;
  return r;
}

SusceptibilityTensor chi_model(const MaterialParams& params, Energy omega) {
  const double w = omega.eV();
  const double w0 = params.omega_0.eV();
  const double eta = params.eta.eV();
  const double wc = params.omega_c.eV();
  const double wp2 = params.omega_p.eV() * params.omega_p.eV();
  if (w == 0.0 && w0 == 0.0)
    throw ModelError("metal susceptibility has a pole at zero frequency");

  const complex lorentz = w0 * w0 - w * w - I * w * eta;
  const complex denom = lorentz * lorentz - w * w * wc * wc;
  if (denom == complex(0.0))
    throw ModelError("susceptibility pole at this frequency");

  SusceptibilityTensor t;
  t.omega = omega;
  t.chi(0, 0) = wp2 * lorentz / denom;
  t.chi(1, 1) = t.chi(0, 0);
  t.chi(0, 1) = -I * w * wc * wp2 / denom;
  t.chi(1, 0) = -t.chi(0, 1);
  t.chi(2, 2) = wp2 / lorentz;
  return t;
}

AntiHermitianSplit anti_hermitian_split(const SusceptibilityTensor& t) {
  AntiHermitianSplit s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      s.symm_odd(i, j) = 0.5 * (t.chi(i, j).imag() + t.chi(j, i).imag());
      s.antisymm_even(i, j) = -0.5 * (t.chi(i, j).real() - t.chi(j, i).real());
    }
  return s;
}

double hat_chi_xy(const MaterialParams& params, Energy omega) {
  const auto t = chi_model(params, omega);
  return (t.chi(0, 1) - t.chi(1, 0)).real();
}

double hat_chi_xy_metal(const MaterialParams& params, Energy omega) {
  const double w = omega.eV();
  const double eta = params.eta.eV();
  const double wp2 = params.omega_p.eV() * params.omega_p.eV();
  const double d = w * w + eta * eta;
  return -4.0 * params.omega_c.eV() * wp2 * eta / (d * d);
}

double hat_chi_xz_metal(const MaterialParams& params, Energy omega) {
  return -hat_chi_xy_metal(params, omega);
}

complex drude_epsilon(Energy omega_p, Energy nu, Energy omega) {
  const double w = omega.eV();
  if (w == 0.0) throw ModelError("Drude permittivity undefined at zero frequency");
  const double wp2 = omega_p.eV() * omega_p.eV();
  return 1.0 - wp2 / (w * w + I * w * nu.eV());
}

ReflectionCoefficients reflection(complex epsilon, Energy omega, double k) {
  const double w = omega.eV();
  if (!(w > 0.0)) throw ModelError("reflection coefficients expect omega > 0");

  ReflectionCoefficients rc;
  if (k >= w) {
    rc.kappa = std::sqrt(k * k - w * w);
  } else {
    rc.kappa = -I * std::sqrt(w * w - k * k);
  }
  complex kp = std::sqrt(complex(k * k) - epsilon * w * w);
  // Branch: im(kappa') <= 0 for omega > 0; ties resolved to re >= 0, which
  // the principal square root already provides.
  if (kp.imag() > 0.0) kp = -kp;
  rc.kappa_prime = kp;

  const complex kp_over_eps = kp / epsilon;
  rc.r_H = (rc.kappa - kp_over_eps) / (rc.kappa + kp_over_eps);
  rc.r_E = (rc.kappa - kp) / (rc.kappa + kp);
  return rc;
}

Mat3c ll_polarizability(const Mat3c& epsilon, double radius_natural) {
  Mat3c num = epsilon;
  Mat3c den = epsilon;
  for (int i = 0; i < 3; ++i) {
    num(i, i) -= 1.0;
    den(i, i) += 2.0;
  }
  Mat3c alpha = num * inverse(den);
  const double s = 4.0 * M_PI * std::pow(radius_natural, 3);
  for (auto& v : alpha.m) v *= s;
  return alpha;
}

Mat3c ll_alpha_model(const MaterialParams& params, Energy omega,
                     double radius_natural) {
  Mat3c eps = chi_model(params, omega).chi;
  for (int i = 0; i < 3; ++i) eps(i, i) += 1.0;
  return ll_polarizability(eps, radius_natural);
}

double ll_re_alpha_xy_approx(const MaterialParams& params, Energy omega) {
  const double w = omega.eV();
  const double wp = params.omega_p.eV();
  return 54.0 * params.volume_natural() * w * w * params.omega_c.eV() *
         params.eta.eV() / std::pow(wp, 4);
}

double ll_im_alpha_trace_xy_approx(const MaterialParams& params, Energy omega) {
  const double wp = params.omega_p.eV();
  return 18.0 * params.volume_natural() * omega.eV() * params.eta.eV() /
         (wp * wp);
}

}  // namespace neq::material
