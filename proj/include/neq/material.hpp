#ifndef NEQ_MATERIAL_HPP
#define NEQ_MATERIAL_HPP

#include <array>
#include <complex>
#include <stdexcept>

#include "neq/units.hpp"

// The magnetized-oscillator susceptibility tensor, its Hermitian /
// anti-Hermitian decomposition, Drude permittivity, Fresnel reflection
// coefficients, and the matrix Lorenz-Lorentz polarizability.

namespace neq::material {

using complex = std::complex<double>;

class ModelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename T>
struct Mat3 {
  std::array<T, 9> m{};
  T& operator()(int i, int j) { return m[3 * i + j]; }
  const T& operator()(int i, int j) const { return m[3 * i + j]; }
};

using Mat3c = Mat3<complex>;
using Mat3d = Mat3<double>;

Mat3c operator*(const Mat3c& a, const Mat3c& b);

// Exact 3x3 inverse via cofactors; throws ModelError on a singular matrix.
Mat3c inverse(const Mat3c& a);

// Dimensionless susceptibility at a (possibly negative) frequency.
struct SusceptibilityTensor {
  Mat3c chi;
  Energy omega;
};

// Magnetic field along z: coupled (x, y) block, free z response.  The
// zero-frequency pole of the metal (omega_0 = 0) is rejected.
SusceptibilityTensor chi_model(const MaterialParams& params, Energy omega);

// Anti-Hermitian part (chi - chi^dagger)/2i split into its real part
// (symmetric in indices, odd in omega; dissipative) and imaginary part
// (antisymmetric in indices, even in omega; nonreciprocal).
struct AntiHermitianSplit {
  Mat3d symm_odd;
  Mat3d antisymm_even;
};

AntiHermitianSplit anti_hermitian_split(const SusceptibilityTensor& t);

// Re(chi_xy - chi_yx) from the exact tensor; the quantity that drives every
// first-order nonreciprocal torque (field along z).
double hat_chi_xy(const MaterialParams& params, Energy omega);

// Metal small-omega_c approximation of the same quantity:
//   Re(chi_xy - chi_yx) ~ -4 omega_c omega_p^2 eta / (omega^2 + eta^2)^2.
double hat_chi_xy_metal(const MaterialParams& params, Energy omega);

// Field along +y so that the pair (x, z) is coupled with
// Re(chi_xz - chi_zx) = +4 omega_c omega_p^2 eta/(omega^2+eta^2)^2; this
// orientation makes the transverse slab force positive for T' > T.
double hat_chi_xz_metal(const MaterialParams& params, Energy omega);

// Drude permittivity eps = 1 - omega_p^2/(omega^2 + i omega nu).
complex drude_epsilon(Energy omega_p, Energy nu, Energy omega);

// Fresnel reflection off the half-space z < 0, evaluated for omega > 0 with
// the branch im(kappa) <= 0 in the propagating sector.
struct ReflectionCoefficients {
  complex r_H;      // transverse magnetic
  complex r_E;      // transverse electric
  complex kappa;        // sqrt(k^2 - omega^2)
  complex kappa_prime;  // sqrt(k^2 - eps omega^2)
};

ReflectionCoefficients reflection(complex epsilon, Energy omega, double k);

// Matrix Lorenz-Lorentz polarizability alpha = (eps-1)(eps+2)^{-1} 4 pi a^3
// with a the sphere radius in natural units (eV^-1).
Mat3c ll_polarizability(const Mat3c& epsilon, double radius_natural);

// alpha of the model nanosphere: eps = 1 + chi, then the matrix relation.
Mat3c ll_alpha_model(const MaterialParams& params, Energy omega,
                     double radius_natural);

// Small-omega, omega_p >> omega ~ T approximants used by the LL torque
// estimates (per unit nothing: full polarizability, natural units).
double ll_re_alpha_xy_approx(const MaterialParams& params, Energy omega);
double ll_im_alpha_trace_xy_approx(const MaterialParams& params, Energy omega);

}  // namespace neq::material

#endif  // NEQ_MATERIAL_HPP
