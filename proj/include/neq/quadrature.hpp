#ifndef NEQ_QUADRATURE_HPP
#define NEQ_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "neq/units.hpp"

// Adaptive Gauss-Kronrod integration for the Bose-weighted smooth and
// oscillatory integrands of this project.  Panels use the 15-point Kronrod
// rule, whose nodes are all interior, so integrands with removable 1/u
// behavior at an endpoint are never evaluated there.

namespace neq::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;      // estimate, not a bound
  long evaluations = 0;
  double truncation_point = 0.0;
  // Integral of |f|; the roundoff floor for cancellation-limited values.
  double abs_integral = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, Result partial_)
      : std::runtime_error(msg), partial(partial_) {}
  Result partial;
};

struct Options {
  double rel_tol = 1e-9;
  double abs_floor = 0.0;       // stop refining below this absolute error
  int max_panels = 2000000;
  // Panels never start wider than this (caps panel width against missing
  // oscillations); 0 disables.
  double max_panel_width = 0.0;
};

// Adaptive integration over the finite interval [a, b].
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

enum class Decay { BoseExponential, PowerLaw };

struct IntegrandSpec {
  std::function<double(double)> f;
  Decay decay = Decay::BoseExponential;
  // e^{-rate u} envelope for BoseExponential; must be > 0.
  double rate = 1.0;
  std::optional<double> oscillation_period;
};

// Integrate spec.f over (0, inf).  The truncation point is grown in blocks
// until the tail contribution falls below tolerance; for BoseExponential the
// first block already covers the e^{-rate u} support.  Throws
// ConvergenceError with the partial estimate on failure.
Result integrate_semi_infinite(const IntegrandSpec& spec, double rel_tol,
                               double abs_floor = 0.0);

// Bose-Einstein occupation 1/(e^x - 1) for x > 0, stable for x << 1 and
// clamped to zero past the underflow point.
inline double bose(double x) {
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

inline double bose(Energy omega, Energy T) { return bose(omega.eV() / T.eV()); }

// csch^2(x/2) = 4 n(x) (n(x)+1) with n the Bose factor; overflow-free.
inline double csch_sq_half(double x) {
  const double n = bose(x);
  return 4.0 * n * (n + 1.0);
}

}  // namespace neq::quad

#endif  // NEQ_QUADRATURE_HPP
