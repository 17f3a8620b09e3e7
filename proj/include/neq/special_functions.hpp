#ifndef NEQ_SPECIAL_FUNCTIONS_HPP
#define NEQ_SPECIAL_FUNCTIONS_HPP

#include <stdexcept>

// Digamma/trigamma for positive real arguments and the closed forms of the
// Bose-weighted rational integrals
//
//   I1(w) = int_0^inf dx  x/(x^2+1)    / (e^{w x} - 1)
//   I2(w) = int_0^inf dx  x^3/(x^2+1)^2 / (e^{w x} - 1)
//   J (w) = int_0^inf dx  x/(x^2+1)^2  / (e^{w x} - 1)  =  I1 - I2
//
// together with their high-temperature (w -> 0) and low-temperature
// (w -> inf) expansions.

namespace neq::specfun {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// psi(z), z > 0.  Upward recurrence past the asymptotic threshold, then the
// series with seven Bernoulli terms, assembled in extended precision so the
// cancellation-heavy brackets below stay accurate at large w.
double digamma(double z);

// psi'(z), z > 0, same scheme.
double trigamma(double z);

// I1(w) = (1/2) [ -pi/w + ln(w/2pi) - psi(w/2pi) ]
double I1(double w);

// I2(w) = (1/4) [ -pi/w + 2 ln(w/2pi) + 1 - 2 psi(w/2pi)
//                 - (w/2pi) psi'(w/2pi) ]
double I2(double w);

// J(w) = I1(w) - I2(w) = (1/4) [ (w/2pi) psi'(w/2pi) - 1 - pi/w ].
double J_slab(double w);

// High-temperature (w -> 0) expansions.
double I1_high_temperature(double w);
double I2_high_temperature(double w);

// Low-temperature (w -> inf) expansions.
double I1_low_temperature(double w);
double I2_low_temperature(double w);

enum class ExpansionRegime { Exact, HighTemperature, LowTemperature };

// Default plotting crossover: high-T branch below w = 0.1, low-T above 10.
ExpansionRegime select_regime(double w);

struct RegimeValue {
  double value;
  ExpansionRegime branch_used;
};

RegimeValue I1_in_regime(double w, ExpansionRegime regime);
RegimeValue I2_in_regime(double w, ExpansionRegime regime);

}  // namespace neq::specfun

#endif  // NEQ_SPECIAL_FUNCTIONS_HPP
