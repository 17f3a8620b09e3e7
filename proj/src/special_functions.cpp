#include "neq/special_functions.hpp"

#include <cmath>
#include <string>

namespace neq::specfun {

namespace {

constexpr double two_pi = 2.0 * M_PI;

// B_{2k} for k = 1..7.
constexpr long double bernoulli[7] = {
    1.0L / 6.0L,  -1.0L / 30.0L,     1.0L / 42.0L, -1.0L / 30.0L,
    5.0L / 66.0L, -691.0L / 2730.0L, 7.0L / 6.0L,
};

// Recurrence shift to z >= 12, then the asymptotic series.  Assembled in
// extended precision because I1/I2/J below subtract these against logs with
// up to ten digits of cancellation.
long double digamma_impl(long double z) {
  long double acc = 0.0L;
  while (z < 12.0L) {
    acc -= 1.0L / z;
    z += 1.0L;
  }
  const long double inv2 = 1.0L / (z * z);
  long double series = 0.0L;
  long double power = inv2;
  for (int k = 1; k <= 7; ++k) {
    series += bernoulli[k - 1] / (2 * k) * power;
    power *= inv2;
  }
  return acc + std::log(z) - 0.5L / z - series;
}

long double trigamma_impl(long double z) {
  long double acc = 0.0L;
  while (z < 12.0L) {
    acc += 1.0L / (z * z);
    z += 1.0L;
  }
  const long double inv = 1.0L / z;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  long double power = inv * inv2;
  for (int k = 1; k <= 7; ++k) {
    series += bernoulli[k - 1] * power;
    power *= inv2;
  }
  return acc + inv + 0.5L * inv2 + series;
}

void require_positive(double z, const char* who) {
  if (!(z > 0.0)) throw DomainError(std::string(who) + ": argument must be > 0");
}

// For z = w/2pi above this, the psi-based brackets are evaluated by their
// algebraically reduced asymptotic series (the pi/w, log and constant terms
// cancel exactly; only Bernoulli tails survive).
constexpr double series_threshold = 8.0;

// I1 = sum_k B_{2k}/(4k) z^{-2k}.
double I1_series(double z) {
  static const long double c[10] = {
      bernoulli[0] / 4,  bernoulli[1] / 8,  bernoulli[2] / 12,
      bernoulli[3] / 16, bernoulli[4] / 20, bernoulli[5] / 24,
      bernoulli[6] / 28, -3617.0L / 510 / 32, 43867.0L / 798 / 36,
      -174611.0L / 330 / 40};
  const long double inv2 = 1.0L / ((long double)z * z);
  long double sum = 0.0L;
  long double power = inv2;
  for (int k = 0; k < 10; ++k) {
    sum += c[k] * power;
    power *= inv2;
  }
  return (double)sum;
}

// I2 = (1/4) sum_k B_{2k} (1-k)/k z^{-2k}; the k = 1 term vanishes.
double I2_series(double z) {
  static const long double c[10] = {
      0.0L,
      bernoulli[1] * (1.0L - 2) / (4 * 2),
      bernoulli[2] * (1.0L - 3) / (4 * 3),
      bernoulli[3] * (1.0L - 4) / (4 * 4),
      bernoulli[4] * (1.0L - 5) / (4 * 5),
      bernoulli[5] * (1.0L - 6) / (4 * 6),
      bernoulli[6] * (1.0L - 7) / (4 * 7),
      (-3617.0L / 510) * (1.0L - 8) / (4 * 8),
      (43867.0L / 798) * (1.0L - 9) / (4 * 9),
      (-174611.0L / 330) * (1.0L - 10) / (4 * 10)};
  const long double inv2 = 1.0L / ((long double)z * z);
  long double sum = 0.0L;
  long double power = inv2;
  for (int k = 0; k < 10; ++k) {
    sum += c[k] * power;
    power *= inv2;
  }
  return (double)sum;
}

// J = (1/4) sum_k B_{2k} z^{-2k}.
double J_series(double z) {
  static const long double c[10] = {bernoulli[0] / 4, bernoulli[1] / 4,
                                    bernoulli[2] / 4, bernoulli[3] / 4,
                                    bernoulli[4] / 4, bernoulli[5] / 4,
                                    bernoulli[6] / 4, -3617.0L / 510 / 4,
                                    43867.0L / 798 / 4, -174611.0L / 330 / 4};
  const long double inv2 = 1.0L / ((long double)z * z);
  long double sum = 0.0L;
  long double power = inv2;
  for (int k = 0; k < 10; ++k) {
    sum += c[k] * power;
    power *= inv2;
  }
  return (double)sum;
}

}  // namespace

double digamma(double z) {
  require_positive(z, "digamma");
  return (double)digamma_impl((long double)z);
}

double trigamma(double z) {
  require_positive(z, "trigamma");
  return (double)trigamma_impl((long double)z);
}

double I1(double w) {
  require_positive(w, "I1");
  const long double z = (long double)w / two_pi;
  if (z >= series_threshold) return I1_series((double)z);
  return (double)(0.5L * (-(long double)M_PI / w + std::log(z) - digamma_impl(z)));
}

double I2(double w) {
  require_positive(w, "I2");
  const long double z = (long double)w / two_pi;
  if (z >= series_threshold) return I2_series((double)z);
  return (double)(0.25L * (-(long double)M_PI / w + 2.0L * std::log(z) + 1.0L -
                           2.0L * digamma_impl(z) - z * trigamma_impl(z)));
}

double J_slab(double w) {
  require_positive(w, "J_slab");
  const long double z = (long double)w / two_pi;
  if (z >= series_threshold) return J_series((double)z);
  return (double)(0.25L *
                  (z * trigamma_impl(z) - 1.0L - (long double)M_PI / w));
}

double I1_high_temperature(double w) {
  require_positive(w, "I1_high_temperature");
  return 0.5 * (M_PI / w + std::log(w / two_pi) + euler_gamma);
}

double I2_high_temperature(double w) {
  require_positive(w, "I2_high_temperature");
  return 0.25 * (M_PI / w + 2.0 * std::log(w / two_pi) + 1.0 + 2.0 * euler_gamma);
}

double I1_low_temperature(double w) {
  require_positive(w, "I1_low_temperature");
  const double w2 = w * w;
  return M_PI * M_PI / (6.0 * w2) - std::pow(M_PI, 4) / (15.0 * w2 * w2);
}

double I2_low_temperature(double w) {
  require_positive(w, "I2_low_temperature");
  const double w2 = w * w;
  return std::pow(M_PI, 4) / (15.0 * w2 * w2);
}

ExpansionRegime select_regime(double w) {
  if (w < 0.1) return ExpansionRegime::HighTemperature;
  if (w > 10.0) return ExpansionRegime::LowTemperature;
  return ExpansionRegime::Exact;
}

RegimeValue I1_in_regime(double w, ExpansionRegime regime) {
  switch (regime) {
    case ExpansionRegime::HighTemperature:
      return {I1_high_temperature(w), regime};
    case ExpansionRegime::LowTemperature:
      return {I1_low_temperature(w), regime};
    default:
      return {I1(w), ExpansionRegime::Exact};
  }
}

RegimeValue I2_in_regime(double w, ExpansionRegime regime) {
  switch (regime) {
    case ExpansionRegime::HighTemperature:
      return {I2_high_temperature(w), regime};
    case ExpansionRegime::LowTemperature:
      return {I2_low_temperature(w), regime};
    default:
      return {I2(w), ExpansionRegime::Exact};
  }
}

}  // namespace neq::specfun
