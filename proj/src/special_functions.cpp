#include "histop/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace histop {

namespace {

constexpr double kRelTol = 1e-16;
constexpr int kMaxIter = 10000;

// Sum of the series gamma(s, z) = z^s e^(-z) * sum_{n>=0} z^n / (s (s+1) ... (s+n)).
// Returns the bare sum; callers attach the z^s e^(-z) prefactor they need.
// All terms are positive, so the sum converges monotonically and the
// relative-term stopping rule is safe.
double lower_series_sum(double s, double z) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= z / (s + n);
    sum += term;
    if (term < kRelTol * sum) return sum;
  }
  throw std::runtime_error("lower incomplete gamma series did not converge");
}

// Continued fraction for the upper incomplete gamma function,
//
//   Gamma(s, z) = e^(-z) z^s / (z + 1 - s - 1*(1-s)/(z + 3 - s - ...)),
//
// evaluated with the modified Lentz algorithm.  Valid for z >= s + 1.
double upper_gamma_cf(double s, double z) {
  const double tiny = 1e-300;
  double b = z + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kRelTol) {
      return std::exp(s * std::log(z) - z) * h;
    }
  }
  throw std::runtime_error("upper incomplete gamma continued fraction did not converge");
}

void check_domain(double s, double z) {
  if (!(s > 0.0)) {
    throw std::domain_error("incomplete gamma: s must be positive, got s=" + std::to_string(s));
  }
  if (!(z >= 0.0)) {
    throw std::domain_error("incomplete gamma: z must be nonnegative, got z=" + std::to_string(z));
  }
}

}  // namespace

double lower_incomplete_gamma(double s, double z) {
  check_domain(s, z);
  if (z == 0.0) return 0.0;
  if (z < s + 1.0) {
    return std::exp(s * std::log(z) - z) * lower_series_sum(s, z);
  }
  return std::tgamma(s) - upper_gamma_cf(s, z);
}

double modified_incomplete_gamma(double s, double z) {
  check_domain(s, z);
  // Limit value; avoids 0/0 at z = 0 and the loss of significance just above it.
  if (z <= 1e-8) return 1.0 / s;
  if (z < s + 1.0) {
    // gamma(s, z) / z^s = e^(-z) * series, with the z^s prefactor cancelled
    // analytically so small z never meets an underflowing power.
    return std::exp(-z) * lower_series_sum(s, z);
  }
  return (std::tgamma(s) - upper_gamma_cf(s, z)) / std::pow(z, s);
}

}  // namespace histop
