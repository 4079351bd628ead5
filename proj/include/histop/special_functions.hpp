#pragma once

namespace histop {

// Lower incomplete gamma function
//
//   gamma(s, z) = integral_0^z t^(s-1) e^(-t) dt,   s > 0, z >= 0.
//
// Evaluated by a power series for z < s + 1 and through the continued
// fraction of the upper incomplete gamma function otherwise.  Relative
// accuracy is about 1e-15 over the parameter ranges used by the density
// normalizations in this library.  Throws std::domain_error for s <= 0
// or z < 0.
double lower_incomplete_gamma(double s, double z);

// Scaled variant gamma(s, z) / z^s.  It is finite at z = 0 with limit
// value 1/s, which is returned directly for z <= 1e-8; the first
// neglected correction there is of order z/(s+1).  Bounded by
// e^(-z)/s <= result <= 1/s and strictly decreasing in z.
double modified_incomplete_gamma(double s, double z);

}  // namespace histop
