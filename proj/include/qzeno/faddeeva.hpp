// faddeeva.hpp — complex error functions: Faddeeva w, erfc, scaled erfcx

#pragma once

#include <complex>

namespace qzeno::sf {

using Complex = std::complex<double>;

// Evaluation regions of faddeeva_w, exposed so continuity across the
// switches can be probed directly.
inline constexpr double kSeriesRadius = 2.5;   // Maclaurin series below
inline constexpr double kLatticeRadius = 12.0; // sampling identity below, continued fraction above
inline constexpr double kLatticeStep = 0.4;    // node spacing of the sampling identity

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
//
// Relative accuracy <= 1e-12 for |z| <= 1e6. For Im z < 0 the reflection
// w(z) = 2 exp(-z^2) - w(-z) is used; there |w| itself overflows double
// once Im(z)^2 - Re(z)^2 exceeds ~709 and infinities are returned.
Complex faddeeva_w(Complex z);

// Complementary error function of complex argument.
//
// erfc(z) = exp(-z^2) w(iz) for Re z >= 0, erfc(z) = 2 - erfc(-z) otherwise.
// The exp(-z^2) prefactor overflows for large |Im z| with Re z >= 0; the
// result then saturates to +/-Inf components. Callers needing large
// arguments should use erfcx_c.
Complex erfc_c(Complex z);

// Scaled complement erfcx(z) = exp(z^2) erfc(z) = w(iz), overflow-free in
// the right half plane.
Complex erfcx_c(Complex z);

// Real positive-axis erfcx.
double erfcx(double x);

} // namespace qzeno::sf
