// cubic.hpp — real monic cubic solver (closed form + Newton polish)

#pragma once

#include <array>
#include <complex>

namespace qzeno {

// monic cubic y^3 + c2 y^2 + c1 y + c0 with real coefficients
struct CubicPolynomial {
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
};

enum class RootClass { ThreeReal, OneRealConjugatePair };

struct RootTriple {
    std::array<std::complex<double>, 3> roots;
    RootClass classification = RootClass::ThreeReal;
    double residual = 0.0; // max |P(y_i)|, compensated evaluation
};

// All three roots via trigonometric/Cardano closed form, polished by Newton
// with a compensated Horner evaluation of P. A conjugate pair is stored as
// an exact conjugate. Real roots come first.
RootTriple solve_cubic(const CubicPolynomial& p);

// Compensated Horner evaluation of P at a complex point (used for the
// residual bound; accurate to ~|P| * eps instead of eps * sum|terms|).
std::complex<double> cubic_eval_accurate(const CubicPolynomial& p,
                                         std::complex<double> y);

} // namespace qzeno
