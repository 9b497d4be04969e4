// survival.hpp — closed-form survival amplitude, trapped population, tail fits
//
// With y_i the characteristic-cubic roots and
//
//   c_i = y_i (y_i + sqrt(beta)) / P'(y_i)   (Photodetachment)
//   c_i = y_i^2 / (3 y_i^2 + Delta)          (BandEdge)
//
// the survival amplitude has the closed form
//
//   alpha(t) = sum_i c_i erfcx( s_i e^{i pi/4} sqrt(t) y_i ),   sum_i c_i = 1
//
// using the scaled erfcx so that the exp(i y_i^2 t) prefactor is never
// formed. The branch signs s_i are calibrated against the spectral-
// decomposition oracle (partial fractions of 1/H in s = sqrt(-iz) give
// s_i = -1 for every root; the calibration asserts this numerically and
// would catch any misassigned branch as unbounded growth).

#pragma once

#include <array>
#include <span>
#include <vector>

#include "qzeno/spectral_model.hpp"

namespace qzeno {

struct ExpansionTerm {
    Complex root;       // y_i
    Complex coefficient; // c_i
    int branch_sign;    // s_i, +1 or -1
};

struct AmplitudeExpansion {
    SpectralModel model;
    std::array<ExpansionTerm, 3> terms;
};

// Builds roots and coefficients, checks sum c_i = 1, calibrates branch
// signs. Throws std::domain_error on (near-)degenerate cubic roots, naming
// the parameter point.
AmplitudeExpansion build_expansion(const SpectralModel& m);

// alpha(t); t >= 0.
Complex alpha_analytic(const AmplitudeExpansion& e, double t);

enum class TraceMethod { Analytic, Modes, Volterra, Spectral };

struct SurvivalTrace {
    std::vector<double> times;
    std::vector<Complex> alpha;
    std::vector<double> p; // |alpha|^2
    TraceMethod method = TraceMethod::Analytic;
};

// Validates invariants (times strictly increasing, p = |alpha|^2, bounded).
SurvivalTrace make_trace(std::vector<double> times, std::vector<Complex> alpha,
                         TraceMethod method);

SurvivalTrace survival_p(const AmplitudeExpansion& e, std::span<const double> times);

// Long-time trapped population p_f = |2 c_b|^2 of the bound root; 0 when no
// bound pole exists. Cross-checked internally against |residue(1/H, z_b)|.
double asymptotic_survival(const SpectralModel& m);

struct AsymptoticFit {
    double nu = 0.0;       // algebraic exponent: p ~ (tau/t)^nu
    double tau = 0.0;      // tail time scale
    double t_lo = 0.0, t_hi = 0.0;
    double residual = 0.0; // RMS residual of the log-log fit
};

// Least-squares power-law fit of p on [t_lo, t_hi]. The caller must have
// subtracted any non-decaying bound contribution. Throws on non-positive p
// in the window or fewer than 8 samples.
AsymptoticFit fit_tail(const SurvivalTrace& trace, double t_lo, double t_hi);

// Negative-control hook: returns a copy with one branch sign flipped (a
// flipped sign produces exponential growth and fails the boundedness check).
AmplitudeExpansion flip_branch_sign(AmplitudeExpansion e, int term_index);

} // namespace qzeno
