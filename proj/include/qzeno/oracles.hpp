// oracles.hpp — independent ground-truth computations of alpha(t)
//
// Three routes, none of which shares code with the closed-form amplitude:
//   1. discretized-mode Schrodinger evolution (fixed-step 4th-order unitary
//      splitting),
//   2. product-integration of the weakly singular Volterra equation
//        alpha'(t) = -i Delta alpha(t) - int_0^t K(t-s) alpha(s) ds,
//   3. pole + branch-cut spectral decomposition
//        alpha(t) = sum_bound res e^{z_b t} + int_0^inf e^{-i s t} rho(s) ds,
//        rho(s) = (1/2pi) [1/H_right(-is) - 1/H_left(-is)] = J(s)/|H_right|^2
//     with the completeness sum rule  sum res + int rho ds = 1.
//     Only principal-sheet (bound) poles enter; Wigner-Weisskopf zeros live
//     on the second sheet and are already contained in the cut integral.

#pragma once

#include <span>

#include "qzeno/spectral_model.hpp"
#include "qzeno/survival.hpp"

namespace qzeno {

struct OracleConfig {
    int n_modes = 4000;
    double u_max = 40.0;      // grid covers omega in (0, u_max^2]
    double dt = 3e-5;         // RK4 step
    double t_max = 20.0;
    double volterra_dt = 2.5e-4;
};

struct ModeBath {
    std::vector<double> u_nodes;   // u = sqrt(omega), midpoint grid
    std::vector<double> couplings; // g_j, with g_j^2 = J(u_j^2) * 2 u_j * du
    std::vector<double> omega;     // u_j^2
};

ModeBath discretize_bath(const SpectralModel& m, const OracleConfig& cfg);

// Static level shift of the uncovered tail, int_{u_max^2}^inf J(w)/w dw:
//   Photodetachment: (2A/pi) atan(sqrt(beta)/u_max)
//   BandEdge:        2 gamma^{3/2} / (pi u_max)
// A truncated bath represents the full model at detuning delta only when
// evolved at delta - truncation_shift (the tail acts as a static shift).
double truncation_shift(const SpectralModel& m, double u_max);

// Fixed-step 4th-order integrator (Yoshida composition of the exact
// diagonal and coupling sub-flows, so every substep is unitary); throws if
// norm drift exceeds 1e-6. max_drift, when given, receives the largest
// observed |norm - 1|.
SurvivalTrace evolve_modes(const ModeBath& bath, double delta,
                           std::span<const double> times, double dt,
                           double* max_drift = nullptr);

// discretize_bath + evolve_modes at the tail-corrected detuning.
SurvivalTrace evolve_modes_oracle(const SpectralModel& m, const OracleConfig& cfg,
                                  std::span<const double> times);

// Product-integration Volterra solver (exact moments of the tau^{-1/2}
// kernel on every subinterval, linear interpolation of alpha).
SurvivalTrace solve_volterra(const SpectralModel& m, double delta,
                             std::span<const double> times, double volterra_dt);

// rho(s) on the cut, s > 0.
double spectral_density_rho(const SpectralModel& m, double s);

struct SpectralEval {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

SpectralEval alpha_spectral_detailed(const SpectralModel& m, double t);

// Throws std::runtime_error (reporting the achieved error estimate) if the
// oscillatory quadrature exceeds its panel budget.
Complex alpha_spectral(const SpectralModel& m, double t);

// sum of bound residues + int rho ds (equals 1 by completeness).
Complex spectral_completeness(const SpectralModel& m);

} // namespace qzeno
