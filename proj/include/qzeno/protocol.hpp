// protocol.hpp — repeated projective interrogation of the decaying state

#pragma once

#include <utility>
#include <vector>

#include "qzeno/survival.hpp"

namespace qzeno {

struct MeasurementSchedule {
    double total_T = 1.0; // observation time, reduced units
    long n_interruptions = 1; // N = 1 means uninterrupted observation

    MeasurementSchedule(double T, long n);
};

// Survival probability after N equally spaced instantaneous resets:
// (|alpha(T/N)|^2)^N. With literal_amplitude_exponent the historical
// |alpha(T/N)|^N variant is returned instead (figure comparison only).
double interrogated_survival(const AmplitudeExpansion& e,
                             const MeasurementSchedule& sched,
                             bool literal_amplitude_exponent = false);

// Piecewise survival at arbitrary t in [0, T]:
// p(t) = p1^m |alpha(t - m T/N)|^2 inside interval m.
double interrupted_survival_at(const AmplitudeExpansion& e,
                               const MeasurementSchedule& sched, double t);

// Sampled piecewise trace; endpoint equals interrogated_survival. The stored
// amplitude is alpha(tau) scaled by p1^{m/2} so that p = |alpha|^2 holds
// (phase history across resets is not tracked).
SurvivalTrace interrupted_trace(const AmplitudeExpansion& e,
                                const MeasurementSchedule& sched,
                                int samples_per_interval);

// p versus N at fixed T.
std::vector<std::pair<long, double>> zeno_scan(const AmplitudeExpansion& e,
                                               double T,
                                               const std::vector<long>& n_values);

// Analytic minimum of the algebraic-regime model p(N) = (N tau / T)^{N nu}:
// n_opt = T/(e tau), p_min = exp(-nu T/(e tau)). Requires T > tau.
std::pair<double, double> anti_zeno_optimum(const AsymptoticFit& fit, double T);

} // namespace qzeno
