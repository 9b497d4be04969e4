// figures.hpp — dataset builders for the three reference figures and the
// generic trace/sweep/protocol runs

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzeno/csvio.hpp"
#include "qzeno/oracles.hpp"
#include "qzeno/protocol.hpp"

namespace qzeno::figures {

// Detuning sweep of p(T) at T = 100, beta/A = 1e6, for the uninterrupted
// curve and N in {2, 5, 10, 50, 100, 1000}; 401 points over Delta/A in
// [0, 2], nudged off degenerate-root points by `perturbation` (relative).
csv::Table fig1(double perturbation = 1e-9);

// Survival versus time at the dynamically shifted threshold (Delta = A,
// beta/A = 1e6): uninterrupted, 50 pulses in T = 2e5, 200 pulses in T = 1e5,
// on a log grid; entries beyond a column's T are NaN.
csv::Table fig2();

// Band-edge traces for Delta/gamma in {-1, 0, +1} on t in [0, 30]; a
// trailer row at t = inf records the asymptotic survival for each column.
csv::Table fig3();

struct RunConfig {
    SpectralModel model = SpectralModel::photodetachment(1e6, 1.0);
    double t_max = 20.0;
    int points = 200;
    TraceMethod method = TraceMethod::Analytic;
    double T = 100.0;
    long N = 1;
    std::vector<long> n_values;
    double delta_min = 0.0, delta_max = 2.0;
    bool literal_exponent = false;
    double perturbation = 1e-9;
    OracleConfig oracle;
};

csv::Table trace_table(const RunConfig& cfg);
csv::Table sweep_table(const RunConfig& cfg);
csv::Table protocol_table(const RunConfig& cfg);

// build_expansion with retry nudging the detuning off degenerate points
AmplitudeExpansion expansion_with_perturbation(SpectralModel m, double rel_eps);

} // namespace qzeno::figures
