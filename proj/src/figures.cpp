// figures.cpp

#include "qzeno/figures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qzeno/version.hpp"

namespace qzeno::figures {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = a + (b - a) * double(i) / double(n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n)
{
    std::vector<double> v(n);
    const double la = std::log10(a), lb = std::log10(b);
    for (int i = 0; i < n; ++i)
        v[i] = std::pow(10.0, la + (lb - la) * double(i) / double(n - 1));
    return v;
}

std::vector<std::string> common_header(const std::string& what,
                                       const std::string& model,
                                       const std::string& params,
                                       const std::string& method)
{
    return {what,
            std::string("version: ") + kVersion,
            "model: " + model,
            "params: " + params,
            "method: " + method,
            "units: times in reduced units (1/A for model a, 1/gamma for model b)"};
}

const char* method_name(TraceMethod m)
{
    switch (m) {
    case TraceMethod::Analytic: return "analytic";
    case TraceMethod::Modes: return "modes";
    case TraceMethod::Volterra: return "volterra";
    case TraceMethod::Spectral: return "spectral";
    }
    return "?";
}

} // namespace

AmplitudeExpansion expansion_with_perturbation(SpectralModel m, double rel_eps)
{
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            return build_expansion(m);
        } catch (const std::domain_error&) {
            const double step = rel_eps * std::max(1.0, std::abs(m.detuning_delta));
            m.detuning_delta += step * double(attempt + 1);
        }
    }
    return build_expansion(m); // propagate the diagnostic
}

csv::Table fig1(double perturbation)
{
    const double T = 100.0, beta = 1e6;
    const std::vector<long> Ns = {2, 5, 10, 50, 100, 1000};
    const std::vector<double> deltas = linspace(0.0, 2.0, 401);

    csv::Table t;
    t.comments = common_header(
        "survival after T=100 vs detuning, uninterrupted and N interruptions",
        "photodetachment (A = 1 units)", "beta=1e6 T=100 N={2,5,10,50,100,1000}",
        "analytic");
    t.columns.push_back({"delta", {}});
    t.columns.push_back({"p_uninterrupted", {}});
    for (long n : Ns)
        t.columns.push_back({"p_N" + std::to_string(n), {}});

    for (double d : deltas) {
        const AmplitudeExpansion e = expansion_with_perturbation(
            SpectralModel::photodetachment(beta, d), perturbation);
        t.columns[0].values.push_back(d);
        t.columns[1].values.push_back(
            interrogated_survival(e, MeasurementSchedule(T, 1)));
        for (std::size_t j = 0; j < Ns.size(); ++j)
            t.columns[2 + j].values.push_back(
                interrogated_survival(e, MeasurementSchedule(T, Ns[j])));
    }
    return t;
}

csv::Table fig2()
{
    const double beta = 1e6, delta = 1.0;
    const AmplitudeExpansion e =
        expansion_with_perturbation(SpectralModel::photodetachment(beta, delta), 1e-9);
    const MeasurementSchedule s50(2e5, 50);
    const MeasurementSchedule s200(1e5, 200);
    const std::vector<double> times = logspace(1e-1, 2e5, 400);

    csv::Table t;
    t.comments = common_header(
        "survival vs time at the dynamically shifted threshold",
        "photodetachment (A = 1 units)",
        "beta=1e6 delta=1 pulses: 50 in T=2e5, 200 in T=1e5", "analytic");
    t.columns = {{"t", {}}, {"p_uninterrupted", {}}, {"p_50pulses", {}},
                 {"p_200pulses", {}}};
    for (double tt : times) {
        t.columns[0].values.push_back(tt);
        t.columns[1].values.push_back(std::norm(alpha_analytic(e, tt)));
        t.columns[2].values.push_back(
            tt <= s50.total_T ? interrupted_survival_at(e, s50, tt) : kNaN);
        t.columns[3].values.push_back(
            tt <= s200.total_T ? interrupted_survival_at(e, s200, tt) : kNaN);
    }
    return t;
}

csv::Table fig3()
{
    const std::vector<double> deltas = {-1.0, 0.0, 1.0};
    const std::vector<double> times = linspace(0.0, 30.0, 600);

    csv::Table t;
    t.comments = common_header(
        "band-edge survival vs time; trailer row (t=inf) holds the "
        "asymptotic trapped population",
        "band-edge (gamma = 1 units)", "gamma=1 delta={-1,0,+1} t=[0,30]",
        "analytic");
    t.columns.push_back({"t", {}});
    for (double d : deltas) {
        const std::string tag = d < 0 ? "m1" : (d > 0 ? "p1" : "0");
        t.columns.push_back({"p_delta_" + tag, {}});
    }

    std::vector<AmplitudeExpansion> es;
    for (double d : deltas)
        es.push_back(build_expansion(SpectralModel::band_edge(d)));

    for (double tt : times) {
        t.columns[0].values.push_back(tt);
        for (std::size_t j = 0; j < deltas.size(); ++j)
            t.columns[1 + j].values.push_back(std::norm(alpha_analytic(es[j], tt)));
    }
    t.columns[0].values.push_back(std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < deltas.size(); ++j)
        t.columns[1 + j].values.push_back(
            asymptotic_survival(SpectralModel::band_edge(deltas[j])));
    return t;
}

csv::Table trace_table(const RunConfig& cfg)
{
    if (cfg.points < 2)
        throw std::invalid_argument("trace: need at least 2 points");
    if (!(cfg.t_max > 0.0))
        throw std::invalid_argument("trace: t_max must be > 0");
    std::vector<double> times = linspace(0.0, cfg.t_max, cfg.points);

    SurvivalTrace tr;
    switch (cfg.method) {
    case TraceMethod::Analytic:
        tr = survival_p(expansion_with_perturbation(cfg.model, cfg.perturbation),
                        times);
        break;
    case TraceMethod::Volterra:
        tr = solve_volterra(cfg.model, cfg.model.detuning_delta, times,
                            cfg.oracle.volterra_dt);
        break;
    case TraceMethod::Modes:
        tr = evolve_modes_oracle(cfg.model, cfg.oracle, times);
        break;
    case TraceMethod::Spectral: {
        std::vector<Complex> a(times.size());
        for (std::size_t i = 0; i < times.size(); ++i)
            a[i] = alpha_spectral(cfg.model, times[i]);
        tr = make_trace(std::move(times), std::move(a), TraceMethod::Spectral);
        break;
    }
    }

    const bool band = cfg.model.kind == ModelKind::BandEdge;
    csv::Table t;
    t.comments = common_header(
        "survival trace",
        band ? "band-edge (gamma = 1 units)" : "photodetachment (A = 1 units)",
        band ? "gamma=" + csv::format_double(cfg.model.gamma) +
                   " delta=" + csv::format_double(cfg.model.detuning_delta)
             : "beta=" + csv::format_double(cfg.model.width_beta) +
                   " delta=" + csv::format_double(cfg.model.detuning_delta),
        method_name(cfg.method));
    t.columns = {{"t", tr.times}, {"alpha_re", {}}, {"alpha_im", {}}, {"p", tr.p}};
    for (const auto& a : tr.alpha) {
        t.columns[1].values.push_back(a.real());
        t.columns[2].values.push_back(a.imag());
    }
    return t;
}

csv::Table sweep_table(const RunConfig& cfg)
{
    if (cfg.points < 1)
        throw std::invalid_argument("sweep: empty grid");
    if (!(cfg.delta_min < cfg.delta_max) && cfg.points > 1)
        throw std::invalid_argument("sweep: need delta_min < delta_max");
    std::vector<double> deltas =
        cfg.points == 1 ? std::vector<double>{cfg.delta_min}
                        : linspace(cfg.delta_min, cfg.delta_max, cfg.points);

    csv::Table t;
    const bool band = cfg.model.kind == ModelKind::BandEdge;
    t.comments = common_header(
        "detuning sweep of p(T) with N interruptions",
        band ? "band-edge (gamma = 1 units)" : "photodetachment (A = 1 units)",
        (band ? "gamma=" + csv::format_double(cfg.model.gamma)
              : "beta=" + csv::format_double(cfg.model.width_beta)) +
            " T=" + csv::format_double(cfg.T) + " N=" + std::to_string(cfg.N),
        "analytic");
    t.columns = {{"delta", {}}, {"p", {}}};
    for (double d : deltas) {
        SpectralModel m = cfg.model;
        m.detuning_delta = d;
        const AmplitudeExpansion e = expansion_with_perturbation(m, cfg.perturbation);
        t.columns[0].values.push_back(d);
        t.columns[1].values.push_back(interrogated_survival(
            e, MeasurementSchedule(cfg.T, cfg.N), cfg.literal_exponent));
    }
    return t;
}

csv::Table protocol_table(const RunConfig& cfg)
{
    std::vector<long> Ns = cfg.n_values;
    if (Ns.empty())
        throw std::invalid_argument("protocol: empty N list");
    const AmplitudeExpansion e =
        expansion_with_perturbation(cfg.model, cfg.perturbation);

    csv::Table t;
    const bool band = cfg.model.kind == ModelKind::BandEdge;
    t.comments = common_header(
        "survival after T vs number of interruptions N",
        band ? "band-edge (gamma = 1 units)" : "photodetachment (A = 1 units)",
        (band ? "gamma=" + csv::format_double(cfg.model.gamma)
              : "beta=" + csv::format_double(cfg.model.width_beta)) +
            " delta=" + csv::format_double(cfg.model.detuning_delta) +
            " T=" + csv::format_double(cfg.T) +
            (cfg.literal_exponent ? " exponent=|alpha|^N" : " exponent=(|alpha|^2)^N"),
        "analytic");
    t.columns = {{"N", {}}, {"p", {}}};
    for (long n : Ns) {
        t.columns[0].values.push_back(double(n));
        t.columns[1].values.push_back(interrogated_survival(
            e, MeasurementSchedule(cfg.T, n), cfg.literal_exponent));
    }
    return t;
}

} // namespace qzeno::figures
