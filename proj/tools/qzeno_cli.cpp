// qzeno_cli.cpp — command-line front end
//
// Subcommands: fig1 fig2 fig3 trace sweep protocol selftest.
// Exit codes: 0 success, 1 validation failure (selftest), 2 config error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qzeno/csvio.hpp"
#include "qzeno/figures.hpp"
#include "qzeno/selftest.hpp"
#include "qzeno/version.hpp"

namespace {

struct CommonOpts {
    std::string model = "a";
    double beta = 1e6;
    double delta = 1.0;
    double gamma = 1.0;
    double tmax = 20.0;
    int points = 200;
    std::string method = "analytic";
    long N = 1;
    double T = 100.0;
    std::string out;
    bool literal_exponent = false;
    double seed_perturbation = 1e-9;
};

void add_model_flags(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--model", o.model, "continuum model: a (photodetachment) or b (band edge)")
        ->check(CLI::IsMember({"a", "b"}));
    cmd->add_option("--beta", o.beta, "continuum width beta/A (model a)");
    cmd->add_option("--delta", o.delta, "detuning in reduced units");
    cmd->add_option("--gamma", o.gamma, "band-edge rate scale (model b; reduced units)");
    cmd->add_option("--seed-perturbation", o.seed_perturbation,
                    "relative nudge applied to detunings that hit degenerate cubic roots");
}

qzeno::figures::RunConfig make_config(const CommonOpts& o)
{
    qzeno::figures::RunConfig cfg;
    if (o.model == "a")
        cfg.model = qzeno::SpectralModel::photodetachment(o.beta, o.delta);
    else
        cfg.model = qzeno::SpectralModel::band_edge(o.delta, o.gamma);
    cfg.t_max = o.tmax;
    cfg.points = o.points;
    cfg.T = o.T;
    cfg.N = o.N;
    cfg.literal_exponent = o.literal_exponent;
    cfg.perturbation = o.seed_perturbation;
    if (o.method == "analytic")
        cfg.method = qzeno::TraceMethod::Analytic;
    else if (o.method == "modes")
        cfg.method = qzeno::TraceMethod::Modes;
    else if (o.method == "volterra")
        cfg.method = qzeno::TraceMethod::Volterra;
    else if (o.method == "spectral")
        cfg.method = qzeno::TraceMethod::Spectral;
    else
        throw CLI::ValidationError("--method must be analytic|modes|volterra|spectral");
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string("qzeno ") + qzeno::kVersion +
                 " - near-threshold decay under repeated interrogation"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* fig1 = app.add_subcommand("fig1", "survival vs detuning after T=100 (beta/A=1e6)");
    fig1->add_option("--out", o.out, "output CSV path")->required();
    fig1->add_option("--seed-perturbation", o.seed_perturbation, "degenerate-point nudge");

    auto* fig2 = app.add_subcommand("fig2", "survival vs time at the shifted threshold");
    fig2->add_option("--out", o.out, "output CSV path")->required();

    auto* fig3 = app.add_subcommand("fig3", "band-edge survival for delta/gamma = -1, 0, +1");
    fig3->add_option("--out", o.out, "output CSV path")->required();

    auto* trace = app.add_subcommand("trace", "single survival trace by any method");
    add_model_flags(trace, o);
    trace->add_option("--tmax", o.tmax, "trace end time (reduced units)");
    trace->add_option("--points", o.points, "number of samples");
    trace->add_option("--method", o.method, "analytic|modes|volterra|spectral");
    trace->add_option("--out", o.out, "output CSV path")->required();

    auto* sweep = app.add_subcommand("sweep", "detuning sweep of p(T)");
    double dmin = 0.0, dmax = 2.0;
    add_model_flags(sweep, o);
    sweep->add_option("--dmin", dmin, "sweep start");
    sweep->add_option("--dmax", dmax, "sweep end");
    sweep->add_option("--points", o.points, "grid size");
    sweep->add_option("--T", o.T, "observation time");
    sweep->add_option("--N", o.N, "number of interruptions");
    sweep->add_flag("--literal-exponent", o.literal_exponent,
                    "use the |alpha|^N exponent variant");
    sweep->add_option("--out", o.out, "output CSV path")->required();

    auto* protocol = app.add_subcommand("protocol", "p(T) vs interruption count N");
    std::vector<long> n_values;
    add_model_flags(protocol, o);
    protocol->add_option("--T", o.T, "observation time");
    protocol->add_option("--N", n_values, "N values (repeatable)")->required();
    protocol->add_flag("--literal-exponent", o.literal_exponent,
                       "use the |alpha|^N exponent variant");
    protocol->add_option("--out", o.out, "output CSV path")->required();

    auto* selftest = app.add_subcommand("selftest", "run the full validation suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*fig1) {
            qzeno::csv::write(o.out, qzeno::figures::fig1(o.seed_perturbation));
        } else if (*fig2) {
            qzeno::csv::write(o.out, qzeno::figures::fig2());
        } else if (*fig3) {
            qzeno::csv::write(o.out, qzeno::figures::fig3());
        } else if (*trace) {
            qzeno::csv::write(o.out, qzeno::figures::trace_table(make_config(o)));
        } else if (*sweep) {
            auto cfg = make_config(o);
            cfg.delta_min = dmin;
            cfg.delta_max = dmax;
            qzeno::csv::write(o.out, qzeno::figures::sweep_table(cfg));
        } else if (*protocol) {
            auto cfg = make_config(o);
            cfg.n_values = n_values;
            qzeno::csv::write(o.out, qzeno::figures::protocol_table(cfg));
        } else if (*selftest) {
            const auto rep = qzeno::selftest::run_all();
            for (const auto& c : rep.checks)
                std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL",
                            c.name.c_str(), c.detail.c_str());
            std::printf("%s\n", rep.all_pass ? "selftest: all checks passed"
                                             : "selftest: FAILURES present");
            return rep.all_pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
