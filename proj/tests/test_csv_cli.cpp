// CSV round trip, figure-table structure and determinism.

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "qzeno/csvio.hpp"
#include "qzeno/figures.hpp"
#include "qzeno/protocol.hpp"

using namespace qzeno;
namespace fs = std::filesystem;

namespace {
fs::path tmpfile(const char* name)
{
    return fs::temp_directory_path() / name;
}
} // namespace

TEST_CASE("CSV round trip is bit exact")
{
    csv::Table t;
    t.comments = {"demo", "version: x"};
    t.columns = {{"a", {0.1, 1.0 / 3.0, 1e-300, 7e255, -0.0}},
                 {"b", {std::nan(""), INFINITY, -INFINITY, 2.0, 3.0}}};
    const auto path = tmpfile("qzeno_roundtrip.csv");
    csv::write(path.string(), t);
    const csv::Table r = csv::read(path.string());
    fs::remove(path);

    REQUIRE(r.columns.size() == 2);
    CHECK(r.comments == t.comments);
    CHECK(r.columns[0].name == "a");
    for (std::size_t i = 0; i < 5; ++i) {
        const double x = t.columns[0].values[i];
        const double y = r.columns[0].values[i];
        CHECK(std::memcmp(&x, &y, sizeof x) == 0);
    }
    CHECK(std::isnan(r.columns[1].values[0]));
    CHECK(std::isinf(r.columns[1].values[1]));
}

TEST_CASE("fig3 table: structure, start at 1, trailer row")
{
    const csv::Table t = figures::fig3();
    REQUIRE(t.columns.size() == 4);
    CHECK(t.columns[0].name == "t");
    const std::size_t n = t.columns[0].values.size();
    REQUIRE(n == 601); // 600 samples + trailer
    for (int j = 1; j <= 3; ++j)
        CHECK(t.columns[j].values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isinf(t.columns[0].values[n - 1]));
    CHECK(t.columns[1].values[n - 1] == doctest::Approx(0.6773).epsilon(1e-3));
    CHECK(t.columns[2].values[n - 1] == doctest::Approx(0.4444).epsilon(1e-3));
    CHECK(t.columns[3].values[n - 1] == doctest::Approx(0.1509).epsilon(1e-3));
    // late-time p oscillates around the trailer value
    CHECK(t.columns[2].values[n - 2] ==
          doctest::Approx(t.columns[2].values[n - 1]).epsilon(0.1));
    // header records parameters and version
    bool has_version = false;
    for (const auto& c : t.comments)
        if (c.find("version:") != std::string::npos)
            has_version = true;
    CHECK(has_version);
}

TEST_CASE("fig2 table: thresholds curves and NaN beyond each pulse window")
{
    const csv::Table t = figures::fig2();
    REQUIRE(t.columns.size() == 4);
    const auto& tt = t.columns[0].values;
    const auto& p50 = t.columns[2].values;
    const auto& p200 = t.columns[3].values;
    for (std::size_t i = 0; i < tt.size(); ++i) {
        if (tt[i] > 1e5)
            CHECK(std::isnan(p200[i]));
        else
            CHECK(p200[i] >= 0.0);
        CHECK((std::isnan(p50[i]) == false)); // covers the full 2e5 grid
    }
    // interrupted endpoints sit far below the uninterrupted curve
    const double p_un_last = t.columns[1].values[tt.size() - 1];
    double last200 = 1.0;
    for (std::size_t i = 0; i < tt.size(); ++i)
        if (!std::isnan(p200[i]))
            last200 = p200[i];
    CHECK(p_un_last > 10.0 * last200);
}

TEST_CASE("fig1 table: anti-Zeno ordering at the shifted threshold column")
{
    const csv::Table t = figures::fig1();
    REQUIRE(t.columns.size() == 8);
    const auto& deltas = t.columns[0].values;
    REQUIRE(deltas.size() == 401);
    // locate delta = 1
    std::size_t i1 = 0;
    for (std::size_t i = 0; i < deltas.size(); ++i)
        if (std::abs(deltas[i] - 1.0) < 1e-9)
            i1 = i;
    double prev = 2.0;
    for (std::size_t j = 1; j < t.columns.size(); ++j) {
        const double p = t.columns[j].values[i1];
        CHECK(p < prev);
        prev = p;
    }
    // p_uninterrupted column equals the N=1 survival at every 50th point
    for (std::size_t i = 0; i < deltas.size(); i += 50) {
        const auto e = figures::expansion_with_perturbation(
            SpectralModel::photodetachment(1e6, deltas[i]), 1e-9);
        CHECK(t.columns[1].values[i] ==
              doctest::Approx(std::norm(alpha_analytic(e, 100.0))).epsilon(1e-9));
    }
}

TEST_CASE("figure tables are deterministic across rebuilds")
{
    const auto a = figures::fig3();
    const auto b = figures::fig3();
    for (std::size_t j = 0; j < a.columns.size(); ++j)
        for (std::size_t i = 0; i < a.columns[j].values.size(); ++i) {
            const double x = a.columns[j].values[i];
            const double y = b.columns[j].values[i];
            CHECK(std::memcmp(&x, &y, sizeof x) == 0);
        }
}

TEST_CASE("sweep rejects an empty grid")
{
    figures::RunConfig cfg;
    cfg.points = 0;
    CHECK_THROWS_AS(figures::sweep_table(cfg), std::invalid_argument);
}

TEST_CASE("trace by volterra matches trace by analytic at moderate parameters")
{
    figures::RunConfig cfg;
    cfg.model = SpectralModel::photodetachment(10.0, 0.5);
    cfg.t_max = 10.0;
    cfg.points = 21;
    cfg.method = TraceMethod::Analytic;
    const auto ta = figures::trace_table(cfg);
    cfg.method = TraceMethod::Volterra;
    const auto tv = figures::trace_table(cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < ta.columns[0].values.size(); ++i) {
        const Complex a(ta.columns[1].values[i], ta.columns[2].values[i]);
        const Complex v(tv.columns[1].values[i], tv.columns[2].values[i]);
        worst = std::max(worst, std::abs(a - v));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("protocol table reproduces zeno_scan")
{
    figures::RunConfig cfg;
    cfg.model = SpectralModel::band_edge(0.0);
    cfg.T = 100.0;
    cfg.n_values = {1, 2, 5, 10, 20, 50, 100};
    const auto t = figures::protocol_table(cfg);
    const auto e = build_expansion(cfg.model);
    const auto scan = zeno_scan(e, 100.0, cfg.n_values);
    for (std::size_t i = 0; i < scan.size(); ++i) {
        CHECK(t.columns[0].values[i] == double(scan[i].first));
        CHECK(t.columns[1].values[i] ==
              doctest::Approx(scan[i].second).epsilon(1e-12));
    }
}
