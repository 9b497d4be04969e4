// Spectral model: coupling densities, closed-form resolvent vs adaptive
// quadrature, threshold shift, characteristic cubic, memory kernel, poles.

#include "doctest.h"

#include <cmath>
#include <random>

#include "qzeno/quadrature.hpp"
#include "qzeno/spectral_model.hpp"

using namespace qzeno;

namespace {

// quadrature of int J(w)/(z + i w) dw with u = sqrt(w) substitution and an
// asymptotic tail correction
Complex resolvent_integral_quad(const SpectralModel& m, Complex z)
{
    const double U = 1e4;
    quad::Options opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-12;
    opts.max_panels = 60000;
    auto f = [&](double u) {
        const double w = u * u;
        if (w == 0.0)
            return Complex(0.0, 0.0);
        return coupling_density(m, w) * 2.0 * u / (z + Complex(0.0, 1.0) * w);
    };
    const Complex body = quad::integrate(f, 0.0, U, opts).value;
    // tail: J ~ (A/pi) sqrt(beta/w) resp. gamma^{3/2}/(pi sqrt w);
    // 1/(z+iw) = -i/w (1 - z/(iw) + ...)
    Complex tail;
    const Complex i(0.0, 1.0);
    if (m.kind == ModelKind::Photodetachment) {
        const double c = 2.0 * m.rate_A * std::sqrt(m.width_beta) / M_PI;
        tail = (c / i) * (1.0 / U - (m.width_beta - i * z) / (3.0 * U * U * U));
    } else {
        const double c = 2.0 * std::pow(m.gamma, 1.5) / M_PI;
        tail = (c / i) * (1.0 / U + i * z / (3.0 * U * U * U));
    }
    return body + tail;
}

} // namespace

TEST_CASE("coupling density values")
{
    const auto pd = SpectralModel::photodetachment(1.0, 0.0);
    CHECK(coupling_density(pd, 1.0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
    CHECK(coupling_density(pd, 0.0) == 0.0);
    // large-w falloff ~ (A/pi) sqrt(beta/w)
    const double w = 1e8;
    CHECK(coupling_density(pd, w) ==
          doctest::Approx((1.0 / M_PI) * std::sqrt(1.0 / w)).epsilon(1e-7));

    const auto be = SpectralModel::band_edge(0.0);
    CHECK(coupling_density(be, 4.0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(coupling_density(be, 0.0), std::domain_error);
    CHECK_THROWS_AS(coupling_density(pd, -1.0), std::domain_error);
}

TEST_CASE("closed-form resolvent matches quadrature of the coupling integral")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const double beta = std::pow(10.0, -1.0 + 3.0 * ud(rng));
        const double delta = -2.0 + 4.0 * ud(rng);
        const SpectralModel models[2] = {SpectralModel::photodetachment(beta, delta),
                                         SpectralModel::band_edge(delta)};
        for (const auto& m : models) {
            for (int k = 0; k < 5; ++k) {
                // right half plane points, away from the cut
                const Complex z = std::polar(0.3 + 5.0 * ud(rng),
                                             -1.4 + 2.8 * ud(rng));
                const Complex closed =
                    resolvent(m, z) - z - Complex(0.0, m.detuning_delta);
                const Complex quadv = resolvent_integral_quad(m, z);
                worst = std::max(worst,
                                 std::abs(closed - quadv) / std::abs(closed));
            }
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("resolvent examples and asymptotics")
{
    // band-edge bound condition H(i) = 0 at gamma=1, delta=0
    const auto be = SpectralModel::band_edge(0.0);
    CHECK(std::abs(resolvent(be, Complex(0.0, 1.0))) < 1e-14);

    // H(z) -> z in the right half plane
    const auto pd = SpectralModel::photodetachment(10.0, 0.5);
    const Complex big(1e9, 2e8);
    CHECK(std::abs(resolvent(pd, big) - big) / std::abs(big) < 1e-7);

    // explicit quadrature example from the right half plane
    const Complex z(1.0, 0.5);
    const Complex closed = resolvent(pd, z) - z - Complex(0.0, 0.5);
    CHECK(std::abs(closed - resolvent_integral_quad(pd, z)) / std::abs(closed) <=
          1e-8);
}

TEST_CASE("resolvent on the cut requires a side and the sides differ")
{
    const auto pd = SpectralModel::photodetachment(10.0, 0.5);
    const Complex zcut(0.0, -2.0);
    CHECK_THROWS_AS(resolvent(pd, zcut), std::domain_error);
    const Complex hr = resolvent(pd, zcut, CutSide::Right);
    const Complex hl = resolvent(pd, zcut, CutSide::Left);
    CHECK(std::abs(hr - hl) > 1e-3);
    // H_left = -conj(H_right) on the cut
    CHECK(std::abs(hl + std::conj(hr)) < 1e-13);
    // approaching from the right half plane converges to the Right limit
    CHECK(std::abs(resolvent(pd, Complex(1e-9, -2.0)) - hr) < 1e-8);
}

TEST_CASE("threshold shift")
{
    CHECK(threshold_shift(SpectralModel::photodetachment(1e6, 0.0)) == 1.0);
    CHECK(threshold_shift(SpectralModel::photodetachment(7.0, 0.3, 2.5)) == 2.5);
    CHECK(std::isinf(threshold_shift(SpectralModel::band_edge(0.0))));

    // beta-independence, and agreement with quadrature of int J/w dw
    for (double beta : {1e-2, 1.0, 1e6}) {
        const auto m = SpectralModel::photodetachment(beta, 0.0);
        CHECK(threshold_shift(m) == 1.0);
        quad::Options opts;
        opts.abs_tol = 1e-11;
        opts.max_panels = 40000;
        auto f = [&](double u) {
            if (u == 0.0)
                return 0.0;
            return coupling_density(m, u * u) * 2.0 / u;
        };
        const double U = 1e5 * std::sqrt(std::max(1.0, beta));
        const double body = quad::integrate_real(f, 0.0, U, opts);
        const double tail = (2.0 / M_PI) * std::sqrt(beta) / U; // leading term
        CHECK(body + tail == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("characteristic cubic coefficients")
{
    const auto c1 = characteristic_cubic(SpectralModel::photodetachment(4.0, 0.5));
    CHECK(c1.c2 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c1.c1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c1.c0 == doctest::Approx(-1.0).epsilon(1e-15));

    const auto c2 = characteristic_cubic(SpectralModel::band_edge(0.0));
    CHECK(c2.c2 == 0.0);
    CHECK(c2.c1 == 0.0);
    CHECK(c2.c0 == doctest::Approx(-1.0).epsilon(1e-15));

    const auto c3 = characteristic_cubic(SpectralModel::band_edge(1.0, 4.0));
    CHECK(c3.c1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c3.c0 == doctest::Approx(-8.0).epsilon(1e-13));
}

TEST_CASE("memory kernel: closed form, quadrature, and Laplace consistency")
{
    // band edge at tau = pi: e^{-i pi/4}/pi
    const auto be = SpectralModel::band_edge(0.0);
    const Complex k = memory_kernel(be, M_PI);
    CHECK(k.real() == doctest::Approx(std::sqrt(0.5) / M_PI).epsilon(1e-12));
    CHECK(k.imag() == doctest::Approx(-std::sqrt(0.5) / M_PI).epsilon(1e-12));

    // quadrature cross-check of K(tau) = int J e^{-i w tau} dw (u = sqrt w,
    // Gaussian regulator removed by Richardson in the regulator)
    // done via the Laplace identity instead: L[K](z) = H(z) - z - i Delta
    for (const auto& m : {SpectralModel::band_edge(0.7),
                          SpectralModel::photodetachment(10.0, 0.5)}) {
        const Complex z(1.0, 0.0);
        quad::Options opts;
        opts.abs_tol = 1e-10;
        opts.max_panels = 60000;
        auto f = [&](double x) {
            const double tau = x * x;
            if (tau == 0.0)
                return Complex(0.0, 0.0);
            return memory_kernel(m, tau) * std::exp(-z * tau) * (2.0 * x);
        };
        const Complex lap = quad::integrate(f, 0.0, 8.0, opts).value;
        const Complex target =
            resolvent(m, z) - z - Complex(0.0, m.detuning_delta);
        CHECK(std::abs(lap - target) <= 1e-6);
    }

    // photodetachment small-tau divergence ~ tau^{-1/2}
    const auto pd = SpectralModel::photodetachment(10.0, 0.5);
    const double r = std::abs(memory_kernel(pd, 1e-12)) /
                     (std::sqrt(10.0) / std::sqrt(M_PI * 1e-12));
    CHECK(r == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS_AS(memory_kernel(pd, 0.0), std::domain_error);
}

TEST_CASE("pole finding: bound pole location and classes")
{
    // band edge: bound pole at z = i for gamma=1, delta=0
    const PoleSet ps = find_poles(SpectralModel::band_edge(0.0));
    int bound = 0;
    for (const auto& p : ps.poles)
        if (p.cls == PoleClass::Bound) {
            ++bound;
            CHECK(std::abs(p.location - Complex(0.0, 1.0)) < 1e-12);
            CHECK(std::abs(p.residue - Complex(2.0 / 3.0, 0.0)) < 1e-12);
        }
    CHECK(bound == 1);

    // photodetachment below threshold: exactly one bound pole
    const PoleSet ps2 = find_poles(SpectralModel::photodetachment(10.0, 0.5));
    int b2 = 0, ww2 = 0;
    for (const auto& p : ps2.poles) {
        if (p.cls == PoleClass::Bound) {
            ++b2;
            CHECK(p.location.real() == 0.0);
            CHECK(p.location.imag() > 0.0);
            CHECK(std::abs(resolvent(SpectralModel::photodetachment(10.0, 0.5),
                                     p.location)) < 1e-10);
        } else {
            ++ww2;
        }
    }
    CHECK(b2 == 1);

    // above threshold: no bound pole, one Wigner-Weisskopf resonance with
    // Re z < 0, a zero of the second-sheet continuation
    const auto m3 = SpectralModel::photodetachment(10.0, 3.0);
    const PoleSet ps3 = find_poles(m3);
    int b3 = 0, ww3 = 0;
    for (const auto& p : ps3.poles) {
        if (p.cls == PoleClass::Bound) {
            ++b3;
        } else {
            ++ww3;
            CHECK(p.location.real() < 0.0);
            CHECK(std::abs(resolvent_second_sheet(m3, p.location)) < 1e-10);
        }
    }
    CHECK(b3 == 0);
    CHECK(ww3 == 1);
}

TEST_CASE("bound pole exists iff below the shifted threshold (model a)")
{
    for (double delta = 0.05; delta < 2.0; delta += 0.1) {
        const auto m = SpectralModel::photodetachment(10.0, delta);
        int bound = 0;
        for (const auto& p : find_poles(m).poles)
            if (p.cls == PoleClass::Bound)
                ++bound;
        if (delta < 1.0 - 1e-3)
            CHECK(bound == 1);
        if (delta > 1.0 + 1e-3)
            CHECK(bound == 0);
    }
    // band edge: bound pole for every detuning
    for (double delta = -10.0; delta <= 10.0; delta += 1.0) {
        int bound = 0;
        for (const auto& p : find_poles(SpectralModel::band_edge(delta)).poles)
            if (p.cls == PoleClass::Bound)
                ++bound;
        CHECK(bound == 1);
    }
}

TEST_CASE("bound pole consistency with the characteristic cubic")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double beta = std::pow(10.0, -1.0 + 4.0 * ud(rng));
        const double delta = 2.0 * ud(rng) - 1.0; // mostly below threshold
        const auto m = SpectralModel::photodetachment(beta, delta);
        for (const auto& p : find_poles(m).poles) {
            if (p.cls != PoleClass::Bound)
                continue;
            const double Y = std::sqrt(p.location.imag());
            CHECK(std::abs(cubic_eval_accurate(characteristic_cubic(m),
                                               {Y, 0.0})) <= 1e-8);
        }
    }
}
