// Cubic solver: known roots, classification, residual/Vieta bounds.

#include "doctest.h"

#include <cmath>
#include <random>

#include "qzeno/cubic.hpp"

using qzeno::CubicPolynomial;
using qzeno::RootClass;
using qzeno::RootTriple;
using qzeno::solve_cubic;

namespace {
bool contains_root(const RootTriple& rt, std::complex<double> y, double tol)
{
    for (const auto& r : rt.roots)
        if (std::abs(r - y) <= tol)
            return true;
    return false;
}
} // namespace

TEST_CASE("unit cube roots of y^3 - 1")
{
    const RootTriple rt = solve_cubic({0.0, 0.0, -1.0});
    CHECK(rt.classification == RootClass::OneRealConjugatePair);
    CHECK(contains_root(rt, {1.0, 0.0}, 1e-14));
    CHECK(contains_root(rt, std::polar(1.0, 2.0 * M_PI / 3.0), 1e-14));
    CHECK(contains_root(rt, std::polar(1.0, -2.0 * M_PI / 3.0), 1e-14));
}

TEST_CASE("real roots of y^3 - y - 1 and y^3 + y - 1")
{
    CHECK(contains_root(solve_cubic({0.0, -1.0, -1.0}),
                        {1.3247179572447460260, 0.0}, 1e-13));
    CHECK(contains_root(solve_cubic({0.0, 1.0, -1.0}),
                        {0.68232780382801932737, 0.0}, 1e-13));
}

TEST_CASE("three real roots, trigonometric branch")
{
    // (y-1)(y-2)(y-3) = y^3 - 6y^2 + 11y - 6
    const RootTriple rt = solve_cubic({-6.0, 11.0, -6.0});
    CHECK(rt.classification == RootClass::ThreeReal);
    CHECK(contains_root(rt, {1.0, 0.0}, 1e-12));
    CHECK(contains_root(rt, {2.0, 0.0}, 1e-12));
    CHECK(contains_root(rt, {3.0, 0.0}, 1e-12));
}

TEST_CASE("conjugate pair is exactly conjugate")
{
    const RootTriple rt = solve_cubic({0.3, 2.0, 5.0});
    REQUIRE(rt.classification == RootClass::OneRealConjugatePair);
    std::complex<double> a, b;
    int found = 0;
    for (const auto& r : rt.roots)
        if (r.imag() != 0.0) {
            (found == 0 ? a : b) = r;
            ++found;
        }
    REQUIRE(found == 2);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == -b.imag());
}

TEST_CASE("triple root")
{
    const RootTriple rt = solve_cubic({-3.0, 3.0, -1.0}); // (y-1)^3
    for (const auto& r : rt.roots) {
        CHECK(r.real() == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(std::abs(r.imag()) < 1e-5);
    }
}

TEST_CASE("residual and Vieta bounds over random coefficients")
{
    std::mt19937_64 rng(1357);
    std::uniform_real_distribution<double> ud(-1e3, 1e3);
    for (int i = 0; i < 10000; ++i) {
        const CubicPolynomial p{ud(rng), ud(rng), ud(rng)};
        const RootTriple rt = solve_cubic(p);
        const double bound = 1e-10 * std::max({1.0, std::abs(p.c0),
                                               std::abs(p.c1), std::abs(p.c2)});
        CHECK(rt.residual <= bound);
        const auto sum = rt.roots[0] + rt.roots[1] + rt.roots[2];
        const auto prod = rt.roots[0] * rt.roots[1] * rt.roots[2];
        CHECK(std::abs(sum + p.c2) <=
              1e-10 * std::max({1.0, std::abs(p.c2), std::abs(sum)}));
        CHECK(std::abs(prod + p.c0) <=
              1e-10 * std::max({1.0, std::abs(p.c0), std::abs(prod)}));
    }
}
