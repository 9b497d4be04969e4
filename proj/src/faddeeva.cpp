// faddeeva.cpp — Faddeeva function and complex error functions
//
// Three evaluation regions for Im z >= 0 (Im z < 0 goes through the
// reflection w(z) = 2 exp(-z^2) - w(-z)):
//
//   |z| <= 2.5   Maclaurin series  w(z) = sum_n (iz)^n / Gamma(n/2 + 1)
//
//   2.5 < |z| < 12   sampling identity on the offset lattice
//                    t_n = (n + 1/2) h:
//
//       w(z) = (i h / pi) sum_n exp(-t_n^2)/(z - t_n)
//              + 2 exp(2 pi i z/h - z^2) / (1 + exp(2 pi i z/h))
//
//     The identity follows from Poisson summation applied to the integral
//     representation w(z) = (i/pi) int exp(-t^2)/(z - t) dt; the second
//     term collects the alias images and carries the exp(-z^2) part on the
//     real axis. Remaining alias terms are O(exp(-(pi/h)^2)) ~ 2e-27 at
//     h = 0.4. The correction pole at a node cancels the node term of the
//     sum exactly; near a node both are combined analytically.
//
//   |z| >= 12   Laplace continued fraction
//       w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
//     evaluated by the modified Lentz algorithm.

#include "qzeno/faddeeva.hpp"

#include <cmath>
#include <limits>

#include "dd.hpp"

namespace qzeno::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrtPi = 0.56418958354775628695; // 1/sqrt(pi)

// exp(-z^2) with the phase 2xy formed by error-free products and reduced
// mod 2pi in double-double, so the result keeps full relative accuracy up
// to |z| ~ 1e6 (plain z*z loses the phase to rounding once |2xy| >> 1).
Complex exp_minus_zsq(Complex z)
{
    using detail::DD;
    const double x = z.real(), y = z.imag();
    const DD re = detail::dd_sub(detail::two_prod(x, x), detail::two_prod(y, y));
    DD im = detail::two_prod(2.0 * x, y);
    static const DD kTwoPi{6.283185307179586477, 2.4492935982947064e-16};
    const double n = std::nearbyint(im.hi / kTwoPi.hi);
    im = detail::dd_sub(im, detail::dd_mul(kTwoPi, n));
    const double mag = std::exp(-re.hi) * std::exp(-re.lo);
    const double phase = -(im.hi + im.lo);
    return Complex(mag * std::cos(phase), mag * std::sin(phase));
}

// ---- Maclaurin series -----------------------------------------------------

Complex w_series(Complex z)
{
    const Complex iz(-z.imag(), z.real());
    const Complex iz2 = iz * iz;
    Complex even(1.0, 0.0);            // (iz)^{2k} / k!
    Complex odd = 2.0 * kInvSqrtPi * iz; // (iz)^{2k+1} / Gamma(k + 3/2)
    Complex sum = even + odd;
    for (int k = 0; k < 80; ++k) {
        even *= iz2 / double(k + 1);
        odd *= iz2 / (double(k) + 1.5);
        const Complex delta = even + odd;
        sum += delta;
        if (std::norm(delta) < 1e-36 * std::norm(sum))
            break;
    }
    return sum;
}

// ---- lattice sampling identity --------------------------------------------

constexpr double kH = kLatticeStep;  // 0.4
constexpr double kTwoPiOverH = 2.0 * kPi / kH;
constexpr int kNodeMax = 18;         // nodes (n+1/2)h for n in [-19, 18], |t| <= 7.4

// phi(u) = (e^u - 1)/u
Complex phi_expm1_over(Complex u)
{
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int m = 1; m < 40; ++m) {
        term *= u / double(m + 1);
        sum += term;
        if (std::norm(term) < 1e-36 * std::norm(sum))
            break;
    }
    return sum;
}

// psi(delta)/delta with psi = phi(2 pi i delta/h) - exp(delta q),
// as a power series in delta.
Complex psi_over_delta(Complex delta, Complex q)
{
    const Complex c(0.0, kTwoPiOverH);
    Complex cpow = c;       // c^m
    Complex qpow = q;       // q^m
    double inv_fact = 1.0;  // 1/m!
    Complex sum(0.0, 0.0);
    Complex dpow(1.0, 0.0); // delta^{m-1}
    for (int m = 1; m < 48; ++m) {
        const Complex am = cpow * (inv_fact / double(m + 1)) - qpow * inv_fact;
        const Complex delta_term = dpow * am;
        sum += delta_term;
        if (m > 2 && std::norm(delta_term) < 1e-36 * std::norm(sum))
            break;
        dpow *= delta;
        cpow *= c;
        qpow *= q;
        inv_fact /= double(m + 1);
    }
    return sum;
}

Complex w_lattice(Complex z)
{
    const double x = z.real();

    // nearest node index (node_k = (k + 1/2) h)
    const int k = int(std::floor(x / kH));
    const double tk = (double(k) + 0.5) * kH;
    const bool near_node =
        std::abs(z.imag()) < 0.1 * kH && std::abs(x - tk) < 0.1 * kH &&
        k >= -kNodeMax - 1 && k <= kNodeMax;

    Complex sum(0.0, 0.0);
    for (int n = -kNodeMax - 1; n <= kNodeMax; ++n) {
        if (near_node && n == k)
            continue;
        const double t = (double(n) + 0.5) * kH;
        sum += std::exp(-t * t) / (z - t);
    }
    const Complex ihpi(0.0, kH / kPi);
    Complex w = ihpi * sum;

    const Complex zz = z * z;
    if (near_node) {
        const Complex delta = z - tk;
        const Complex q = Complex(0.0, kTwoPiOverH) - (z + tk);
        const Complex u = Complex(0.0, kTwoPiOverH) * delta;
        const Complex reg =
            ihpi * std::exp(-tk * tk) * psi_over_delta(delta, q) / phi_expm1_over(u);
        w += reg;
    } else {
        const Complex arg = Complex(0.0, kTwoPiOverH) * z - zz;
        const Complex E = std::exp(Complex(0.0, kTwoPiOverH) * z);
        w += 2.0 * std::exp(arg) / (1.0 + E);
    }
    return w;
}

// ---- Laplace continued fraction -------------------------------------------

Complex w_contfrac(Complex z)
{
    const double tiny = 1e-280;
    Complex f = z;
    if (std::norm(f) == 0.0)
        f = tiny;
    Complex C = f;
    Complex D(0.0, 0.0);
    for (int j = 1; j <= 96; ++j) {
        const double a = -0.5 * double(j);
        D = z + a * D;
        if (std::norm(D) == 0.0)
            D = tiny;
        C = z + a / C;
        if (std::norm(C) == 0.0)
            C = tiny;
        D = 1.0 / D;
        const Complex delta = C * D;
        f *= delta;
        if (std::norm(delta - 1.0) < 1e-32)
            break;
    }
    return Complex(0.0, kInvSqrtPi) / f;
}

Complex w_upper(Complex z)
{
    // canonicalize to Re z >= 0 so w(-conj z) = conj w(z) holds exactly
    if (z.real() < 0.0)
        return std::conj(w_upper(Complex(-z.real(), z.imag())));
    const double r2 = std::norm(z);
    if (r2 <= kSeriesRadius * kSeriesRadius)
        return w_series(z);
    if (r2 < kLatticeRadius * kLatticeRadius)
        return w_lattice(z);
    return w_contfrac(z);
}

} // namespace

Complex faddeeva_w(Complex z)
{
    if (z.imag() >= 0.0)
        return w_upper(z);
    // w(z) = 2 exp(-z^2) - w(-z); may overflow, which is the true growth of w
    return 2.0 * exp_minus_zsq(z) - w_upper(-z);
}

Complex erfcx_c(Complex z)
{
    return faddeeva_w(Complex(-z.imag(), z.real()));
}

double erfcx(double x)
{
    if (x >= 0.0)
        return faddeeva_w(Complex(0.0, x)).real();
    return 2.0 * std::exp(x * x) - faddeeva_w(Complex(0.0, -x)).real();
}

Complex erfc_c(Complex z)
{
    if (z.real() >= 0.0)
        return exp_minus_zsq(z) * erfcx_c(z);
    return 2.0 - exp_minus_zsq(z) * erfcx_c(-z);
}

} // namespace qzeno::sf
