// cubic.cpp — closed-form cubic roots with compensated Newton polish
//
// Closed form: depressed cubic t^3 + p t + q via y = t - c2/3; three real
// roots by the trigonometric form, otherwise stable Cardano (largest-
// magnitude cube root first, companion root by p/(3u) to avoid
// cancellation). Each root is then polished by Newton steps in which P is
// evaluated with error-free transformations (two-product/two-sum via fma),
// so the reported residual reflects the root, not evaluation noise.

#include "qzeno/cubic.hpp"

#include <algorithm>
#include <cmath>

#include "dd.hpp"

namespace qzeno {

namespace {

using detail::DD;
using detail::dd_add;
using detail::dd_mul;

struct CDD {
    DD re, im;
};

CDD cdd(std::complex<double> z) { return CDD{DD{z.real(), 0.0}, DD{z.imag(), 0.0}}; }

CDD cdd_mul(CDD a, CDD b)
{
    DD rr = dd_add(dd_mul(a.re, b.re), dd_mul(DD{-a.im.hi, -a.im.lo}, b.im));
    DD ii = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return CDD{rr, ii};
}

CDD cdd_add_real(CDD a, double b)
{
    return CDD{dd_add(a.re, b), a.im};
}

} // namespace

std::complex<double> cubic_eval_accurate(const CubicPolynomial& p,
                                         std::complex<double> y)
{
    CDD z = cdd(y);
    CDD acc = cdd_add_real(z, p.c2);            // y + c2
    acc = cdd_add_real(cdd_mul(acc, z), p.c1);  // (y + c2) y + c1
    acc = cdd_add_real(cdd_mul(acc, z), p.c0);  // ((y + c2) y + c1) y + c0
    return {acc.re.hi + acc.re.lo, acc.im.hi + acc.im.lo};
}

namespace {

std::complex<double> polish(const CubicPolynomial& p, std::complex<double> y)
{
    for (int it = 0; it < 4; ++it) {
        const std::complex<double> P = cubic_eval_accurate(p, y);
        const std::complex<double> dP =
            (3.0 * y + 2.0 * p.c2) * y + p.c1;
        if (std::norm(dP) == 0.0)
            break;
        const std::complex<double> step = P / dP;
        y -= step;
        if (std::norm(step) <= 1e-60 * std::norm(y))
            break;
    }
    return y;
}

double polish_real(const CubicPolynomial& p, double y)
{
    for (int it = 0; it < 4; ++it) {
        const double P = cubic_eval_accurate(p, {y, 0.0}).real();
        const double dP = (3.0 * y + 2.0 * p.c2) * y + p.c1;
        if (dP == 0.0)
            break;
        const double step = P / dP;
        y -= step;
        if (std::abs(step) <= 1e-30 * std::abs(y))
            break;
    }
    return y;
}

} // namespace

RootTriple solve_cubic(const CubicPolynomial& c)
{
    RootTriple out;
    const double a = c.c2, b = c.c1, d = c.c0;
    const double aover3 = a / 3.0;
    const double p = b - a * aover3;                        // depressed: t^3 + p t + q
    const double q = d + aover3 * (2.0 * aover3 * aover3 - b);

    const double half_q = 0.5 * q;
    const double p3 = p / 3.0;
    const double disc = half_q * half_q + p3 * p3 * p3;     // >0: one real root

    if (disc > 0.0) {
        const double sd = std::sqrt(disc);
        // avoid cancellation: pick the larger-magnitude cube-root argument
        const double u = (half_q >= 0.0) ? -std::cbrt(half_q + sd)
                                         : std::cbrt(-half_q + sd);
        const double t1 = (u == 0.0) ? 0.0 : u - p3 / u;
        double r = polish_real(c, t1 - aover3);
        // deflate: y^2 + (c2 + r) y + (c1 + (c2 + r) r) = 0
        const double qb = c.c2 + r;
        const double qc = c.c1 + qb * r;
        const double qd = qb * qb - 4.0 * qc;
        std::complex<double> y2, y3;
        if (qd < 0.0) {
            const double re = -0.5 * qb;
            const double im = 0.5 * std::sqrt(-qd);
            std::complex<double> z = polish(c, {re, im});
            if (z.imag() < 0.0)
                z = std::conj(z);
            y2 = z;
            y3 = std::conj(z);
            out.classification = RootClass::OneRealConjugatePair;
        } else {
            const double s = (qb >= 0.0) ? -0.5 * (qb + std::sqrt(qd))
                                         : -0.5 * (qb - std::sqrt(qd));
            double r2 = polish_real(c, s);
            double r3 = polish_real(c, (s != 0.0) ? qc / s : -qb - s);
            y2 = r2;
            y3 = r3;
            out.classification = RootClass::ThreeReal;
        }
        out.roots = {std::complex<double>(r, 0.0), y2, y3};
    } else {
        // three real roots, trigonometric form
        out.classification = RootClass::ThreeReal;
        if (p == 0.0 && q == 0.0) {
            const double r = -aover3;
            out.roots = {std::complex<double>(r, 0.0),
                         std::complex<double>(r, 0.0),
                         std::complex<double>(r, 0.0)};
        } else {
            const double m = 2.0 * std::sqrt(-p3);
            const double cosarg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
            const double theta = std::acos(cosarg) / 3.0;
            const double twopi3 = 2.0943951023931954923; // 2 pi / 3
            std::array<double, 3> t = {m * std::cos(theta),
                                       m * std::cos(theta - twopi3),
                                       m * std::cos(theta + twopi3)};
            for (int i = 0; i < 3; ++i)
                out.roots[i] = polish_real(c, t[i] - aover3);
        }
    }

    double res = 0.0;
    for (const auto& y : out.roots)
        res = std::max(res, std::abs(cubic_eval_accurate(c, y)));
    out.residual = res;
    return out;
}

} // namespace qzeno
