// spectral_model.cpp

#include "qzeno/spectral_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qzeno/faddeeva.hpp"

namespace qzeno {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kExpMinusIPi4 = Complex(std::sqrt(0.5), -std::sqrt(0.5));

void check_valid(const SpectralModel& m)
{
    if (m.kind == ModelKind::Photodetachment) {
        if (!(m.rate_A > 0.0) || !(m.width_beta > 0.0))
            throw std::domain_error("SpectralModel: rate_A and width_beta must be > 0");
    } else {
        if (!(m.gamma > 0.0))
            throw std::domain_error("SpectralModel: gamma must be > 0");
    }
    if (!std::isfinite(m.detuning_delta))
        throw std::domain_error("SpectralModel: detuning must be finite");
}

double gamma32(const SpectralModel& m)
{
    return std::pow(m.gamma, 1.5);
}

// principal sqrt(-iz), optionally as a one-sided limit on the cut
Complex sqrt_minus_iz(Complex z, CutSide side)
{
    if (z.real() == 0.0 && z.imag() < 0.0) {
        const double r = std::sqrt(-z.imag());
        switch (side) {
        case CutSide::Right:
            return Complex(0.0, -r);
        case CutSide::Left:
            return Complex(0.0, r);
        case CutSide::None:
            throw std::domain_error(
                "resolvent: z on the continuum cut; supply a CutSide");
        }
    }
    return std::sqrt(Complex(z.imag(), -z.real())); // -i z = y - i x
}

Complex resolvent_from_s(const SpectralModel& m, Complex z, Complex s)
{
    const Complex idelta(0.0, m.detuning_delta);
    if (m.kind == ModelKind::Photodetachment) {
        const double sb = std::sqrt(m.width_beta);
        return z + idelta - Complex(0.0, 1.0) * (m.rate_A * sb) / (sb + s);
    }
    return z + idelta - Complex(0.0, 1.0) * gamma32(m) / s;
}

Complex resolvent_derivative_from_s(const SpectralModel& m, Complex s)
{
    // ds/dz = -i/(2s)
    if (m.kind == ModelKind::Photodetachment) {
        const double sb = std::sqrt(m.width_beta);
        const Complex d = sb + s;
        return 1.0 + (m.rate_A * sb) / (2.0 * s * d * d);
    }
    const double g32 = gamma32(m);
    return 1.0 + g32 / (2.0 * s * s * s);
}

} // namespace

SpectralModel SpectralModel::photodetachment(double beta, double delta, double A)
{
    SpectralModel m;
    m.kind = ModelKind::Photodetachment;
    m.rate_A = A;
    m.width_beta = beta;
    m.detuning_delta = delta;
    check_valid(m);
    return m;
}

SpectralModel SpectralModel::band_edge(double delta, double gamma)
{
    SpectralModel m;
    m.kind = ModelKind::BandEdge;
    m.gamma = gamma;
    m.detuning_delta = delta;
    check_valid(m);
    return m;
}

double coupling_density(const SpectralModel& m, double omega)
{
    check_valid(m);
    if (omega < 0.0)
        throw std::domain_error("coupling_density: omega must be >= 0");
    if (m.kind == ModelKind::Photodetachment) {
        if (omega == 0.0)
            return 0.0;
        return (m.rate_A / kPi) * std::sqrt(m.width_beta * omega) /
               (omega + m.width_beta);
    }
    if (omega == 0.0)
        throw std::domain_error("coupling_density: BandEdge density diverges at omega = 0");
    return gamma32(m) / (kPi * std::sqrt(omega));
}

Complex resolvent(const SpectralModel& m, Complex z, CutSide side)
{
    check_valid(m);
    return resolvent_from_s(m, z, sqrt_minus_iz(z, side));
}

Complex resolvent_second_sheet(const SpectralModel& m, Complex z)
{
    check_valid(m);
    return resolvent_from_s(m, z, -sqrt_minus_iz(z, CutSide::None));
}

Complex resolvent_derivative(const SpectralModel& m, Complex z, bool second_sheet)
{
    check_valid(m);
    Complex s = sqrt_minus_iz(z, CutSide::None);
    if (second_sheet)
        s = -s;
    return resolvent_derivative_from_s(m, s);
}

double threshold_shift(const SpectralModel& m)
{
    check_valid(m);
    if (m.kind == ModelKind::Photodetachment)
        return m.rate_A;
    return std::numeric_limits<double>::infinity();
}

CubicPolynomial characteristic_cubic(const SpectralModel& m)
{
    check_valid(m);
    if (m.kind == ModelKind::Photodetachment) {
        const double sb = std::sqrt(m.width_beta);
        return CubicPolynomial{sb, m.detuning_delta,
                               sb * (m.detuning_delta - m.rate_A)};
    }
    return CubicPolynomial{0.0, m.detuning_delta, -gamma32(m)};
}

Complex memory_kernel(const SpectralModel& m, double tau)
{
    check_valid(m);
    if (!(tau > 0.0))
        throw std::domain_error("memory_kernel: tau must be > 0");
    const double inv_sqrt_pitau = 1.0 / std::sqrt(kPi * tau);
    if (m.kind == ModelKind::BandEdge)
        return gamma32(m) * kExpMinusIPi4 * inv_sqrt_pitau;
    const double sb = std::sqrt(m.width_beta);
    const double bt = m.width_beta * tau;
    // sqrt(i beta tau) = exp(i pi/4) sqrt(beta tau)
    const Complex arg = std::sqrt(bt) * Complex(std::sqrt(0.5), std::sqrt(0.5));
    return m.rate_A * sb * kExpMinusIPi4 * inv_sqrt_pitau -
           m.rate_A * m.width_beta * sf::erfcx_c(arg);
}

PoleSet find_poles(const SpectralModel& m)
{
    check_valid(m);
    PoleSet out;
    const RootTriple roots = solve_cubic(characteristic_cubic(m));
    const double scale = std::abs(roots.roots[0]) + std::abs(roots.roots[1]) +
                         std::abs(roots.roots[2]) + 1.0;

    for (const auto& y : roots.roots) {
        const double re = y.real(), im = y.imag();
        if (std::abs(y) < 1e-12 * scale)
            continue; // root at the branch point (threshold)

        const bool bound_candidate = re > 1e-12 * scale && std::abs(im) < 1e-12 * scale;
        const bool resonance = re < 0.0 && im < -1e-12 * scale; // third quadrant
        if (!bound_candidate && !resonance)
            continue; // on-cut virtual states and anti-resonances

        Complex z = Complex(0.0, 1.0) * y * y;
        const bool second_sheet = resonance;
        // Newton refinement on the closed-form resolvent of the proper sheet
        for (int it = 0; it < 8; ++it) {
            const Complex H = second_sheet ? resolvent_second_sheet(m, z)
                                           : resolvent(m, z);
            const Complex dH = resolvent_derivative(m, z, second_sheet);
            const Complex step = H / dH;
            z -= step;
            if (std::norm(step) < 1e-60 * std::norm(z))
                break;
        }

        Pole p;
        if (bound_candidate) {
            z = Complex(0.0, z.imag()); // purely imaginary by construction
            p.cls = PoleClass::Bound;
        } else {
            if (z.real() >= 0.0)
                continue;
            p.cls = PoleClass::WignerWeisskopf;
        }
        p.location = z;
        p.residue = 1.0 / resolvent_derivative(m, z, second_sheet);
        out.poles.push_back(p);
    }
    return out;
}

} // namespace qzeno
