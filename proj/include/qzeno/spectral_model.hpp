// spectral_model.hpp — continuum coupling models, resolvent, memory kernel
//
// Two single-excitation decay models, in reduced units:
//
//   Photodetachment:  J(w) = (A/pi) sqrt(beta w)/(w + beta),  w >= 0
//   BandEdge:         J(w) = gamma^{3/2} / (pi sqrt(w)),      w > 0
//
// The survival amplitude is the inverse Laplace transform of 1/H(z) with
//
//   H(z) = z + i Delta + int_0^inf J(w)/(z + i w) dw
//
// which closes to
//
//   Photodetachment:  H(z) = z + i Delta - i A sqrt(beta)/(sqrt(beta) + s)
//   BandEdge:         H(z) = z + i Delta - i gamma^{3/2} / s
//
// with s = sqrt(-iz) (principal root). The continuum cut therefore lies on
// the negative imaginary z-axis. The substitution z = i y^2 turns H = 0
// into a real monic cubic:
//
//   Photodetachment:  y^3 + sqrt(beta) y^2 + Delta y + sqrt(beta)(Delta - A)
//   BandEdge:         y^3 + Delta y - gamma^{3/2}
//
// Cubic roots with Re y > 0 are principal-sheet (bound) zeros z = i y^2;
// roots in the third quadrant give zeros of the continuation of H through
// the cut (Wigner-Weisskopf resonances with Re z < 0).

#pragma once

#include <complex>
#include <vector>

#include "qzeno/cubic.hpp"

namespace qzeno {

using Complex = std::complex<double>;

enum class ModelKind { Photodetachment, BandEdge };

struct SpectralModel {
    ModelKind kind = ModelKind::Photodetachment;
    double rate_A = 1.0;        // golden-rule rate far above threshold (units: 1)
    double width_beta = 1.0;    // continuum width, units of A
    double gamma = 1.0;         // band-edge rate scale (units: 1)
    double detuning_delta = 0.0;

    static SpectralModel photodetachment(double beta, double delta, double A = 1.0);
    static SpectralModel band_edge(double delta, double gamma = 1.0);
};

// J(w); throws std::domain_error for w < 0 and for BandEdge at w = 0.
double coupling_density(const SpectralModel& m, double omega);

enum class CutSide { None, Right, Left };

// Closed-form resolvent H(z). For z exactly on the cut (Re z = 0, Im z < 0)
// a side must be supplied; it selects the one-sided limit.
Complex resolvent(const SpectralModel& m, Complex z, CutSide side = CutSide::None);

// H continued through the cut (second sheet: s -> -s).
Complex resolvent_second_sheet(const SpectralModel& m, Complex z);

// dH/dz on either sheet.
Complex resolvent_derivative(const SpectralModel& m, Complex z,
                             bool second_sheet = false);

// Dynamic threshold shift int J(w)/w dw: equals A for Photodetachment,
// +infinity for BandEdge.
double threshold_shift(const SpectralModel& m);

CubicPolynomial characteristic_cubic(const SpectralModel& m);

// Memory kernel K(tau) = int J(w) exp(-i w tau) dw, tau > 0:
//   BandEdge:          gamma^{3/2} exp(-i pi/4)/sqrt(pi tau)
//   Photodetachment:   A sqrt(beta) exp(-i pi/4)/sqrt(pi tau)
//                      - A beta erfcx(sqrt(i beta tau))
Complex memory_kernel(const SpectralModel& m, double tau);

enum class PoleClass { WignerWeisskopf, Bound };

struct Pole {
    Complex location; // z_p
    Complex residue;  // residue of 1/H (or of its continuation) at z_p
    PoleClass cls = PoleClass::Bound;
};

// Resolvent zeros seeded from the characteristic cubic and refined by
// Newton. Bound poles are principal-sheet zeros on the positive imaginary
// axis; WignerWeisskopf entries are second-sheet zeros with Re z < 0 (they
// are not residues of the principal-sheet decomposition, see oracles.hpp).
struct PoleSet {
    std::vector<Pole> poles;
    // continuum cut: the negative imaginary z-axis
};

PoleSet find_poles(const SpectralModel& m);

} // namespace qzeno
