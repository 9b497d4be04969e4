// oracles.cpp — mode-bath, Volterra, and spectral-decomposition oracles

#include "qzeno/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qzeno/faddeeva.hpp"
#include "qzeno/quadrature.hpp"

namespace qzeno {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);
const Complex kExpIPi4 = Complex(std::sqrt(0.5), std::sqrt(0.5));
const Complex kExpMinusIPi4 = std::conj(kExpIPi4);

void check_cfg(const OracleConfig& cfg)
{
    if (cfg.n_modes < 1 || !(cfg.u_max > 0.0) || !(cfg.dt > 0.0) ||
        !(cfg.t_max > 0.0) || !(cfg.volterra_dt > 0.0))
        throw std::invalid_argument("OracleConfig: all fields must be positive");
}

} // namespace

// ---- mode bath -------------------------------------------------------------

ModeBath discretize_bath(const SpectralModel& m, const OracleConfig& cfg)
{
    check_cfg(cfg);
    ModeBath bath;
    const int n = cfg.n_modes;
    const double du = cfg.u_max / double(n);
    bath.u_nodes.resize(n);
    bath.couplings.resize(n);
    bath.omega.resize(n);
    for (int j = 0; j < n; ++j) {
        const double u = (double(j) + 0.5) * du;
        const double w = u * u;
        bath.u_nodes[j] = u;
        bath.omega[j] = w;
        // g_j^2 = J(omega_j) * (d omega/d u) * du  (uniform grid in u = sqrt(w))
        bath.couplings[j] = std::sqrt(coupling_density(m, w) * 2.0 * u * du);
    }
    return bath;
}

double truncation_shift(const SpectralModel& m, double u_max)
{
    if (!(u_max > 0.0))
        throw std::invalid_argument("truncation_shift: u_max must be > 0");
    if (m.kind == ModelKind::Photodetachment)
        return (2.0 * m.rate_A / kPi) * std::atan(std::sqrt(m.width_beta) / u_max);
    return 2.0 * std::pow(m.gamma, 1.5) / (kPi * u_max);
}

namespace {

// Single-excitation star model evolved by a 4th-order Yoshida composition
// of two exactly solvable sub-flows:
//   diagonal D(tau):  a *= e^{-i delta tau},  b_j *= e^{-i omega_j tau}
//   coupling C(tau):  rotation by angle G tau in the {|0>, bright} plane,
//                     G^2 = sum_j g_j^2
// Every substep is unitary, so the norm is conserved to rounding.
struct ModeState {
    Complex a;
    std::vector<Complex> b;
};

struct SplitPropagator {
    const ModeBath& bath;
    double delta;
    double G = 0.0;

    std::vector<Complex> phase1, phase2; // diagonal phases for the two tau values
    Complex aphase1, aphase2;
    double c1 = 1.0, s1 = 0.0, c0 = 1.0, s0 = 0.0; // coupling rotations
    double h = 0.0;

    SplitPropagator(const ModeBath& b, double d) : bath(b), delta(d)
    {
        double g2 = 0.0;
        for (double g : bath.couplings)
            g2 += g * g;
        G = std::sqrt(g2);
    }

    void prepare(double step)
    {
        h = step;
        const double cbrt2 = std::cbrt(2.0);
        const double w1 = 1.0 / (2.0 - cbrt2);
        const double w0 = -cbrt2 / (2.0 - cbrt2);
        const double tau1 = 0.5 * w1 * h;             // outer diagonal
        const double tau2 = 0.5 * (w1 + w0) * h;      // inner diagonals
        const std::size_t n = bath.omega.size();
        phase1.resize(n);
        phase2.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            phase1[j] = std::polar(1.0, -bath.omega[j] * tau1);
            phase2[j] = std::polar(1.0, -bath.omega[j] * tau2);
        }
        aphase1 = std::polar(1.0, -delta * tau1);
        aphase2 = std::polar(1.0, -delta * tau2);
        c1 = std::cos(G * w1 * h);
        s1 = std::sin(G * w1 * h);
        c0 = std::cos(G * w0 * h);
        s0 = std::sin(G * w0 * h);
    }

    void diagonal(ModeState& s, const std::vector<Complex>& ph, Complex aph) const
    {
        s.a *= aph;
        const std::size_t n = s.b.size();
        for (std::size_t j = 0; j < n; ++j)
            s.b[j] *= ph[j];
    }

    void coupling(ModeState& s, double c, double sn) const
    {
        if (G == 0.0)
            return;
        const std::size_t n = s.b.size();
        Complex B(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            B += bath.couplings[j] * s.b[j];
        B /= G;
        const Complex a_new = c * s.a - kI * sn * B;
        const Complex B_new = c * B - kI * sn * s.a;
        const Complex dB = (B_new - B) / G;
        for (std::size_t j = 0; j < n; ++j)
            s.b[j] += bath.couplings[j] * dB;
        s.a = a_new;
    }

    void step(ModeState& s) const
    {
        diagonal(s, phase1, aphase1);
        coupling(s, c1, s1);
        diagonal(s, phase2, aphase2);
        coupling(s, c0, s0);
        diagonal(s, phase2, aphase2);
        coupling(s, c1, s1);
        diagonal(s, phase1, aphase1);
    }
};

double mode_norm(const ModeState& s)
{
    double n = std::norm(s.a);
    for (const auto& b : s.b)
        n += std::norm(b);
    return n;
}

} // namespace

SurvivalTrace evolve_modes(const ModeBath& bath, double delta,
                           std::span<const double> times, double dt,
                           double* max_drift)
{
    if (!(dt > 0.0))
        throw std::invalid_argument("evolve_modes: dt must be > 0");
    const std::size_t n = bath.omega.size();
    ModeState s{Complex(1.0, 0.0), std::vector<Complex>(n, Complex(0.0, 0.0))};
    SplitPropagator prop(bath, delta);
    prop.prepare(dt);

    std::vector<Complex> alpha;
    alpha.reserve(times.size());
    double worst = 0.0;
    double t = 0.0;
    for (double tout : times) {
        if (tout < t - 1e-12)
            throw std::invalid_argument("evolve_modes: times must be increasing");
        while (t + dt <= tout * (1.0 + 1e-15)) {
            prop.step(s);
            t += dt;
        }
        const double rem = tout - t;
        if (rem > 1e-13 * std::max(1.0, tout)) {
            SplitPropagator part(bath, delta);
            part.prepare(rem);
            part.step(s);
            t = tout;
        }
        const double drift = std::abs(mode_norm(s) - 1.0);
        worst = std::max(worst, drift);
        if (drift > 1e-6)
            throw std::runtime_error("evolve_modes: norm drift " +
                                     std::to_string(drift) + " exceeds 1e-6");
        alpha.push_back(s.a);
    }
    if (max_drift)
        *max_drift = worst;
    return make_trace(std::vector<double>(times.begin(), times.end()),
                      std::move(alpha), TraceMethod::Modes);
}

SurvivalTrace evolve_modes_oracle(const SpectralModel& m, const OracleConfig& cfg,
                                  std::span<const double> times)
{
    const ModeBath bath = discretize_bath(m, cfg);
    const double delta_eff = m.detuning_delta - truncation_shift(m, cfg.u_max);
    return evolve_modes(bath, delta_eff, times, cfg.dt);
}

// ---- Volterra product integration -------------------------------------------
//
// K(tau) = Cs / sqrt(tau) + C2 f(tau), f(tau) = erfcx(e^{i pi/4} sqrt(beta tau))
// (C2 = 0 for the band-edge kernel). Exact moments over [a, b] follow from
// the antiderivative tower
//   F0(tau) = int_0^tau f = [f - 1 + 2 e^{i pi/4} sqrt(beta tau / pi)]/(i beta)
//   G(tau)  = int_0^tau F0 = [(F0 - tau) + (4/3) e^{i pi/4} sqrt(beta/pi) tau^{3/2}]/(i beta)
//   H(tau)  = int_0^tau G  = [(G - tau^2/2) + (8/15) e^{i pi/4} sqrt(beta/pi) tau^{5/2}]/(i beta)
// with series forms for small beta*tau where the closed forms cancel
// (tau^k sum_m (-zeta)^m / Gamma(m/2 + k + 1), zeta = e^{i pi/4} sqrt(beta tau)).
//
// The solver integrates the second-kind form
//   alpha(t) = 1 - i Delta int_0^t alpha - int_0^t alpha(u) I0(t - u) du,
//   I0(tau) = int_0^tau K = 2 Cs sqrt(tau) + C2 F0(tau),
// with alpha piecewise linear and all I0 moments exact; the remaining
// trapezoidal phase integral gets a Gregory h^2/12 end correction. The
// sqrt(tau) kernel derivative never meets a quadrature rule, so the scheme
// is genuinely second order in volterra_dt.

namespace {

struct KernelMoments {
    double A_singular = 0.0; // coefficient of tau^{-1/2} without phase
    Complex Cs;              // full coefficient of tau^{-1/2}
    Complex C2{0.0, 0.0};
    double beta = 0.0;
    bool has_smooth = false;

    Complex f(double tau) const
    {
        return sf::erfcx_c(kExpIPi4 * std::sqrt(beta * tau));
    }

    Complex F0(double tau) const
    {
        const double x = beta * tau;
        if (x < 1e-2) {
            // tau * sum_m (-zeta)^m / Gamma(m/2 + 2), zeta = e^{i pi/4} sqrt(x)
            const Complex zeta = kExpIPi4 * std::sqrt(x);
            Complex pw(1.0, 0.0), sum(0.0, 0.0);
            for (int mm = 0; mm < 40; ++mm) {
                const Complex term = pw / std::tgamma(0.5 * mm + 2.0);
                sum += term;
                if (std::norm(term) < 1e-34 * std::norm(sum))
                    break;
                pw *= -zeta;
            }
            return tau * sum;
        }
        const Complex num =
            f(tau) - 1.0 + 2.0 * kExpIPi4 * std::sqrt(x / kPi);
        return num / Complex(0.0, beta);
    }

    Complex G(double tau) const
    {
        const double x = beta * tau;
        if (x < 1e-2) {
            const Complex zeta = kExpIPi4 * std::sqrt(x);
            Complex pw(1.0, 0.0), sum(0.0, 0.0);
            for (int mm = 0; mm < 40; ++mm) {
                const Complex term = pw / std::tgamma(0.5 * mm + 3.0);
                sum += term;
                if (std::norm(term) < 1e-34 * std::norm(sum))
                    break;
                pw *= -zeta;
            }
            return tau * tau * sum;
        }
        const Complex num = (F0(tau) - tau) +
                            (4.0 / 3.0) * kExpIPi4 * std::sqrt(beta / kPi) *
                                tau * std::sqrt(tau);
        return num / Complex(0.0, beta);
    }

    Complex H(double tau) const
    {
        const double x = beta * tau;
        if (x < 1e-2) {
            const Complex zeta = kExpIPi4 * std::sqrt(x);
            Complex pw(1.0, 0.0), sum(0.0, 0.0);
            for (int mm = 0; mm < 40; ++mm) {
                const Complex term = pw / std::tgamma(0.5 * mm + 4.0);
                sum += term;
                if (std::norm(term) < 1e-34 * std::norm(sum))
                    break;
                pw *= -zeta;
            }
            return tau * tau * tau * sum;
        }
        const Complex num = (G(tau) - 0.5 * tau * tau) +
                            (8.0 / 15.0) * kExpIPi4 * std::sqrt(beta / kPi) *
                                tau * tau * std::sqrt(tau);
        return num / Complex(0.0, beta);
    }

    // I0(tau) = int_0^tau K = 2 Cs sqrt(tau) + C2 F0(tau)

    // int_a^b I0
    Complex N0(double a, double b) const
    {
        Complex v = Cs * (4.0 / 3.0) * (b * std::sqrt(b) - a * std::sqrt(a));
        if (has_smooth)
            v += C2 * (G(b) - G(a));
        return v;
    }

    // int_a^b tau I0
    Complex N1(double a, double b) const
    {
        Complex v = Cs * (4.0 / 5.0) *
                    (b * b * std::sqrt(b) - a * a * std::sqrt(a));
        if (has_smooth) {
            // int tau F0 = [tau G] - int G
            v += C2 * (b * G(b) - a * G(a) - (H(b) - H(a)));
        }
        return v;
    }
};

KernelMoments kernel_moments(const SpectralModel& m)
{
    KernelMoments km;
    if (m.kind == ModelKind::BandEdge) {
        km.Cs = std::pow(m.gamma, 1.5) * kExpMinusIPi4 / std::sqrt(kPi);
        km.has_smooth = false;
    } else {
        km.Cs = m.rate_A * std::sqrt(m.width_beta) * kExpMinusIPi4 / std::sqrt(kPi);
        km.C2 = Complex(-m.rate_A * m.width_beta, 0.0);
        km.beta = m.width_beta;
        km.has_smooth = true;
    }
    return km;
}

} // namespace

SurvivalTrace solve_volterra(const SpectralModel& m, double delta,
                             std::span<const double> times, double volterra_dt)
{
    if (!(volterra_dt > 0.0))
        throw std::invalid_argument("solve_volterra: volterra_dt must be > 0");
    if (times.empty())
        throw std::invalid_argument("solve_volterra: empty time grid");
    const double t_end = times.back();
    const double h = volterra_dt;
    const std::size_t M = std::size_t(std::ceil(t_end / h - 1e-12));

    const KernelMoments km = kernel_moments(m);

    // linear-interpolation weights against I0:
    // int_0^{t_n} alpha(u) I0(t_n - u) du = sum_m wa[m] alpha_{n-m} + wb[m] alpha_{n-m+1}
    std::vector<Complex> wa(M + 2), wb(M + 2);
    for (std::size_t mm = 1; mm <= M + 1; ++mm) {
        const double ta = (double(mm) - 1.0) * h;
        const double tb = double(mm) * h;
        const Complex n0 = km.N0(ta, tb);
        const Complex n1 = km.N1(ta, tb);
        wa[mm] = (n1 - ta * n0) / h;
        wb[mm] = (tb * n0 - n1) / h;
    }

    std::vector<Complex> alpha(M + 1);
    alpha[0] = Complex(1.0, 0.0);

    const Complex idelta = kI * delta;
    const Complex dalpha0 = -idelta; // alpha'(0)
    Complex running(0.5, 0.0);       // alpha_0/2 + sum_{j=1}^{n-1} alpha_j
    for (std::size_t n1 = 1; n1 <= M; ++n1) {
        if (n1 >= 2)
            running += alpha[n1 - 1];
        // known part of the I0 convolution
        Complex R = wa[1] * alpha[n1 - 1];
        for (std::size_t mm = 2; mm <= n1; ++mm)
            R += wa[mm] * alpha[n1 - mm] + wb[mm] * alpha[n1 - mm + 1];

        // alpha_n [1 + i d h/2 + wb1] =
        //   1 - i d h S_n - R + i d (h^2/12)(alpha'_n - alpha'_0)
        // with alpha'_n from a backward difference (Gregory correction)
        Complex lhs = 1.0 + idelta * (0.5 * h) + wb[1];
        Complex rhs = 1.0 - idelta * h * running - R;
        const Complex corr = idelta * (h * h / 12.0);
        if (n1 >= 2) {
            // alpha'_n = (3 a_n - 4 a_{n-1} + a_{n-2})/(2h)
            lhs -= corr * (3.0 / (2.0 * h));
            rhs += corr * ((-4.0 * alpha[n1 - 1] + alpha[n1 - 2]) / (2.0 * h) - dalpha0);
        } else {
            // alpha'_1 = (a_1 - a_0)/h
            lhs -= corr / h;
            rhs += corr * (-alpha[0] / h - dalpha0);
        }
        alpha[n1] = rhs / lhs;
    }

    std::vector<Complex> out;
    out.reserve(times.size());
    for (double t : times) {
        if (t < 0.0 || t > t_end * (1.0 + 1e-12))
            throw std::invalid_argument("solve_volterra: time outside grid");
        const double x = t / h;
        const std::size_t i0 = std::min(std::size_t(x), M == 0 ? 0 : M - 1);
        const double frac = x - double(i0);
        out.push_back(alpha[i0] * (1.0 - frac) + alpha[i0 + 1] * frac);
    }
    return make_trace(std::vector<double>(times.begin(), times.end()),
                      std::move(out), TraceMethod::Volterra);
}

// ---- spectral decomposition -------------------------------------------------

namespace {

// H on the right/left edge of the cut, analytically continued to complex s
// (principal sqrt(s); side = -1 right, +1 left).
Complex h_cut_cont(const SpectralModel& m, Complex s, int side)
{
    const Complex sq = double(side) * kI * std::sqrt(s);
    const Complex z = -kI * s;
    const Complex idelta(0.0, m.detuning_delta);
    if (m.kind == ModelKind::Photodetachment) {
        const double sb = std::sqrt(m.width_beta);
        return z + idelta - kI * (m.rate_A * sb) / (sb + sq);
    }
    return z + idelta - kI * std::pow(m.gamma, 1.5) / sq;
}

Complex rho_cont(const SpectralModel& m, Complex s)
{
    const Complex hr = h_cut_cont(m, s, -1);
    const Complex hl = h_cut_cont(m, s, +1);
    return (1.0 / (2.0 * kPi)) * (1.0 / hr - 1.0 / hl);
}

struct PolePart {
    Complex value;
    // cut-resonance windows [lo, hi] where 1/H_right is sharply peaked
    // (second-sheet zeros at s = -Im z, width |Re z|)
    std::vector<std::pair<double, double>> resonance_windows;
    double max_complex_root_sq = 0.0;
};

PolePart pole_part(const SpectralModel& m, double t)
{
    PolePart pp;
    pp.value = Complex(0.0, 0.0);
    const PoleSet ps = find_poles(m);
    for (const auto& p : ps.poles) {
        if (p.cls == PoleClass::Bound) {
            pp.value += p.residue * std::exp(p.location * t);
        } else {
            const double s_res = -p.location.imag();
            const double w = std::max(std::abs(p.location.real()), 1e-12);
            if (s_res > 0.0)
                pp.resonance_windows.emplace_back(s_res - 8.0 * w, s_res + 8.0 * w);
        }
    }
    const RootTriple rt = solve_cubic(characteristic_cubic(m));
    for (const auto& y : rt.roots)
        if (std::abs(y.imag()) > 1e-12 * (1.0 + std::abs(y)))
            pp.max_complex_root_sq = std::max(pp.max_complex_root_sq, std::norm(y));
    return pp;
}

} // namespace

double spectral_density_rho(const SpectralModel& m, double s)
{
    if (!(s > 0.0))
        throw std::domain_error("spectral_density_rho: s must be > 0");
    return rho_cont(m, Complex(s, 0.0)).real();
}

SpectralEval alpha_spectral_detailed(const SpectralModel& m, double t)
{
    if (t < 0.0)
        throw std::domain_error("alpha_spectral: t must be >= 0");

    SpectralEval ev;
    const PolePart pp = pole_part(m, t);

    const double S = std::max({10.0, 4.0 * (1.0 + std::abs(m.detuning_delta)),
                               2.0 * pp.max_complex_root_sq});
    const double s1 = 1.0;

    // segment edges: [0, s1, S] plus resonance windows, so that narrow
    // second-sheet peaks are panel boundaries rather than spikes a sampler
    // could step over
    std::vector<double> edges = {0.0, s1, S};
    for (const auto& [lo, hi] : pp.resonance_windows) {
        if (hi > 0.0 && lo < S) {
            if (lo > 0.0)
                edges.push_back(lo);
            if (hi < S)
                edges.push_back(hi);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    quad::Result r1; // accumulated cut integral over [0, S]
    r1.converged = true;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double a = edges[k], b = edges[k + 1];
        quad::Options o;
        o.abs_tol = 2e-10;
        o.rel_tol = 1e-12;
        o.max_panels = 40000;
        quad::Result r;
        if (a == 0.0) {
            // substitute s = x^2 to absorb the sqrt(s) edge behaviour
            const double xmax = std::sqrt(b);
            o.max_panel_width =
                (t > 1.0) ? std::min(xmax, kPi / (4.0 * xmax * t)) : 0.0;
            auto f = [&](double x) {
                const double s = x * x;
                if (s == 0.0)
                    return Complex(0.0, 0.0);
                return std::exp(Complex(0.0, -s * t)) *
                       rho_cont(m, Complex(s, 0.0)) * (2.0 * x);
            };
            r = quad::integrate(f, 0.0, xmax, o);
        } else {
            o.max_panel_width = (t > 1.0) ? kPi / (4.0 * t) : 0.0;
            auto f = [&](double s) {
                return std::exp(Complex(0.0, -s * t)) *
                       rho_cont(m, Complex(s, 0.0));
            };
            r = quad::integrate(f, a, b, o);
        }
        r1.value += r.value;
        r1.error_estimate += r.error_estimate;
        r1.panels += r.panels;
        r1.converged = r1.converged && r.converged;
    }
    // tail: rotate onto s = S - i v, v = S tan(theta)
    quad::Options o3;
    o3.abs_tol = 2e-10;
    o3.rel_tol = 1e-12;
    o3.max_panels = 4000;
    auto f3 = [&](double theta) {
        const double c = std::cos(theta);
        if (c < 1e-300)
            return Complex(0.0, 0.0);
        const double v = S * std::tan(theta);
        const double jac = S / (c * c);
        const Complex s(S, -v);
        return std::exp(-v * t) * rho_cont(m, s) * jac;
    };
    const quad::Result r3 = quad::integrate(f3, 0.0, 0.5 * kPi, o3);
    const Complex tail =
        -kI * std::exp(Complex(0.0, -S * t)) * r3.value;

    ev.value = pp.value + r1.value + tail;
    ev.error_estimate = r1.error_estimate + r3.error_estimate;
    ev.panels = r1.panels + r3.panels;
    ev.converged = r1.converged && r3.converged;
    return ev;
}

Complex alpha_spectral(const SpectralModel& m, double t)
{
    const SpectralEval ev = alpha_spectral_detailed(m, t);
    if (!ev.converged)
        throw std::runtime_error(
            "alpha_spectral: panel budget exceeded at t = " + std::to_string(t) +
            ", achieved error estimate " + std::to_string(ev.error_estimate));
    return ev.value;
}

Complex spectral_completeness(const SpectralModel& m)
{
    return alpha_spectral(m, 0.0);
}

} // namespace qzeno
