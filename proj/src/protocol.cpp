// protocol.cpp

#include "qzeno/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qzeno {

MeasurementSchedule::MeasurementSchedule(double T, long n)
    : total_T(T), n_interruptions(n)
{
    if (!(T > 0.0))
        throw std::invalid_argument("MeasurementSchedule: total_T must be > 0");
    if (n < 1)
        throw std::invalid_argument("MeasurementSchedule: N must be >= 1");
}

namespace {

double clamp01(double p)
{
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

double interrogated_survival(const AmplitudeExpansion& e,
                             const MeasurementSchedule& sched,
                             bool literal_amplitude_exponent)
{
    const double t1 = sched.total_T / double(sched.n_interruptions);
    const double mod = std::abs(alpha_analytic(e, t1));
    const double base = literal_amplitude_exponent ? clamp01(mod)
                                                   : clamp01(mod * mod);
    if (base == 0.0)
        return 0.0;
    return clamp01(std::exp(double(sched.n_interruptions) * std::log(base)));
}

double interrupted_survival_at(const AmplitudeExpansion& e,
                               const MeasurementSchedule& sched, double t)
{
    if (t < 0.0 || t > sched.total_T * (1.0 + 1e-12))
        throw std::domain_error("interrupted_survival_at: t outside [0, T]");
    const long N = sched.n_interruptions;
    const double t1 = sched.total_T / double(N);
    long m = long(std::floor(t / t1));
    m = std::clamp(m, 0L, N);
    double tau = t - double(m) * t1;
    if (tau < 0.0) {
        tau = 0.0;
    }
    const double p1 = clamp01(std::norm(alpha_analytic(e, t1)));
    const double head = (m == 0 || p1 > 0.0)
                            ? std::exp(double(m) * std::log(std::max(p1, 1e-300)))
                            : 0.0;
    return clamp01(head * std::norm(alpha_analytic(e, tau)));
}

SurvivalTrace interrupted_trace(const AmplitudeExpansion& e,
                                const MeasurementSchedule& sched,
                                int samples_per_interval)
{
    if (samples_per_interval < 1)
        throw std::invalid_argument("interrupted_trace: samples_per_interval >= 1");
    const long N = sched.n_interruptions;
    const double t1 = sched.total_T / double(N);
    const double p1 = clamp01(std::norm(alpha_analytic(e, t1)));

    std::vector<double> times;
    std::vector<Complex> alpha;
    times.reserve(std::size_t(N) * samples_per_interval + 1);
    double head_sqrt = 1.0; // p1^{m/2}
    for (long m = 0; m < N; ++m) {
        for (int k = 0; k < samples_per_interval; ++k) {
            const double tau = double(k) * t1 / double(samples_per_interval);
            times.push_back(double(m) * t1 + tau);
            alpha.push_back(head_sqrt * alpha_analytic(e, tau));
        }
        head_sqrt *= std::sqrt(p1);
    }
    times.push_back(sched.total_T);
    alpha.push_back(Complex(head_sqrt, 0.0)); // p = p1^N at the endpoint
    return make_trace(std::move(times), std::move(alpha), TraceMethod::Analytic);
}

std::vector<std::pair<long, double>> zeno_scan(const AmplitudeExpansion& e,
                                               double T,
                                               const std::vector<long>& n_values)
{
    std::vector<std::pair<long, double>> out;
    out.reserve(n_values.size());
    for (long n : n_values)
        out.emplace_back(n, interrogated_survival(e, MeasurementSchedule(T, n)));
    return out;
}

std::pair<double, double> anti_zeno_optimum(const AsymptoticFit& fit, double T)
{
    if (!(fit.nu > 0.0))
        throw std::domain_error("anti_zeno_optimum: fit.nu must be > 0");
    if (!(T > fit.tau))
        throw std::domain_error("anti_zeno_optimum: requires T > tau");
    const double e1 = std::exp(1.0);
    const double n_opt = T / (e1 * fit.tau);
    const double p_min = std::exp(-fit.nu * T / (e1 * fit.tau));
    return {n_opt, p_min};
}

} // namespace qzeno
