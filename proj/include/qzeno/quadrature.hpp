// quadrature.hpp — adaptive Gauss-Legendre panel integration

#pragma once

#include <complex>
#include <functional>

namespace qzeno::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_panel_width = 0.0; // 0 = unlimited
    int max_panels = 20000;
};

struct Result {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

// Integrate f over [a, b]. Panels are bisected largest-error-first until the
// summed error estimate (|G15 - G7| per panel) meets tolerance or the panel
// budget is exhausted; `converged` reports which.
Result integrate(const std::function<std::complex<double>(double)>& f,
                 double a, double b, const Options& opts = {});

double integrate_real(const std::function<double(double)>& f,
                      double a, double b, const Options& opts = {});

} // namespace qzeno::quad
