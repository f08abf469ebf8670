#include "vho/numeric.hpp"

#include <cmath>
#include <limits>

namespace vho {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Snap the step so x + h and x - h are exact offsets from x.
double snapped_step(double x, double raw) {
    volatile double t = x + raw;
    return t - x;
}

double step1(double x) { return snapped_step(x, std::cbrt(kEps) * std::max(1.0, std::fabs(x))); }

double step2(double x) {
    return snapped_step(x, std::pow(kEps, 0.25) * std::max(1.0, std::fabs(x)));
}

} // namespace

double fd_derivative(const std::function<double(double)>& f, double x) {
    const double h = step1(x);
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double fd_second_derivative(const std::function<double(double)>& f, double x) {
    const double h = step2(x);
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& x) {
    std::vector<double> g(x.size());
    std::vector<double> p = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = step1(x[i]);
        p[i] = x[i] + h;
        const double fp = f(p);
        p[i] = x[i] - h;
        const double fm = f(p);
        p[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

std::vector<double> fd_hessian(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> hess(n * n, 0.0);
    std::vector<double> p = x;
    const double f0 = f(x);
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = step2(x[i]);
        // diagonal: standard central second difference
        p[i] = x[i] + hi;
        const double fp = f(p);
        p[i] = x[i] - hi;
        const double fm = f(p);
        p[i] = x[i];
        hess[i * n + i] = (fp - 2.0 * f0 + fm) / (hi * hi);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double hj = step2(x[j]);
            p[i] = x[i] + hi;
            p[j] = x[j] + hj;
            const double fpp = f(p);
            p[j] = x[j] - hj;
            const double fpm = f(p);
            p[i] = x[i] - hi;
            const double fmm = f(p);
            p[j] = x[j] + hj;
            const double fmp = f(p);
            p[i] = x[i];
            p[j] = x[j];
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
            hess[i * n + j] = v;
            hess[j * n + i] = v;
        }
    }
    return hess;
}

} // namespace vho
