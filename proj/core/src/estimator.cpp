#include "vho/estimator.hpp"

#include "vho/fading.hpp"
#include "vho/numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vho {

void SampleSet::validate() const {
    if (observations.empty())
        throw std::domain_error("sample set: needs at least one observation");
    for (double x : observations)
        if (!(x >= 0.0))
            throw std::domain_error("sample set: observations must be >= 0");
}

double log_likelihood(const SampleSet& samples, double lambda) {
    samples.validate();
    if (!(lambda > 0.0))
        throw std::domain_error("log_likelihood: lambda must be > 0");
    const double log_l2 = 2.0 * std::log(lambda);
    double sum = 0.0;
    for (double x : samples.observations) {
        if (x == 0.0)
            return -std::numeric_limits<double>::infinity();
        const double r = x / lambda;
        sum += std::log(x) - log_l2 - 0.5 * r * r;
    }
    return sum;
}

double mle_lambda(const SampleSet& samples) {
    return estimate(samples).mle_lambda;
}

EstimateSummary estimate(const SampleSet& samples) {
    samples.validate();
    EstimateSummary s;
    s.n = samples.count();
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t nonzero = 0;
    for (double x : samples.observations) {
        sum += x;
        if (x == 0.0) {
            ++s.zeros_dropped;
        } else {
            sum_sq += x * x;
            ++nonzero;
        }
    }
    if (nonzero == 0)
        throw std::domain_error("mle_lambda: every observation is zero");
    s.sample_mean = sum / static_cast<double>(s.n);
    s.mle_lambda = std::sqrt(sum_sq / (2.0 * static_cast<double>(nonzero)));
    s.population_mean = rayleigh_mean(s.mle_lambda);
    s.population_sd = std::sqrt(rayleigh_variance(s.mle_lambda));
    return s;
}

double chebyshev_bound(double lambda, std::size_t n, double k) {
    if (!(lambda > 0.0))
        throw std::domain_error("chebyshev_bound: lambda must be > 0");
    if (n == 0)
        throw std::domain_error("chebyshev_bound: n must be >= 1");
    if (!(k > 0.0))
        throw std::domain_error("chebyshev_bound: k must be > 0");
    const double bound =
        lambda * lambda * (4.0 - std::numbers::pi) / (2.0 * static_cast<double>(n) * k * k);
    return std::min(1.0, bound);
}

ConfidenceInterval mean_interval(double lambda, double k, double alpha) {
    if (!(k > 0.0))
        throw std::domain_error("mean_interval: k must be > 0");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("mean_interval: alpha must lie in (0, 1)");
    const double mu = rayleigh_mean(lambda);
    return ConfidenceInterval{mu - k, mu + k, alpha, 0, 0};
}

double threshold_for_alpha(double lambda, double alpha) {
    if (!(lambda > 0.0))
        throw std::domain_error("threshold_for_alpha: lambda must be > 0");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("threshold_for_alpha: alpha must lie in (0, 1)");
    return lambda * std::sqrt(-2.0 * std::log1p(-alpha));
}

bool accept_signal(const EstimateSummary& summary, double c) {
    return summary.sample_mean > c;
}

bool curvature_product_test(const std::function<double(double)>& f, double a, double b) {
    if (!(a < b))
        throw std::domain_error("curvature_product_test: requires a < b");
    return fd_second_derivative(f, a) * fd_second_derivative(f, b) < 0.0;
}

} // namespace vho
