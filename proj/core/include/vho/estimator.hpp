#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vho {

/// Observed fading amplitudes A_1..A_n. All entries must be >= 0, n >= 1.
struct SampleSet {
    std::vector<double> observations;

    std::size_t count() const { return observations.size(); }

    /// Throws std::domain_error on an empty or negative-valued set.
    void validate() const;
};

/// Point estimates derived from one SampleSet.
struct EstimateSummary {
    double sample_mean = 0.0;     // arithmetic mean of all observations
    double mle_lambda = 0.0;      // sqrt(sum x^2 / (2n)), zeros dropped
    double population_mean = 0.0; // mle_lambda * sqrt(pi/2)
    double population_sd = 0.0;   // mle_lambda * sqrt((4-pi)/2)
    std::size_t n = 0;            // observation count, zeros included
    std::size_t zeros_dropped = 0;
};

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0; // may be +infinity
    double alpha = 0.05;
    int parameter_index = 0;
    int network_index = 0;
};

/// Sum of log densities, ln prod p(x_i; lambda). Returns -infinity if any
/// observation is exactly zero (zero density there).
double log_likelihood(const SampleSet& samples, double lambda);

/// Closed-form stationary maximizer of the Rayleigh log-likelihood,
/// lambda_hat = sqrt(sum x_i^2 / (2n)). Observations equal to zero are
/// dropped from both the sum and the count (quantized traces produce them);
/// throws std::domain_error if nothing is left.
double mle_lambda(const SampleSet& samples);

/// mle_lambda plus sample statistics in one pass.
EstimateSummary estimate(const SampleSet& samples);

/// Chebyshev tail bound on the sample mean of n draws:
/// P{ |Abar - lambda sqrt(pi/2)| >= k } <= lambda^2 (4-pi) / (2 n k^2),
/// clipped at 1.
double chebyshev_bound(double lambda, std::size_t n, double k);

/// The two-sided interval [lambda sqrt(pi/2) - k, lambda sqrt(pi/2) + k].
ConfidenceInterval mean_interval(double lambda, double k, double alpha = 0.05);

/// Lower endpoint c of the one-sided acceptance interval (c, +inf) with
/// rejection degree alpha: P{ c <= X } = 1 - alpha, so c = lambda
/// sqrt(-2 ln(1 - alpha)).
double threshold_for_alpha(double lambda, double alpha);

/// True iff the summarized sample mean lies in the open interval (c, +inf).
bool accept_signal(const EstimateSummary& summary, double c);

/// True iff f''(a) * f''(b) < 0 (second derivatives by central finite
/// differences); a retained interval per the sign-change criterion.
/// Requires a < b.
bool curvature_product_test(const std::function<double(double)>& f, double a, double b);

} // namespace vho
