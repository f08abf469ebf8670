#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vho {

/// Derives an independent 64-bit seed for a substream (splitmix64 mixing).
/// Used to decorrelate per-network sample streams inside one seeded run.
std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream_id);

/// Rayleigh amplitude density p(x) = (x/lambda^2) * exp(-x^2 / (2 lambda^2)).
/// Throws std::domain_error if x < 0 or lambda <= 0.
double rayleigh_pdf(double x, double lambda);

/// Rayleigh CDF, 1 - exp(-x^2 / (2 lambda^2)). Same domain rules as the pdf.
double rayleigh_cdf(double x, double lambda);

/// Inverse CDF, x = lambda * sqrt(-2 ln(1 - u)) for u in [0, 1).
double rayleigh_inverse_cdf(double u, double lambda);

/// Mean of the amplitude distribution, lambda * sqrt(pi/2).
double rayleigh_mean(double lambda);

/// Variance of the amplitude distribution, (4 - pi)/2 * lambda^2.
double rayleigh_variance(double lambda);

/// Seeded Rayleigh fast-fading amplitude source. Identical (lambda, seed)
/// pairs produce identical sample streams on every platform: uniforms are
/// built from raw mt19937_64 output (53-bit mantissa), not from
/// std::uniform_real_distribution, whose values are implementation-defined.
class RayleighChannel {
public:
    RayleighChannel(double lambda, std::uint64_t seed);

    /// Channel for substream `stream_id` of a base seed; see stream_seed().
    static RayleighChannel for_stream(double lambda, std::uint64_t base_seed,
                                      std::uint64_t stream_id);

    double lambda() const { return lambda_; }
    std::uint64_t seed() const { return seed_; }

    /// Next fading amplitude (inverse-CDF transform). Advances the stream.
    double next();

    /// Draws n amplitudes. Advances the stream by n.
    std::vector<double> sample(std::size_t n);

private:
    double lambda_;
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Log-distance mean signal level. The paper models only short-term fading;
/// the slow mean-level variation is conventional plumbing.
struct PathLossModel {
    double ref_power_db = 0.0;   // mean level at ref_distance_m, dB
    double ref_distance_m = 1.0; // > 0
    double exponent = 2.0;       // >= 0

    /// ref_power_db - 10 * exponent * log10(d / ref_distance_m).
    /// Throws std::domain_error if distance_m <= 0.
    double mean_level_db(double distance_m) const;
};

struct RssSample {
    double time_s = 0.0;
    double amplitude = 0.0; // linear, >= 0
    double power_db = 0.0;  // mean level + fading deviation
};

/// Fading deviation of an amplitude from the distribution mean, in dB:
/// 20 * log10(x / (lambda * sqrt(pi/2))).
double fading_deviation_db(double amplitude, double lambda);

/// Draws one amplitude from the channel and combines it with the path-loss
/// mean level at the given distance. power_db = mean level + deviation, so a
/// trace at constant distance is centered on the mean level.
RssSample rss_at(RayleighChannel& channel, const PathLossModel& path_loss,
                 double distance_m, double time_s);

} // namespace vho
