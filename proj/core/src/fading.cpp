#include "vho/fading.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vho {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("rayleigh: lambda must be > 0");
}

} // namespace

std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream_id) {
    std::uint64_t state = base_seed;
    splitmix64(state); // decouple from the raw base seed
    state += stream_id * 0xd1b54a32d192ed03ULL;
    return splitmix64(state);
}

double rayleigh_pdf(double x, double lambda) {
    check_lambda(lambda);
    if (x < 0.0)
        throw std::domain_error("rayleigh: amplitude must be >= 0");
    const double r = x / lambda;
    return (x / (lambda * lambda)) * std::exp(-0.5 * r * r);
}

double rayleigh_cdf(double x, double lambda) {
    check_lambda(lambda);
    if (x < 0.0)
        throw std::domain_error("rayleigh: amplitude must be >= 0");
    const double r = x / lambda;
    return -std::expm1(-0.5 * r * r);
}

double rayleigh_inverse_cdf(double u, double lambda) {
    check_lambda(lambda);
    if (!(u >= 0.0) || u >= 1.0)
        throw std::domain_error("rayleigh: u must lie in [0, 1)");
    return lambda * std::sqrt(-2.0 * std::log1p(-u));
}

double rayleigh_mean(double lambda) {
    check_lambda(lambda);
    return lambda * std::sqrt(std::numbers::pi / 2.0);
}

double rayleigh_variance(double lambda) {
    check_lambda(lambda);
    return (4.0 - std::numbers::pi) / 2.0 * lambda * lambda;
}

RayleighChannel::RayleighChannel(double lambda, std::uint64_t seed)
    : lambda_(lambda), seed_(seed), engine_(seed) {
    check_lambda(lambda);
}

RayleighChannel RayleighChannel::for_stream(double lambda, std::uint64_t base_seed,
                                            std::uint64_t stream_id) {
    return RayleighChannel(lambda, stream_seed(base_seed, stream_id));
}

double RayleighChannel::next() {
    // 53-bit uniform in [0, 1); portable across standard libraries.
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return rayleigh_inverse_cdf(u, lambda_);
}

std::vector<double> RayleighChannel::sample(std::size_t n) {
    if (n == 0)
        throw std::domain_error("rayleigh: sample count must be >= 1");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(next());
    return out;
}

double PathLossModel::mean_level_db(double distance_m) const {
    if (!(ref_distance_m > 0.0))
        throw std::domain_error("path loss: ref_distance_m must be > 0");
    if (!(distance_m > 0.0))
        throw std::domain_error("path loss: distance must be > 0");
    return ref_power_db - 10.0 * exponent * std::log10(distance_m / ref_distance_m);
}

double fading_deviation_db(double amplitude, double lambda) {
    return 20.0 * std::log10(amplitude / rayleigh_mean(lambda));
}

RssSample rss_at(RayleighChannel& channel, const PathLossModel& path_loss,
                 double distance_m, double time_s) {
    const double mean_db = path_loss.mean_level_db(distance_m);
    const double x = channel.next();
    return RssSample{time_s, x, mean_db + fading_deviation_db(x, channel.lambda())};
}

} // namespace vho
