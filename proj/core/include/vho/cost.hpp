#pragma once

#include "vho/geometry.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace vho {

/// Decision parameters, in the canonical column order used everywhere.
enum class Metric { rss, latency, coverage, bandwidth };

/// Parameter name for CSV headers and error messages.
std::string metric_name(Metric m);

/// Whether a larger raw value is better (benefit) or worse (cost).
bool metric_is_benefit(Metric m);

/// m x k stochastic matrix of user-service-priority weights: every entry in
/// the open interval (0,1), every row summing to 1.
struct WeightMatrix {
    std::size_t services = 0;   // m
    std::size_t parameters = 0; // k
    std::vector<double> weights; // row-major, services x parameters

    double at(std::size_t s, std::size_t i) const { return weights[s * parameters + i]; }
};

/// Every violated stochastic-matrix rule, one message per finding; empty
/// means the matrix is valid.
std::vector<std::string> validate_weights(const WeightMatrix& w);

/// Integer priority codes per parameter (e.g. rss 4, latency 3, coverage 2)
/// and the service level in {1,2,3} that selects the active service row.
struct PriorityEncoding {
    int service_level = 3;
    std::map<Metric, int> parameter_codes;
};

/// Normalizes the codes into one stochastic weight row, w_i = code_i / sum.
/// The row order follows `order`. Throws std::domain_error if no positive
/// code remains.
std::vector<double> weights_from_priority(const PriorityEncoding& enc,
                                          const std::vector<Metric>& order);

/// One candidate network: identity, technology label, raw decision metrics,
/// and the coverage disk used by the simulator.
struct NetworkProfile {
    std::string id;
    std::string technology;
    std::map<Metric, double> raw_metrics; // rss dB, latency ms, coverage m, bandwidth kb/s
    Vec2 coverage_center{0.0, 0.0};

    double metric(Metric m) const; // throws std::out_of_range naming the gap
    double coverage_radius_m() const { return metric(Metric::coverage); }
};

/// Normalized per-parameter costs for one network, replicated across the m
/// service rows. All entries lie in [0,1]; the best raw metric costs 0.
struct CostVector {
    std::string network_id;
    std::size_t services = 0;
    std::size_t parameters = 0;
    std::vector<double> costs; // row-major, services x parameters

    double at(std::size_t s, std::size_t i) const { return costs[s * parameters + i]; }
};

/// Min-max normalization across the candidate set. Benefit parameters map
/// the best (largest) raw value to cost 0; cost parameters map the smallest
/// to 0. A degenerate parameter (max == min) maps to 0.5 for everyone.
/// Throws std::invalid_argument naming any network/parameter with a missing
/// metric.
std::vector<CostVector> normalize_costs(const std::vector<NetworkProfile>& candidates,
                                        const std::vector<Metric>& parameters,
                                        std::size_t services = 1);

/// Cost distribution value Z = sum over active services s, parameters i of
/// w[s,i] * K[s,i]. Throws std::invalid_argument on dimension mismatch.
double total_cost(const WeightMatrix& w, const CostVector& k,
                  const std::vector<std::size_t>& active_services);

struct RankedNetwork {
    std::string id;
    double z = 0.0;
};

/// Filters out candidates whose acceptance flag is false, then sorts the
/// rest ascending by Z. Ties prefer the currently-serving network, then the
/// lexicographically smaller id. An empty result means nothing is admissible.
std::vector<RankedNetwork> rank_networks(const std::vector<NetworkProfile>& candidates,
                                         const WeightMatrix& w,
                                         const std::vector<Metric>& parameters,
                                         const std::vector<std::size_t>& active_services,
                                         const std::map<std::string, bool>& acceptance,
                                         const std::string& serving_id = "");

} // namespace vho
