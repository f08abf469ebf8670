#include "vho/cost.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vho {

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::rss: return "rss";
    case Metric::latency: return "latency";
    case Metric::coverage: return "coverage";
    case Metric::bandwidth: return "bandwidth";
    }
    return "?";
}

bool metric_is_benefit(Metric m) {
    return m != Metric::latency; // latency is the only where-less-is-better parameter
}

std::vector<std::string> validate_weights(const WeightMatrix& w) {
    std::vector<std::string> violations;
    if (w.services == 0 || w.parameters == 0 ||
        w.weights.size() != w.services * w.parameters) {
        violations.push_back("weight matrix shape does not match services x parameters");
        return violations;
    }
    for (std::size_t s = 0; s < w.services; ++s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < w.parameters; ++i) {
            const double v = w.at(s, i);
            sum += v;
            if (!(v > 0.0) || !(v < 1.0)) {
                std::ostringstream os;
                os << "row " << s << " entry " << i << " = " << v
                   << " lies outside the open interval (0,1)";
                violations.push_back(os.str());
            }
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            std::ostringstream os;
            os << "row " << s << " sums to " << sum << ", expected 1";
            violations.push_back(os.str());
        }
    }
    return violations;
}

std::vector<double> weights_from_priority(const PriorityEncoding& enc,
                                          const std::vector<Metric>& order) {
    double sum = 0.0;
    for (Metric m : order) {
        const auto it = enc.parameter_codes.find(m);
        const int code = it == enc.parameter_codes.end() ? 0 : it->second;
        if (code < 0)
            throw std::domain_error("priority codes must be nonnegative");
        sum += code;
    }
    if (sum <= 0.0)
        throw std::domain_error("priority encoding: all codes are zero");
    std::vector<double> row;
    row.reserve(order.size());
    for (Metric m : order) {
        const auto it = enc.parameter_codes.find(m);
        const int code = it == enc.parameter_codes.end() ? 0 : it->second;
        row.push_back(code / sum);
    }
    return row;
}

double NetworkProfile::metric(Metric m) const {
    const auto it = raw_metrics.find(m);
    if (it == raw_metrics.end())
        throw std::out_of_range("network '" + id + "' is missing metric '" +
                                metric_name(m) + "'");
    return it->second;
}

std::vector<CostVector> normalize_costs(const std::vector<NetworkProfile>& candidates,
                                        const std::vector<Metric>& parameters,
                                        std::size_t services) {
    if (candidates.empty())
        throw std::invalid_argument("normalize_costs: needs at least one candidate");
    const std::size_t k = parameters.size();

    // per-parameter extremes over the candidate set
    std::vector<double> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const double v = candidates[c].metric(parameters[i]); // throws if missing
            if (c == 0) {
                lo[i] = hi[i] = v;
            } else {
                lo[i] = std::min(lo[i], v);
                hi[i] = std::max(hi[i], v);
            }
        }
    }

    std::vector<CostVector> out;
    out.reserve(candidates.size());
    for (const NetworkProfile& net : candidates) {
        CostVector cv;
        cv.network_id = net.id;
        cv.services = services;
        cv.parameters = k;
        cv.costs.resize(services * k);
        for (std::size_t i = 0; i < k; ++i) {
            const double v = net.metric(parameters[i]);
            double cost;
            if (hi[i] == lo[i]) {
                cost = 0.5; // neutral: nothing to distinguish
            } else if (metric_is_benefit(parameters[i])) {
                cost = (hi[i] - v) / (hi[i] - lo[i]);
            } else {
                cost = (v - lo[i]) / (hi[i] - lo[i]);
            }
            for (std::size_t s = 0; s < services; ++s)
                cv.costs[s * k + i] = cost;
        }
        out.push_back(std::move(cv));
    }
    return out;
}

double total_cost(const WeightMatrix& w, const CostVector& k,
                  const std::vector<std::size_t>& active_services) {
    if (w.parameters != k.parameters || w.services != k.services)
        throw std::invalid_argument("total_cost: weight and cost dimensions differ");
    double z = 0.0;
    for (std::size_t s : active_services) {
        if (s >= w.services)
            throw std::invalid_argument("total_cost: active service index out of range");
        for (std::size_t i = 0; i < w.parameters; ++i)
            z += w.at(s, i) * k.at(s, i);
    }
    return z;
}

std::vector<RankedNetwork> rank_networks(const std::vector<NetworkProfile>& candidates,
                                         const WeightMatrix& w,
                                         const std::vector<Metric>& parameters,
                                         const std::vector<std::size_t>& active_services,
                                         const std::map<std::string, bool>& acceptance,
                                         const std::string& serving_id) {
    const std::vector<CostVector> costs = normalize_costs(candidates, parameters, w.services);
    std::vector<RankedNetwork> ranked;
    for (const CostVector& cv : costs) {
        const auto it = acceptance.find(cv.network_id);
        if (it == acceptance.end() || !it->second)
            continue;
        ranked.push_back({cv.network_id, total_cost(w, cv, active_services)});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](const RankedNetwork& a, const RankedNetwork& b) {
                         if (a.z != b.z)
                             return a.z < b.z;
                         const bool a_serving = a.id == serving_id;
                         const bool b_serving = b.id == serving_id;
                         if (a_serving != b_serving)
                             return a_serving;
                         return a.id < b.id;
                     });
    return ranked;
}

} // namespace vho
