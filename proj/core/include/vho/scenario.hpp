#pragma once

#include "vho/cost.hpp"
#include "vho/fading.hpp"
#include "vho/geometry.hpp"
#include "vho/path.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vho {

/// One candidate technology inside the cell: the decision profile plus its
/// fading scale and mean-level model.
struct ScenarioNetwork {
    NetworkProfile profile;
    double lambda = 1.0;
    PathLossModel path_loss;
};

/// Dwell-timer handover policy. dwell_time_s may be +infinity (never switch
/// after the initial attachment).
struct HandoverPolicy {
    double dwell_time_s = 0.0;
    double alpha = 0.05;         // rejection degree for accept_signal
    std::size_t sample_window = 20; // RSS amplitudes per decision epoch
    double decision_period_s = 0.1;
};

/// Weight configuration: either an explicit stochastic matrix (with active
/// service rows) or a priority encoding that yields a single row.
struct WeightConfig {
    std::optional<WeightMatrix> matrix;
    std::vector<std::size_t> active_services;
    std::optional<PriorityEncoding> priority;
};

struct Scenario {
    Hexagon geometry;
    std::vector<ScenarioNetwork> networks;

    std::vector<Vec2> waypoints;
    double speed_mps = 1.0;
    std::vector<double> turn_radius_m;
    PathEnd end_behavior = PathEnd::clamp;

    HandoverPolicy policy;
    WeightConfig weights;
    bool use_bandwidth = false;
    bool fading_enabled = true; // false pins every amplitude at the mean

    double band_lo_db = -5.0;
    double band_hi_db = 5.0;
    double band_floor = 0.0;
    double ping_pong_window_s = 5.0;

    double duration_s = 60.0;
    std::uint64_t seed = 0;

    /// Decision parameters in canonical order (bandwidth only when enabled).
    std::vector<Metric> parameters() const;

    /// Weight matrix resolved from either configuration form.
    WeightMatrix weight_matrix() const;
    std::vector<std::size_t> resolved_active_services() const;

    MobilePath path() const;

    /// Every violated constraint, one message each; empty means runnable.
    std::vector<std::string> validate() const;
};

class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Parses a scenario from JSON text. Throws std::runtime_error with a
/// descriptive message on malformed input.
Scenario parse_scenario(const std::string& json_text);

/// Loads and parses a scenario file.
Scenario load_scenario(const std::string& file_path);

} // namespace vho
