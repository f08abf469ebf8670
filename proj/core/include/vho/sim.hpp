#pragma once

#include "vho/cost.hpp"
#include "vho/estimator.hpp"
#include "vho/fading.hpp"
#include "vho/path.hpp"
#include "vho/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vho {

/// Hexagonal cell hosting the candidate technologies.
struct HexCell {
    Hexagon shape;
    std::vector<NetworkProfile> technologies;
};

/// One decision epoch of a run. serving is "none" when detached; rss_db is
/// NaN then. z holds one entry per scenario network (NaN when out of range).
struct TraceRecord {
    double time_s = 0.0;
    Vec2 position{0.0, 0.0};
    std::string serving;
    double rss_db = 0.0;
    std::vector<double> z;
};

/// A committed attachment or handover. from is "none" for attachments.
struct HandoverEvent {
    double time_s = 0.0;
    std::string from;
    std::string to;
    double rss_db_at_decision = 0.0;
    std::map<std::string, double> z_values;
};

struct RunSummary {
    std::size_t handovers = 0;   // events with a real from-network
    std::size_t attaches = 0;    // events from "none" (initial or re-attach)
    std::size_t ping_pongs = 0;  // within scenario.ping_pong_window_s
    double band_occupancy = 0.0; // fraction of served epochs inside the band
    bool band_floor_met = false;
};

struct RunResult {
    std::vector<TraceRecord> trace;
    std::vector<HandoverEvent> events;
    RunSummary summary;
};

/// Counts A->B->A reversals: consecutive event pairs that undo each other
/// within window_s. Events must be time-ordered.
std::size_t ping_pong_count(const std::vector<HandoverEvent>& events, double window_s);

/// Discrete-time handover simulation. Construction validates the scenario
/// (throws ScenarioError listing every violation) and runs the t=0 epoch,
/// which attaches to the best accepted network without waiting for dwell.
class Simulation {
public:
    explicit Simulation(Scenario scenario);

    /// Overrides the scenario seed before construction side effects.
    Simulation(Scenario scenario, std::uint64_t seed_override);

    const Scenario& scenario() const { return scenario_; }
    double time_s() const { return time_s_; }
    const std::string& serving() const { return serving_; }
    const std::vector<TraceRecord>& trace() const { return trace_; }
    const std::vector<HandoverEvent>& events() const { return events_; }

    /// Advances by dt (0 < dt <= decision_period_s) and runs one decision
    /// epoch: samples every in-range network, estimates, filters by the
    /// acceptance threshold, ranks by cost, and applies the dwell rule.
    std::optional<HandoverEvent> step(double dt);

    /// Steps through scenario.duration_s at the decision period and
    /// assembles the summary.
    RunResult run();

private:
    struct EpochOutcome;
    std::optional<HandoverEvent> epoch(double t);
    RunSummary summarize() const;

    Scenario scenario_;
    std::vector<Metric> parameters_;
    WeightMatrix weight_matrix_;
    std::vector<std::size_t> active_services_;
    std::optional<MobilePath> path_; // built after validation passes
    std::vector<RayleighChannel> channels_; // one substream per network

    double time_s_ = 0.0;
    std::string serving_ = "none";
    std::string streak_network_ = "none";
    double streak_start_s_ = 0.0;

    std::vector<TraceRecord> trace_;
    std::vector<HandoverEvent> events_;
};

/// Validates, runs, and summarizes a scenario in one call.
RunResult run_scenario(const Scenario& scenario,
                       std::optional<std::uint64_t> seed_override = std::nullopt);

} // namespace vho
