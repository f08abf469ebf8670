#include "vho/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vho {

namespace {
constexpr double kTimeSlack = 1e-9; // absorbs accumulated floating-point drift
const double kNan = std::numeric_limits<double>::quiet_NaN();
} // namespace

std::size_t ping_pong_count(const std::vector<HandoverEvent>& events, double window_s) {
    if (!(window_s > 0.0))
        throw std::domain_error("ping_pong_count: window must be > 0");
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const HandoverEvent& first = events[i];
        const HandoverEvent& second = events[i + 1];
        if (second.from == first.to && second.to == first.from &&
            second.time_s - first.time_s <= window_s)
            ++count;
    }
    return count;
}

Simulation::Simulation(Scenario scenario, std::uint64_t seed_override)
    : Simulation([&scenario, seed_override] {
          scenario.seed = seed_override;
          return std::move(scenario);
      }()) {}

Simulation::Simulation(Scenario scenario) : scenario_(std::move(scenario)) {
    const std::vector<std::string> violations = scenario_.validate();
    if (!violations.empty())
        throw ScenarioError(violations);
    parameters_ = scenario_.parameters();
    weight_matrix_ = scenario_.weight_matrix();
    active_services_ = scenario_.resolved_active_services();
    path_.emplace(scenario_.path());
    channels_.reserve(scenario_.networks.size());
    for (std::size_t i = 0; i < scenario_.networks.size(); ++i)
        channels_.push_back(RayleighChannel::for_stream(scenario_.networks[i].lambda,
                                                        scenario_.seed, i));
    epoch(0.0); // initial attachment happens at t = 0
}

std::optional<HandoverEvent> Simulation::step(double dt) {
    if (!(dt > 0.0) || dt > scenario_.policy.decision_period_s + kTimeSlack)
        throw std::domain_error("step: dt must lie in (0, decision_period_s]");
    time_s_ += dt;
    return epoch(time_s_);
}

std::optional<HandoverEvent> Simulation::epoch(double t) {
    time_s_ = t;
    const Vec2 pos = path_->position_at(t);
    const HandoverPolicy& policy = scenario_.policy;

    // Sample every in-range network in scenario order so the substreams
    // advance identically regardless of the weight configuration.
    struct Measurement {
        std::size_t index;
        bool accepted;
        double rss_db;
        NetworkProfile live; // profile with the rss metric replaced by the measurement
    };
    std::vector<Measurement> in_range;
    for (std::size_t i = 0; i < scenario_.networks.size(); ++i) {
        const ScenarioNetwork& net = scenario_.networks[i];
        const double dist = distance(pos, net.profile.coverage_center);
        if (dist > net.profile.coverage_radius_m())
            continue;
        const SampleSet window{
            scenario_.fading_enabled
                ? channels_[i].sample(policy.sample_window)
                : std::vector<double>(policy.sample_window, rayleigh_mean(net.lambda))};
        const EstimateSummary summary = estimate(window);
        const double c = threshold_for_alpha(net.lambda, policy.alpha);
        const double mean_db =
            net.path_loss.mean_level_db(std::max(dist, 1e-3)); // guard d = 0 exactly
        Measurement m;
        m.index = i;
        m.accepted = accept_signal(summary, c);
        m.rss_db = mean_db + fading_deviation_db(summary.sample_mean, net.lambda);
        m.live = net.profile;
        m.live.raw_metrics[Metric::rss] = m.rss_db;
        in_range.push_back(std::move(m));
    }

    TraceRecord record;
    record.time_s = t;
    record.position = pos;
    record.z.assign(scenario_.networks.size(), kNan);

    std::optional<HandoverEvent> committed;

    if (in_range.empty()) {
        serving_ = "none";
        streak_network_ = "none";
    } else {
        std::vector<NetworkProfile> live;
        std::map<std::string, bool> acceptance;
        for (const Measurement& m : in_range) {
            live.push_back(m.live);
            acceptance[m.live.id] = m.accepted;
        }

        // Z for every in-range candidate (trace shows rejected ones too).
        const std::vector<CostVector> costs =
            normalize_costs(live, parameters_, weight_matrix_.services);
        std::map<std::string, double> z_by_id;
        for (std::size_t j = 0; j < in_range.size(); ++j) {
            const double z = total_cost(weight_matrix_, costs[j], active_services_);
            record.z[in_range[j].index] = z;
            z_by_id[in_range[j].live.id] = z;
        }

        const std::vector<RankedNetwork> ranking = rank_networks(
            live, weight_matrix_, parameters_, active_services_, acceptance, serving_);

        // A serving network that left coverage or lost acceptance detaches.
        const bool serving_admissible =
            std::any_of(ranking.begin(), ranking.end(),
                        [&](const RankedNetwork& r) { return r.id == serving_; });
        if (serving_ != "none" && !serving_admissible) {
            serving_ = "none";
            streak_network_ = "none";
        }

        if (ranking.empty()) {
            streak_network_ = "none"; // continuity broken, nothing admissible
        } else {
            const std::string& top = ranking.front().id;
            const bool initial = trace_.empty() && serving_ == "none";
            if (top == serving_) {
                streak_network_ = "none"; // nothing to dwell on
            } else {
                if (streak_network_ != top) {
                    streak_network_ = top;
                    streak_start_s_ = t;
                }
                const bool dwell_met =
                    t - streak_start_s_ + kTimeSlack >= policy.dwell_time_s;
                if (initial || dwell_met) {
                    HandoverEvent ev;
                    ev.time_s = t;
                    ev.from = serving_;
                    ev.to = top;
                    ev.rss_db_at_decision = kNan;
                    for (const Measurement& m : in_range)
                        if (m.live.id == top)
                            ev.rss_db_at_decision = m.rss_db;
                    ev.z_values = z_by_id;
                    serving_ = top;
                    streak_network_ = "none";
                    committed = ev;
                    events_.push_back(ev);
                }
            }
        }
    }

    record.serving = serving_;
    record.rss_db = kNan;
    for (const Measurement& m : in_range)
        if (m.live.id == serving_)
            record.rss_db = m.rss_db;
    trace_.push_back(std::move(record));
    return committed;
}

RunSummary Simulation::summarize() const {
    RunSummary s;
    for (const HandoverEvent& ev : events_) {
        if (ev.from == "none")
            ++s.attaches;
        else
            ++s.handovers;
    }
    s.ping_pongs = ping_pong_count(events_, scenario_.ping_pong_window_s);
    std::size_t served = 0;
    std::size_t inside = 0;
    for (const TraceRecord& r : trace_) {
        if (r.serving == "none")
            continue;
        ++served;
        if (r.rss_db >= scenario_.band_lo_db && r.rss_db <= scenario_.band_hi_db)
            ++inside;
    }
    s.band_occupancy = served == 0 ? 0.0 : static_cast<double>(inside) / served;
    s.band_floor_met = s.band_occupancy >= scenario_.band_floor;
    return s;
}

RunResult Simulation::run() {
    const double period = scenario_.policy.decision_period_s;
    const auto epochs = static_cast<std::size_t>(
        std::floor(scenario_.duration_s / period + kTimeSlack));
    for (std::size_t k = 1; k <= epochs; ++k)
        epoch(static_cast<double>(k) * period); // exact multiples, no drift
    RunResult res;
    res.trace = trace_;
    res.events = events_;
    res.summary = summarize();
    return res;
}

RunResult run_scenario(const Scenario& scenario, std::optional<std::uint64_t> seed_override) {
    if (seed_override) {
        Simulation sim(scenario, *seed_override);
        return sim.run();
    }
    Simulation sim(scenario);
    return sim.run();
}

} // namespace vho
