// Shared scenario builders for the simulation-level tests.
#pragma once

#include "vho/scenario.hpp"

#include <string>

namespace fixtures {

inline vho::ScenarioNetwork network(std::string id, double lambda, vho::Vec2 center,
                                    double coverage_m, double latency_ms,
                                    double ref_power_db, double ref_distance_m,
                                    double exponent) {
    vho::ScenarioNetwork net;
    net.profile.id = std::move(id);
    net.profile.technology = "test";
    net.profile.coverage_center = center;
    net.profile.raw_metrics[vho::Metric::coverage] = coverage_m;
    net.profile.raw_metrics[vho::Metric::latency] = latency_ms;
    net.profile.raw_metrics[vho::Metric::rss] = ref_power_db;
    net.lambda = lambda;
    net.path_loss = vho::PathLossModel{ref_power_db, ref_distance_m, exponent};
    return net;
}

/// One macro cell covering everything, straight path, priority weights.
inline vho::Scenario single_network_scenario() {
    vho::Scenario sc;
    sc.geometry = vho::Hexagon{{0.0, 0.0}, 600.0};
    sc.networks.push_back(network("macro", 1.0, {0.0, 0.0}, 700.0, 30.0, 0.0, 250.0, 1.2));
    sc.waypoints = {{-400.0, 0.0}, {400.0, 0.0}};
    sc.speed_mps = 8.0;
    sc.policy = vho::HandoverPolicy{0.5, 0.05, 20, 0.1};
    vho::PriorityEncoding enc;
    enc.parameter_codes = {{vho::Metric::rss, 4},
                           {vho::Metric::latency, 3},
                           {vho::Metric::coverage, 2}};
    sc.weights.priority = enc;
    sc.duration_s = 60.0;
    sc.seed = 7;
    return sc;
}

/// Macro cell plus a hotspot near the middle of the path. The hotspot wins
/// on rss and latency while inside its disk; the macro wins on coverage.
inline vho::Scenario two_network_scenario() {
    vho::Scenario sc;
    sc.geometry = vho::Hexagon{{0.0, 0.0}, 600.0};
    sc.networks.push_back(network("macro", 1.0, {0.0, 0.0}, 700.0, 35.0, 0.0, 260.0, 1.2));
    sc.networks.push_back(network("hotspot", 1.0, {0.0, 40.0}, 150.0, 8.0, 10.0, 60.0, 2.0));
    sc.waypoints = {{-350.0, -150.0}, {-60.0, 60.0}, {220.0, -60.0}, {420.0, 120.0}};
    sc.speed_mps = 4.0;
    sc.turn_radius_m = {50.0, 50.0};
    sc.policy = vho::HandoverPolicy{1.0, 0.05, 20, 0.1};
    vho::PriorityEncoding enc;
    enc.parameter_codes = {{vho::Metric::rss, 4},
                           {vho::Metric::latency, 3},
                           {vho::Metric::coverage, 2}};
    sc.weights.priority = enc;
    sc.band_lo_db = -10.0;
    sc.band_hi_db = 6.0;
    sc.band_floor = 0.5;
    sc.duration_s = 120.0;
    sc.seed = 42;
    return sc;
}

} // namespace fixtures
