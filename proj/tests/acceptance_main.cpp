// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Usage: acceptance <scenario-dir>
//
// The scenario directory must hold the shipped two-network examples
// (two_network_coverage_priority.json, two_network_rss_priority.json).

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "vho/csv.hpp"
#include "vho/estimator.hpp"
#include "vho/fading.hpp"
#include "vho/scenario.hpp"
#include "vho/sim.hpp"
#include "vho/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void criterion(int index, const std::string& name, double budget_s,
               const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0.0 && elapsed >= budget_s) {
        outcome.pass = false;
        outcome.detail += " [exceeded " + vho::format_double(budget_s) + " s budget]";
    }
    if (!outcome.pass)
        ++g_failures;
    std::printf("%s  %d %-28s (%.2f s)  %s\n", outcome.pass ? "PASS" : "FAIL", index,
                name.c_str(), elapsed, outcome.detail.c_str());
    std::fflush(stdout);
}

std::string run_bytes(const vho::Scenario& sc) {
    const vho::RunResult result = vho::run_scenario(sc);
    std::vector<std::string> ids;
    for (const vho::ScenarioNetwork& net : sc.networks)
        ids.push_back(net.profile.id);
    std::ostringstream trace, events;
    vho::write_trace_csv(trace, result.trace, ids);
    vho::write_events_csv(events, result.events);
    return trace.str() + "\x1e" + events.str();
}

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <scenario-dir>\n";
        return 2;
    }
    const std::string scenario_dir = argv[1];

    // 1. Rayleigh moments from 1e5 seeded samples at lambda = 1.
    criterion(1, "rayleigh-moments", 1.0, [] {
        vho::RayleighChannel channel(1.0, 20250801);
        const std::vector<double> xs = channel.sample(100000);
        double mean = 0.0;
        for (double x : xs)
            mean += x;
        mean /= xs.size();
        double var = 0.0;
        for (double x : xs)
            var += (x - mean) * (x - mean);
        var /= xs.size();
        const double mean_err = std::abs(mean - 1.2533141) / 1.2533141;
        const double var_err = std::abs(var - 0.4292037) / 0.4292037;
        Outcome o;
        o.pass = mean_err < 0.01 && var_err < 0.02;
        o.detail = "mean=" + vho::format_double(mean) + " (rel err " +
                   vho::format_double(mean_err) + "), var=" + vho::format_double(var) +
                   " (rel err " + vho::format_double(var_err) + ")";
        return o;
    });

    // 2. MLE recovery and agreement with the numeric-maximization oracle.
    criterion(2, "mle-recovery", 1.0, [] {
        Outcome o;
        o.pass = true;
        for (double truth : {0.5, 1.0, 2.0}) {
            vho::RayleighChannel channel(truth, 77000 + static_cast<int>(truth * 10));
            const vho::SampleSet s{channel.sample(10000)};
            const double mle = vho::mle_lambda(s);
            double mean = 0.0;
            for (double x : s.observations)
                mean += x;
            mean /= s.count();
            const double numeric = oracle::golden_section_max(
                [&](double l) { return vho::log_likelihood(s, l); }, 0.05 * mean,
                20.0 * mean, 1e-9);
            const double rel = std::abs(mle - truth) / truth;
            const double gap = std::abs(mle - numeric);
            if (rel >= 0.02 || gap >= 1e-6)
                o.pass = false;
            o.detail += "lambda=" + vho::format_double(truth) + ": mle=" +
                        vho::format_double(mle) + " oracle-gap=" + vho::format_double(gap) +
                        "  ";
        }
        return o;
    });

    // 3. Chebyshev bound holds empirically over 1e4 trials of n = 100.
    criterion(3, "chebyshev-validity", 5.0, [] {
        const double lambda = 1.0, k = 0.2;
        const std::size_t n = 100, trials = 10000;
        const double mu = vho::rayleigh_mean(lambda);
        vho::RayleighChannel channel(lambda, 424242);
        std::size_t outside = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                mean += channel.next();
            mean /= n;
            if (std::abs(mean - mu) >= k)
                ++outside;
        }
        const double freq = static_cast<double>(outside) / trials;
        const double bound = vho::chebyshev_bound(lambda, n, k);
        Outcome o;
        o.pass = freq <= bound && std::abs(bound - 0.107301) < 1e-5;
        o.detail = "empirical=" + vho::format_double(freq) +
                   " bound=" + vho::format_double(bound);
        return o;
    });

    // 4. Alpha threshold: cdf identity on a 5x5 grid and the acceptance rate.
    criterion(4, "alpha-threshold", 0.0, [] {
        Outcome o;
        o.pass = true;
        double worst = 0.0;
        for (double lambda : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            for (double alpha : {0.01, 0.05, 0.2, 0.5, 0.9}) {
                const double c = vho::threshold_for_alpha(lambda, alpha);
                worst = std::max(worst, std::abs(vho::rayleigh_cdf(c, lambda) - alpha));
            }
        }
        if (worst > 1e-12)
            o.pass = false;

        const double c = vho::threshold_for_alpha(1.0, 0.05);
        vho::RayleighChannel channel(1.0, 1357);
        std::size_t accepted = 0;
        const std::size_t trials = 100000;
        for (std::size_t t = 0; t < trials; ++t) {
            vho::EstimateSummary s;
            s.sample_mean = channel.next();
            if (vho::accept_signal(s, c))
                ++accepted;
        }
        const double rate = static_cast<double>(accepted) / trials;
        if (std::abs(rate - 0.95) > 0.01)
            o.pass = false;
        o.detail = "grid-worst=" + vho::format_double(worst) +
                   " acceptance-rate=" + vho::format_double(rate);
        return o;
    });

    // 5. SVD reconstruction, minimum-norm solve, stationarity vs closed form.
    criterion(5, "svd-pseudo-inverse", 0.0, [] {
        Outcome o;
        o.pass = true;
        std::mt19937_64 rng(5150);
        double worst_recon = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            vho::DenseMatrix a(5, 4);
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    a(r, c) = 2.0 * u01(rng) - 1.0;
            const vho::SvdFactors f = vho::svd(a);
            double err = 0.0;
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t c = 0; c < 4; ++c) {
                    double v = 0.0;
                    for (std::size_t i = 0; i < f.sigma.size(); ++i)
                        v += f.u(r, i) * f.sigma[i] * f.v(c, i);
                    err += (v - a(r, c)) * (v - a(r, c));
                }
            worst_recon = std::max(worst_recon, std::sqrt(err));
        }
        if (worst_recon > 1e-9)
            o.pass = false;

        const vho::ParameterVector x =
            vho::pinv_solve(vho::DenseMatrix(2, 2, {1.0, 1.0, 1.0, 1.0}),
                            std::vector<double>{2.0, 2.0});
        const double minnorm_err = std::max(std::abs(x[0] - 1.0), std::abs(x[1] - 1.0));
        if (minnorm_err > 1e-10)
            o.pass = false;

        vho::RayleighChannel channel(1.0, 86753);
        const vho::SampleSet s{channel.sample(2000)};
        const vho::StationarityResult res = vho::solve_stationarity(
            [&](const vho::ParameterVector& p) { return vho::log_likelihood(s, p[0]); },
            vho::ParameterVector{0.4}, 1e-3, 50);
        const double mle_gap = std::abs(res.x[0] - vho::mle_lambda(s));
        if (!res.converged || mle_gap > 1e-6)
            o.pass = false;

        o.detail = "worst-recon=" + vho::format_double(worst_recon) +
                   " minnorm-err=" + vho::format_double(minnorm_err) +
                   " stationarity-gap=" + vho::format_double(mle_gap);
        return o;
    });

    // 6. Cost engine: validation strictness, scale invariance, brute force.
    criterion(6, "cost-engine", 1.0, [] {
        Outcome o;
        o.pass = true;
        std::mt19937_64 rng(6666);

        // rows off by more than 1e-9 must be rejected, clean rows accepted
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> row(3);
            double sum = 0.0;
            for (double& w : row) {
                w = 0.1 + u01(rng);
                sum += w;
            }
            for (double& w : row)
                w /= sum;
            vho::WeightMatrix wm;
            wm.services = 1;
            wm.parameters = 3;
            wm.weights = row;
            if (!vho::validate_weights(wm).empty())
                o.pass = false;
            wm.weights[0] += 1e-8; // pushes the row sum off by > 1e-9
            if (vho::validate_weights(wm).empty())
                o.pass = false;
        }

        // argmin is invariant under positive scaling of every cost entry
        const vho::WeightMatrix w = [] {
            vho::WeightMatrix m;
            m.services = 1;
            m.parameters = 3;
            m.weights = {0.5, 0.3, 0.2};
            return m;
        }();
        for (int trial = 0; trial < 200 && o.pass; ++trial) {
            std::vector<vho::CostVector> ks(4);
            for (auto& k : ks) {
                k.services = 1;
                k.parameters = 3;
                k.costs = {u01(rng), u01(rng), u01(rng)};
            }
            const double c = 0.01 + 10.0 * u01(rng);
            std::size_t before = 0, after = 0;
            double zb = 1e300, za = 1e300;
            for (std::size_t i = 0; i < ks.size(); ++i) {
                const double z = vho::total_cost(w, ks[i], {0});
                vho::CostVector scaled = ks[i];
                for (double& x : scaled.costs)
                    x *= c;
                const double zs = vho::total_cost(w, scaled, {0});
                if (z < zb) {
                    zb = z;
                    before = i;
                }
                if (zs < za) {
                    za = zs;
                    after = i;
                }
            }
            if (before != after)
                o.pass = false;
        }

        // 1000 random 4-network instances against a first-principles ranking
        const std::vector<vho::Metric> params{vho::Metric::rss, vho::Metric::latency,
                                              vho::Metric::coverage};
        std::size_t mismatches = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<vho::NetworkProfile> nets;
            for (int i = 0; i < 4; ++i) {
                vho::NetworkProfile p;
                p.id = "n" + std::to_string(i);
                p.raw_metrics[vho::Metric::rss] = -90.0 + 40.0 * u01(rng);
                p.raw_metrics[vho::Metric::latency] = 1.0 + 49.0 * u01(rng);
                p.raw_metrics[vho::Metric::coverage] = 50.0 + 400.0 * u01(rng);
                nets.push_back(std::move(p));
            }
            double lo[3], hi[3];
            for (int p = 0; p < 3; ++p) {
                lo[p] = 1e300;
                hi[p] = -1e300;
                for (const auto& n : nets) {
                    const double v = n.metric(params[p]);
                    lo[p] = std::min(lo[p], v);
                    hi[p] = std::max(hi[p], v);
                }
            }
            std::vector<std::pair<double, std::string>> expected;
            for (const auto& n : nets) {
                double z = 0.0;
                for (int p = 0; p < 3; ++p) {
                    const double v = n.metric(params[p]);
                    double k = 0.5;
                    if (hi[p] != lo[p])
                        k = vho::metric_is_benefit(params[p])
                                ? (hi[p] - v) / (hi[p] - lo[p])
                                : (v - lo[p]) / (hi[p] - lo[p]);
                    z += w.weights[p] * k;
                }
                expected.emplace_back(z, n.id);
            }
            std::sort(expected.begin(), expected.end());
            std::map<std::string, bool> acceptance;
            for (const auto& n : nets)
                acceptance[n.id] = true;
            const auto ranked = vho::rank_networks(nets, w, params, {0}, acceptance);
            for (std::size_t i = 0; i < ranked.size(); ++i)
                if (ranked[i].id != expected[i].second)
                    ++mismatches;
        }
        if (mismatches != 0)
            o.pass = false;
        o.detail = "brute-force-mismatches=" + std::to_string(mismatches);
        return o;
    });

    // 7. Simulation determinism and dwell behavior on the shipped scenario.
    criterion(7, "sim-determinism-dwell", 10.0, [&scenario_dir] {
        Outcome o;
        o.pass = true;
        const vho::Scenario base =
            vho::load_scenario(scenario_dir + "/two_network_rss_priority.json");

        if (run_bytes(base) != run_bytes(base)) {
            o.pass = false;
            o.detail += "traces-not-byte-identical ";
        }

        vho::Scenario dwell = base;
        dwell.policy.dwell_time_s = 1.0;
        const vho::RunResult result = vho::run_scenario(dwell);
        double last = -1e300;
        bool spacing_ok = true;
        std::size_t handovers = 0;
        for (const vho::HandoverEvent& ev : result.events) {
            if (ev.from == "none")
                continue;
            ++handovers;
            if (ev.time_s - last < dwell.policy.dwell_time_s - 1e-9)
                spacing_ok = false;
            last = ev.time_s;
        }
        if (!spacing_ok) {
            o.pass = false;
            o.detail += "dwell-spacing-violated ";
        }

        std::string sweep_detail;
        for (std::uint64_t seed : {11u, 12u, 13u}) {
            std::size_t prev = std::numeric_limits<std::size_t>::max();
            for (double d : {0.0, 1.0, 5.0}) {
                vho::Scenario sc = base;
                sc.policy.dwell_time_s = d;
                sc.seed = seed;
                const std::size_t pp = vho::run_scenario(sc).summary.ping_pongs;
                if (pp > prev) {
                    o.pass = false;
                    o.detail += "ping-pong-not-monotone ";
                }
                prev = pp;
                sweep_detail += std::to_string(pp) + (d == 5.0 ? ";" : ",");
            }
        }
        o.detail += "handovers=" + std::to_string(handovers) +
                    " ping-pong-sweep=" + sweep_detail;
        return o;
    });

    // 8. Band occupancy of the shipped priority configurations.
    criterion(8, "band-occupancy", 0.0, [&scenario_dir] {
        Outcome o;
        const vho::Scenario coverage =
            vho::load_scenario(scenario_dir + "/two_network_coverage_priority.json");
        const vho::Scenario rss =
            vho::load_scenario(scenario_dir + "/two_network_rss_priority.json");
        const vho::RunSummary cov = vho::run_scenario(coverage).summary;
        const vho::RunSummary rs = vho::run_scenario(rss).summary;
        o.pass = cov.band_floor_met && rs.band_floor_met;
        o.detail = "coverage-priority band=[" + vho::format_double(coverage.band_lo_db) +
                   "," + vho::format_double(coverage.band_hi_db) +
                   "] occupancy=" + vho::format_double(cov.band_occupancy) + " floor=" +
                   vho::format_double(coverage.band_floor) + " | rss-priority band=[" +
                   vho::format_double(rss.band_lo_db) + "," +
                   vho::format_double(rss.band_hi_db) +
                   "] occupancy=" + vho::format_double(rs.band_occupancy) +
                   " floor=" + vho::format_double(rss.band_floor);
        return o;
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
