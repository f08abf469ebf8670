// vho: cost-based vertical handover toolkit.
//
// Subcommands: run (simulate a scenario), estimate (fading-scale estimation
// from an amplitude file), solve (min-norm least squares via SVD), rank
// (cost-ranked network selection).
//
// Exit codes: 0 success, 1 validation/parse failure, 2 I/O or numeric failure.

#include <CLI11.hpp>

#include "vho/csv.hpp"
#include "vho/estimator.hpp"
#include "vho/scenario.hpp"
#include "vho/sim.hpp"
#include "vho/solver.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIoOrNumeric = 2;

int write_file(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIoOrNumeric;
    }
    emit(out);
    if (!out) {
        std::cerr << "error: failed while writing '" << path << "'\n";
        return kExitIoOrNumeric;
    }
    return kExitOk;
}

int run_one(const vho::Scenario& scenario, std::optional<std::uint64_t> seed_override,
            const std::string& prefix) {
    const vho::RunResult result = vho::run_scenario(scenario, seed_override);

    std::vector<std::string> ids;
    for (const vho::ScenarioNetwork& net : scenario.networks)
        ids.push_back(net.profile.id);

    int rc = write_file(prefix + ".trace.csv", [&](std::ostream& out) {
        vho::write_trace_csv(out, result.trace, ids);
    });
    if (rc != kExitOk)
        return rc;
    rc = write_file(prefix + ".events.csv", [&](std::ostream& out) {
        vho::write_events_csv(out, result.events);
    });
    if (rc != kExitOk)
        return rc;

    const vho::RunSummary& s = result.summary;
    const std::uint64_t seed = seed_override.value_or(scenario.seed);
    std::cout << "seed=" << seed << " handovers=" << s.handovers
              << " attaches=" << s.attaches << " ping_pongs=" << s.ping_pongs
              << " band_occupancy=" << vho::format_double(s.band_occupancy)
              << " band=[" << vho::format_double(scenario.band_lo_db) << ","
              << vho::format_double(scenario.band_hi_db) << "]"
              << " floor=" << vho::format_double(scenario.band_floor)
              << " floor_met=" << (s.band_floor_met ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed_override,
            const std::string& out_prefix, unsigned sweep) {
    vho::Scenario scenario;
    try {
        scenario = vho::load_scenario(scenario_path);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    const std::vector<std::string> violations = scenario.validate();
    if (!violations.empty()) {
        std::cerr << "scenario validation failed:\n";
        for (const std::string& v : violations)
            std::cerr << "  - " << v << "\n";
        return kExitValidation;
    }

    if (sweep == 0) {
        return run_one(scenario, seed_override, out_prefix);
    }
    const std::uint64_t base = seed_override.value_or(scenario.seed);
    for (unsigned i = 0; i < sweep; ++i) {
        const std::uint64_t seed = base + i;
        const int rc = run_one(scenario, seed, out_prefix + ".s" + std::to_string(seed));
        if (rc != kExitOk)
            return rc;
    }
    return kExitOk;
}

int cmd_estimate(const std::string& samples_path, double alpha, double k) {
    std::vector<double> samples;
    try {
        samples = vho::read_samples_file(samples_path);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    } catch (const vho::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    if (samples.empty()) {
        std::cerr << "error: no samples in '" << samples_path << "'\n";
        return kExitValidation;
    }

    try {
        const vho::EstimateSummary summary = vho::estimate(vho::SampleSet{samples});
        const double c = vho::threshold_for_alpha(summary.mle_lambda, alpha);
        const double bound = vho::chebyshev_bound(summary.mle_lambda, summary.n, k);
        std::cout << "n=" << summary.n << "\n"
                  << "zeros_dropped=" << summary.zeros_dropped << "\n"
                  << "sample_mean=" << vho::format_double(summary.sample_mean) << "\n"
                  << "mle_lambda=" << vho::format_double(summary.mle_lambda) << "\n"
                  << "population_mean=" << vho::format_double(summary.population_mean) << "\n"
                  << "population_sd=" << vho::format_double(summary.population_sd) << "\n"
                  << "alpha=" << vho::format_double(alpha) << "\n"
                  << "threshold_c=" << vho::format_double(c) << "\n"
                  << "chebyshev_k=" << vho::format_double(k) << "\n"
                  << "chebyshev_bound=" << vho::format_double(bound) << "\n"
                  << "accept=" << (vho::accept_signal(summary, c) ? "true" : "false")
                  << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    }
    return kExitOk;
}

int cmd_solve(const std::string& a_path, const std::string& b_path) {
    vho::DenseMatrix a, b;
    try {
        a = vho::read_matrix_file(a_path);
        b = vho::read_matrix_file(b_path);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    } catch (const vho::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    try {
        const vho::DenseMatrix x = vho::pinv_solve(a, b);
        for (std::size_t r = 0; r < x.rows(); ++r) {
            for (std::size_t c = 0; c < x.cols(); ++c)
                std::cout << (c ? "," : "") << vho::format_double(x(r, c));
            std::cout << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    }
    return kExitOk;
}

int cmd_rank(const std::string& candidates_path, const std::string& weights_path,
             const std::string& serving) {
    std::vector<vho::NetworkProfile> candidates;
    vho::WeightMatrix weights;
    try {
        candidates = vho::read_candidates_file(candidates_path);
        weights = vho::read_weights_file(weights_path);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    } catch (const vho::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    if (candidates.empty()) {
        std::cerr << "error: no candidates in '" << candidates_path << "'\n";
        return kExitValidation;
    }
    const std::vector<std::string> problems = vho::validate_weights(weights);
    if (!problems.empty()) {
        std::cerr << "weight matrix is not stochastic:\n";
        for (const std::string& p : problems)
            std::cerr << "  - " << p << "\n";
        return kExitValidation;
    }

    const std::vector<vho::Metric> parameters{vho::Metric::rss, vho::Metric::latency,
                                              vho::Metric::coverage};
    if (weights.parameters != parameters.size()) {
        std::cerr << "error: weight matrix needs " << parameters.size()
                  << " columns (rss, latency, coverage), got " << weights.parameters << "\n";
        return kExitIoOrNumeric;
    }
    std::vector<std::size_t> active(weights.services);
    for (std::size_t s = 0; s < active.size(); ++s)
        active[s] = s;
    std::map<std::string, bool> acceptance;
    for (const vho::NetworkProfile& c : candidates)
        acceptance[c.id] = true;

    try {
        const auto ranked = vho::rank_networks(candidates, weights, parameters, active,
                                               acceptance, serving);
        for (const vho::RankedNetwork& r : ranked)
            std::cout << r.id << "," << vho::format_double(r.z) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoOrNumeric;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost-based vertical handover simulator and estimation toolkit"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Simulate a scenario and write trace/event CSVs");
    std::string scenario_path;
    std::string out_prefix = "out";
    std::optional<std::uint64_t> seed_override;
    unsigned sweep = 0;
    run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--out", out_prefix, "Output file prefix");
    run->add_option("--seed", seed_override, "Override the scenario seed");
    run->add_option("--sweep", sweep, "Run N consecutive seeds starting at the base seed");

    // estimate
    auto* estimate = app.add_subcommand("estimate",
                                        "Estimate the fading scale from an amplitude file");
    std::string samples_path;
    double alpha = 0.05;
    double chebyshev_k = 0.2;
    estimate->add_option("--samples", samples_path, "CSV file, one amplitude per line")
        ->required();
    estimate->add_option("--alpha", alpha, "Rejection degree in (0,1)");
    estimate->add_option("--k", chebyshev_k, "Chebyshev slack for the reported bound");

    // solve
    auto* solve = app.add_subcommand("solve", "Minimum-norm least squares for A x = b");
    std::string a_path, b_path;
    solve->add_option("--a", a_path, "Matrix A as CSV rows")->required();
    solve->add_option("--b", b_path, "Right-hand side as CSV rows")->required();

    // rank
    auto* rank = app.add_subcommand("rank", "Rank candidate networks by weighted cost");
    std::string candidates_path, weights_path, serving;
    rank->add_option("--candidates", candidates_path, "Candidates CSV")->required();
    rank->add_option("--weights", weights_path, "Stochastic weight matrix CSV")->required();
    rank->add_option("--serving", serving, "Currently-serving network id (tie-break)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // exits 0 after printing help
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    if (run->parsed())
        return cmd_run(scenario_path, seed_override, out_prefix, sweep);
    if (estimate->parsed())
        return cmd_estimate(samples_path, alpha, chebyshev_k);
    if (solve->parsed())
        return cmd_solve(a_path, b_path);
    return cmd_rank(candidates_path, weights_path, serving);
}
