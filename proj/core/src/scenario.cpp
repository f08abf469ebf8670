#include "vho/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace vho {

using nlohmann::json;

std::vector<Metric> Scenario::parameters() const {
    std::vector<Metric> p{Metric::rss, Metric::latency, Metric::coverage};
    if (use_bandwidth)
        p.push_back(Metric::bandwidth);
    return p;
}

WeightMatrix Scenario::weight_matrix() const {
    if (weights.matrix)
        return *weights.matrix;
    if (!weights.priority)
        throw std::runtime_error("scenario: no weight configuration present");
    const std::vector<double> row = weights_from_priority(*weights.priority, parameters());
    WeightMatrix w;
    w.services = 1;
    w.parameters = row.size();
    w.weights = row;
    return w;
}

std::vector<std::size_t> Scenario::resolved_active_services() const {
    if (weights.matrix) {
        if (!weights.active_services.empty())
            return weights.active_services;
        std::vector<std::size_t> all(weights.matrix->services);
        for (std::size_t s = 0; s < all.size(); ++s)
            all[s] = s;
        return all;
    }
    return {0};
}

MobilePath Scenario::path() const {
    return MobilePath(waypoints, speed_mps, turn_radius_m, end_behavior);
}

std::vector<std::string> Scenario::validate() const {
    std::vector<std::string> v;
    if (!(geometry.circumradius > 0.0))
        v.push_back("geometry: circumradius must be > 0");
    if (networks.empty())
        v.push_back("networks: at least one network is required");

    std::set<std::string> ids;
    for (const ScenarioNetwork& net : networks) {
        const std::string& id = net.profile.id;
        if (id.empty())
            v.push_back("network: empty id");
        if (id == "none")
            v.push_back("network '" + id + "': the id 'none' is reserved");
        if (!ids.insert(id).second)
            v.push_back("network '" + id + "': duplicate id");
        if (!(net.lambda > 0.0))
            v.push_back("network '" + id + "': lambda must be > 0");
        if (!(net.path_loss.ref_distance_m > 0.0))
            v.push_back("network '" + id + "': path-loss ref_distance_m must be > 0");
        if (net.path_loss.exponent < 0.0)
            v.push_back("network '" + id + "': path-loss exponent must be >= 0");
        for (Metric m : parameters()) {
            if (net.profile.raw_metrics.find(m) == net.profile.raw_metrics.end())
                v.push_back("network '" + id + "': missing metric '" + metric_name(m) + "'");
        }
        const auto latency = net.profile.raw_metrics.find(Metric::latency);
        if (latency != net.profile.raw_metrics.end() && !(latency->second > 0.0))
            v.push_back("network '" + id + "': latency must be > 0");
        const auto coverage = net.profile.raw_metrics.find(Metric::coverage);
        if (coverage != net.profile.raw_metrics.end()) {
            if (!(coverage->second > 0.0))
                v.push_back("network '" + id + "': coverage radius must be > 0");
            else if (geometry.distance_to(net.profile.coverage_center) > coverage->second)
                v.push_back("network '" + id + "': coverage disk does not intersect the cell");
        }
    }

    if (waypoints.size() < 2) {
        v.push_back("path: needs at least two waypoints");
    } else {
        for (std::size_t i = 0; i < waypoints.size(); ++i) {
            if (!geometry.contains(waypoints[i])) {
                std::ostringstream os;
                os << "path: waypoint " << i << " lies outside the cell";
                v.push_back(os.str());
            }
        }
        try {
            (void)path();
        } catch (const std::exception& e) {
            v.push_back(std::string("path: ") + e.what());
        }
    }
    if (!(speed_mps > 0.0))
        v.push_back("path: speed must be > 0");

    if (policy.dwell_time_s < 0.0)
        v.push_back("policy: dwell_time_s must be >= 0");
    if (!(policy.alpha > 0.0) || !(policy.alpha < 1.0))
        v.push_back("policy: alpha must lie in (0, 1)");
    if (policy.sample_window == 0)
        v.push_back("policy: sample_window must be >= 1");
    if (!(policy.decision_period_s > 0.0))
        v.push_back("policy: decision_period_s must be > 0");

    if (!weights.matrix && !weights.priority) {
        v.push_back("weights: either a matrix or a priority encoding is required");
    } else {
        try {
            const WeightMatrix w = weight_matrix();
            if (w.parameters != parameters().size())
                v.push_back("weights: column count does not match the parameter count");
            for (const std::string& msg : validate_weights(w))
                v.push_back("weights: " + msg);
            for (std::size_t s : resolved_active_services())
                if (s >= w.services)
                    v.push_back("weights: active service index out of range");
        } catch (const std::exception& e) {
            v.push_back(std::string("weights: ") + e.what());
        }
    }

    if (!(band_lo_db < band_hi_db))
        v.push_back("band: lower edge must be below the upper edge");
    if (band_floor < 0.0 || band_floor > 1.0)
        v.push_back("band: occupancy floor must lie in [0, 1]");
    if (!(ping_pong_window_s > 0.0))
        v.push_back("ping_pong_window_s must be > 0");
    if (!(duration_s > 0.0))
        v.push_back("duration_s must be > 0");
    return v;
}

ScenarioError::ScenarioError(std::vector<std::string> violations)
    : std::runtime_error([&violations] {
          std::ostringstream os;
          os << "scenario validation failed:";
          for (const std::string& s : violations)
              os << "\n  - " << s;
          return os.str();
      }()),
      violations_(std::move(violations)) {}

namespace {

Vec2 parse_point(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("scenario: " + what + " must be a [x, y] pair");
    return Vec2{j[0].get<double>(), j[1].get<double>()};
}

Metric metric_from_name(const std::string& name) {
    if (name == "rss")
        return Metric::rss;
    if (name == "latency")
        return Metric::latency;
    if (name == "coverage")
        return Metric::coverage;
    if (name == "bandwidth")
        return Metric::bandwidth;
    throw std::runtime_error("scenario: unknown parameter '" + name + "'");
}

// dwell_time_s accepts a number or the string "inf"
double parse_dwell(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf")
            return std::numeric_limits<double>::infinity();
        throw std::runtime_error("scenario: dwell_time_s must be a number or \"inf\"");
    }
    return j.get<double>();
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scenario: invalid JSON: ") + e.what());
    }

    try {
        Scenario sc;
        const json& geo = root.at("geometry");
        sc.geometry.center = parse_point(geo.at("center"), "geometry.center");
        sc.geometry.circumradius = geo.at("circumradius_m").get<double>();

        for (const json& jn : root.at("networks")) {
            ScenarioNetwork net;
            net.profile.id = jn.at("id").get<std::string>();
            net.profile.technology = jn.value("technology", std::string{});
            net.lambda = jn.at("lambda").get<double>();
            const json& pl = jn.at("path_loss");
            net.path_loss.ref_power_db = pl.at("ref_power_db").get<double>();
            net.path_loss.ref_distance_m = pl.at("ref_distance_m").get<double>();
            net.path_loss.exponent = pl.at("exponent").get<double>();
            net.profile.coverage_center = parse_point(jn.at("coverage_center"),
                                                      "network coverage_center");
            const json& metrics = jn.at("metrics");
            for (auto it = metrics.begin(); it != metrics.end(); ++it) {
                if (it.key() == "latency_ms")
                    net.profile.raw_metrics[Metric::latency] = it.value().get<double>();
                else if (it.key() == "coverage_radius_m")
                    net.profile.raw_metrics[Metric::coverage] = it.value().get<double>();
                else if (it.key() == "bandwidth_kbps")
                    net.profile.raw_metrics[Metric::bandwidth] = it.value().get<double>();
                else
                    throw std::runtime_error("scenario: unknown metric '" + it.key() +
                                             "' on network '" + net.profile.id + "'");
            }
            // the rss metric is measured live during a run; a static value may
            // still be supplied for tooling that ranks without a run
            if (jn.contains("rss_dbm"))
                net.profile.raw_metrics[Metric::rss] = jn.at("rss_dbm").get<double>();
            else
                net.profile.raw_metrics[Metric::rss] = net.path_loss.ref_power_db;
            sc.networks.push_back(std::move(net));
        }

        const json& jp = root.at("path");
        for (const json& w : jp.at("waypoints"))
            sc.waypoints.push_back(parse_point(w, "path waypoint"));
        sc.speed_mps = jp.at("speed_mps").get<double>();
        if (jp.contains("turn_radius_m")) {
            const json& tr = jp.at("turn_radius_m");
            if (tr.is_array())
                for (const json& r : tr)
                    sc.turn_radius_m.push_back(r.get<double>());
            else
                sc.turn_radius_m.assign(1, tr.get<double>());
        }
        const std::string endb = jp.value("end_behavior", std::string{"clamp"});
        if (endb == "clamp")
            sc.end_behavior = PathEnd::clamp;
        else if (endb == "error")
            sc.end_behavior = PathEnd::error;
        else
            throw std::runtime_error("scenario: end_behavior must be 'clamp' or 'error'");

        const json& pol = root.at("policy");
        sc.policy.dwell_time_s = parse_dwell(pol.at("dwell_time_s"));
        sc.policy.alpha = pol.value("alpha", 0.05);
        sc.policy.sample_window = pol.value("sample_window", std::size_t{20});
        sc.policy.decision_period_s = pol.value("decision_period_s", 0.1);

        sc.use_bandwidth = root.value("use_bandwidth", false);
        sc.fading_enabled = root.value("fading", true);

        const json& jw = root.at("weights");
        if (jw.contains("matrix")) {
            WeightMatrix w;
            const json& rows = jw.at("matrix");
            w.services = rows.size();
            for (const json& row : rows) {
                w.parameters = row.size();
                for (const json& x : row)
                    w.weights.push_back(x.get<double>());
            }
            sc.weights.matrix = std::move(w);
            if (jw.contains("active_services"))
                for (const json& s : jw.at("active_services"))
                    sc.weights.active_services.push_back(s.get<std::size_t>());
            else if (jw.contains("service_level"))
                sc.weights.active_services.push_back(
                    jw.at("service_level").get<std::size_t>() - 1);
        } else if (jw.contains("priority")) {
            PriorityEncoding enc;
            const json& jpri = jw.at("priority");
            enc.service_level = jpri.value("service_level", 3);
            for (auto it = jpri.at("codes").begin(); it != jpri.at("codes").end(); ++it)
                enc.parameter_codes[metric_from_name(it.key())] = it.value().get<int>();
            sc.weights.priority = std::move(enc);
        } else {
            throw std::runtime_error("scenario: weights needs 'matrix' or 'priority'");
        }

        if (root.contains("band_db")) {
            const json& band = root.at("band_db");
            sc.band_lo_db = band.at(0).get<double>();
            sc.band_hi_db = band.at(1).get<double>();
        }
        sc.band_floor = root.value("band_floor", 0.0);
        sc.ping_pong_window_s = root.value("ping_pong_window_s", 5.0);
        sc.duration_s = root.at("duration_s").get<double>();
        sc.seed = root.at("seed").get<std::uint64_t>();
        return sc;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in)
        throw std::ios_base::failure("cannot open scenario file '" + file_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

} // namespace vho
