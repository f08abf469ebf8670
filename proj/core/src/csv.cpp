#include "vho/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vho {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open file '" + path + "'");
    return in;
}

} // namespace

CsvError::CsvError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_double(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& field, std::size_t line) {
    const std::string t = trim(field);
    if (t.empty())
        throw CsvError(line, "empty numeric field");
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw CsvError(line, "cannot parse '" + t + "' as a number");
    return value;
}

std::vector<double> read_samples_csv(std::istream& in) {
    std::vector<double> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty())
            continue;
        const double v = parse_double(t, line_no);
        if (v < 0.0)
            throw CsvError(line_no, "negative amplitude " + t);
        samples.push_back(v);
    }
    return samples;
}

std::vector<double> read_samples_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_samples_csv(in);
}

DenseMatrix read_matrix_csv(std::istream& in) {
    std::vector<double> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const std::vector<std::string> fields = split_fields(line);
        if (cols == 0)
            cols = fields.size();
        else if (fields.size() != cols)
            throw CsvError(line_no, "expected " + std::to_string(cols) + " fields, got " +
                                        std::to_string(fields.size()));
        for (const std::string& f : fields)
            entries.push_back(parse_double(f, line_no));
        ++rows;
    }
    if (rows == 0)
        throw CsvError(1, "empty matrix");
    return DenseMatrix(rows, cols, std::move(entries));
}

DenseMatrix read_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix_csv(in);
}

std::vector<NetworkProfile> read_candidates_csv(std::istream& in) {
    std::vector<NetworkProfile> candidates;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const std::vector<std::string> fields = split_fields(line);
        if (line_no == 1 && !fields.empty() && fields[0] == "id")
            continue; // header
        if (fields.size() != 5)
            throw CsvError(line_no,
                           "expected id, technology, rss_dbm, latency_ms, coverage_radius_m");
        NetworkProfile p;
        p.id = fields[0];
        p.technology = fields[1];
        if (p.id.empty())
            throw CsvError(line_no, "empty network id");
        p.raw_metrics[Metric::rss] = parse_double(fields[2], line_no);
        p.raw_metrics[Metric::latency] = parse_double(fields[3], line_no);
        p.raw_metrics[Metric::coverage] = parse_double(fields[4], line_no);
        if (!(p.raw_metrics[Metric::latency] > 0.0))
            throw CsvError(line_no, "latency must be > 0");
        if (!(p.raw_metrics[Metric::coverage] > 0.0))
            throw CsvError(line_no, "coverage radius must be > 0");
        candidates.push_back(std::move(p));
    }
    return candidates;
}

std::vector<NetworkProfile> read_candidates_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_candidates_csv(in);
}

WeightMatrix read_weights_file(const std::string& path) {
    auto in = open_or_throw(path);
    const DenseMatrix m = read_matrix_csv(in);
    WeightMatrix w;
    w.services = m.rows();
    w.parameters = m.cols();
    w.weights = m.entries();
    return w;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace,
                     const std::vector<std::string>& network_ids) {
    out << "time_s,x_m,y_m,serving,rss_db";
    for (const std::string& id : network_ids)
        out << ",z_" << id;
    out << "\n";
    for (const TraceRecord& r : trace) {
        out << format_double(r.time_s) << ',' << format_double(r.position.x) << ','
            << format_double(r.position.y) << ',' << r.serving << ','
            << format_double(r.rss_db);
        for (double z : r.z)
            out << ',' << format_double(z);
        out << "\n";
    }
}

void write_events_csv(std::ostream& out, const std::vector<HandoverEvent>& events) {
    out << "time_s,from,to,rss_db\n";
    for (const HandoverEvent& ev : events)
        out << format_double(ev.time_s) << ',' << ev.from << ',' << ev.to << ','
            << format_double(ev.rss_db_at_decision) << "\n";
}

} // namespace vho
