#pragma once

#include "vho/cost.hpp"
#include "vho/sim.hpp"
#include "vho/solver.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vho {

/// Raised on malformed CSV input; line() is 1-based.
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Locale-independent float formatting, 9 significant digits.
std::string format_double(double v);

/// Locale-independent strict double parse of a whole field.
double parse_double(const std::string& field, std::size_t line);

/// One nonnegative value per line; blank lines are skipped. Throws CsvError
/// (naming the line) on anything unparseable or negative.
std::vector<double> read_samples_csv(std::istream& in);
std::vector<double> read_samples_file(const std::string& path);

/// Comma-separated numeric rows; every row must have the same width.
DenseMatrix read_matrix_csv(std::istream& in);
DenseMatrix read_matrix_file(const std::string& path);

/// Candidate table: id, technology, rss_dbm, latency_ms, coverage_radius_m
/// per line (an optional header starting with "id" is skipped).
std::vector<NetworkProfile> read_candidates_csv(std::istream& in);
std::vector<NetworkProfile> read_candidates_file(const std::string& path);

/// Weight rows as a plain numeric matrix.
WeightMatrix read_weights_file(const std::string& path);

/// Trace CSV: time_s, x_m, y_m, serving, rss_db, then one z_<id> column per
/// scenario network.
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace,
                     const std::vector<std::string>& network_ids);

/// Events CSV: time_s, from, to, rss_db.
void write_events_csv(std::ostream& out, const std::vector<HandoverEvent>& events);

} // namespace vho
