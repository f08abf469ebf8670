#pragma once

#include "vho/geometry.hpp"

#include <vector>

namespace vho {

/// What position_at does for t past the end of the path.
enum class PathEnd { clamp, error };

/// Waypoint path traversed at uniform speed, with each interior corner
/// replaced by a circular arc (fillet) so the position is continuous and
/// arc-length parameterization stays exact. turn_radius_m entries give the
/// fillet radius per interior waypoint (0 keeps the sharp corner); radii too
/// large for the adjacent segments are shrunk to fit.
class MobilePath {
public:
    MobilePath(std::vector<Vec2> waypoints, double speed_mps,
               std::vector<double> turn_radius_m = {}, PathEnd end_behavior = PathEnd::clamp);

    double speed_mps() const { return speed_; }
    double total_length_m() const { return total_length_; }
    double duration_s() const { return total_length_ / speed_; }
    PathEnd end_behavior() const { return end_behavior_; }

    /// Position after traveling speed * t along the path. Throws
    /// std::out_of_range for t < 0, or for t past the end when the path was
    /// built with PathEnd::error.
    Vec2 position_at(double t) const;

private:
    struct Segment {
        bool is_arc = false;
        Vec2 a, b;          // line endpoints (unused for arcs)
        Vec2 center;        // arc center
        double radius = 0.0;
        double start_angle = 0.0;
        double sweep = 0.0; // signed; positive = counterclockwise
        double length = 0.0;
        double cumulative_end = 0.0;
    };

    Vec2 point_on(const Segment& s, double offset) const;

    std::vector<Segment> segments_;
    double speed_ = 1.0;
    double total_length_ = 0.0;
    PathEnd end_behavior_ = PathEnd::clamp;
};

} // namespace vho
