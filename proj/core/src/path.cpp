#include "vho/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vho {

namespace {

// Signed angle from direction u to direction v, in (-pi, pi].
double turn_angle(Vec2 u, Vec2 v) {
    return std::atan2(u.x * v.y - u.y * v.x, u.x * v.x + u.y * v.y);
}

} // namespace

MobilePath::MobilePath(std::vector<Vec2> waypoints, double speed_mps,
                       std::vector<double> turn_radius_m, PathEnd end_behavior)
    : speed_(speed_mps), end_behavior_(end_behavior) {
    if (waypoints.size() < 2)
        throw std::invalid_argument("path: needs at least two waypoints");
    if (!(speed_mps > 0.0))
        throw std::invalid_argument("path: speed must be > 0");
    const std::size_t joints = waypoints.size() - 2;
    if (turn_radius_m.empty())
        turn_radius_m.assign(joints, 0.0);
    if (turn_radius_m.size() == 1 && joints > 1)
        turn_radius_m.assign(joints, turn_radius_m.front());
    if (turn_radius_m.size() != joints)
        throw std::invalid_argument("path: one turn radius per interior waypoint");

    // Trim distance consumed at the tail of each leg by the following fillet;
    // tracks where the next straight piece starts.
    Vec2 cursor = waypoints.front();
    double running = 0.0;

    const auto push_line = [&](Vec2 a, Vec2 b) {
        const double len = distance(a, b);
        if (len <= 0.0)
            return;
        Segment s;
        s.is_arc = false;
        s.a = a;
        s.b = b;
        s.length = len;
        running += len;
        s.cumulative_end = running;
        segments_.push_back(s);
    };

    for (std::size_t j = 1; j + 1 < waypoints.size(); ++j) {
        const Vec2 prev = waypoints[j - 1];
        const Vec2 corner = waypoints[j];
        const Vec2 next = waypoints[j + 1];
        const double len_in = distance(prev, corner);
        const double len_out = distance(corner, next);
        if (len_in <= 0.0 || len_out <= 0.0)
            throw std::invalid_argument("path: repeated waypoint");
        const Vec2 u = normalized(corner - prev);
        const Vec2 v = normalized(next - corner);
        const double phi = turn_angle(u, v);
        double radius = turn_radius_m[j - 1];
        if (radius < 0.0)
            throw std::invalid_argument("path: turn radius must be >= 0");

        if (radius == 0.0 || std::abs(phi) < 1e-12 || std::abs(std::abs(phi) - 3.141592653589793) < 1e-9) {
            // sharp corner, straight continuation, or a U-turn (no fillet fits)
            push_line(cursor, corner);
            cursor = corner;
            continue;
        }

        // tangent offset of the fillet along both legs, shrunk to fit
        double offset = radius * std::tan(std::abs(phi) / 2.0);
        const double max_offset = std::min(distance(cursor, corner), len_out / 2.0);
        if (offset > max_offset) {
            offset = max_offset;
            radius = offset / std::tan(std::abs(phi) / 2.0);
        }

        const Vec2 arc_start = corner - u * offset;
        const Vec2 side = perpendicular(u); // +90 deg; matches positive phi
        const double sign = phi > 0.0 ? 1.0 : -1.0;
        const Vec2 center = arc_start + side * (sign * radius);

        push_line(cursor, arc_start);

        Segment arc;
        arc.is_arc = true;
        arc.center = center;
        arc.radius = radius;
        arc.start_angle = std::atan2(arc_start.y - center.y, arc_start.x - center.x);
        arc.sweep = phi;
        arc.length = radius * std::abs(phi);
        running += arc.length;
        arc.cumulative_end = running;
        segments_.push_back(arc);

        cursor = corner + v * offset;
    }
    push_line(cursor, waypoints.back());

    total_length_ = running;
    if (!(total_length_ > 0.0))
        throw std::invalid_argument("path: total length must be > 0");
}

Vec2 MobilePath::point_on(const Segment& s, double offset) const {
    if (!s.is_arc) {
        const double t = offset / s.length;
        return s.a + (s.b - s.a) * t;
    }
    const double angle = s.start_angle + s.sweep * (offset / s.length);
    return {s.center.x + s.radius * std::cos(angle), s.center.y + s.radius * std::sin(angle)};
}

Vec2 MobilePath::position_at(double t) const {
    if (t < 0.0)
        throw std::out_of_range("path: negative time");
    double dist = speed_ * t;
    if (dist > total_length_) {
        if (end_behavior_ == PathEnd::error)
            throw std::out_of_range("path: time past the end of the path");
        dist = total_length_;
    }
    // first segment whose cumulative length reaches dist
    const auto it = std::lower_bound(
        segments_.begin(), segments_.end(), dist,
        [](const Segment& s, double d) { return s.cumulative_end < d; });
    const Segment& s = it == segments_.end() ? segments_.back() : *it;
    const double seg_start = s.cumulative_end - s.length;
    return point_on(s, std::clamp(dist - seg_start, 0.0, s.length));
}

} // namespace vho
