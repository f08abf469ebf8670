#pragma once

#include <array>

namespace vho {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

double dot(Vec2 a, Vec2 b);
double norm(Vec2 a);
double distance(Vec2 a, Vec2 b);
Vec2 normalized(Vec2 a);
Vec2 perpendicular(Vec2 a); // rotated +90 degrees

/// Regular flat-top hexagon (vertices at 0, 60, ..., 300 degrees from the
/// center at the circumradius).
struct Hexagon {
    Vec2 center{0.0, 0.0};
    double circumradius = 1.0;

    std::array<Vec2, 6> vertices() const;
    bool contains(Vec2 p) const;

    /// Euclidean distance from p to the hexagon (0 when inside).
    double distance_to(Vec2 p) const;
};

/// Distance from point p to the segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

} // namespace vho
