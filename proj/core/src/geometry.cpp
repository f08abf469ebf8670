#include "vho/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vho {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

double distance(Vec2 a, Vec2 b) { return norm(a - b); }

Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    return {a.x / n, a.y / n};
}

Vec2 perpendicular(Vec2 a) { return {-a.y, a.x}; }

std::array<Vec2, 6> Hexagon::vertices() const {
    std::array<Vec2, 6> v;
    for (int k = 0; k < 6; ++k) {
        const double angle = std::numbers::pi / 3.0 * k;
        v[k] = {center.x + circumradius * std::cos(angle),
                center.y + circumradius * std::sin(angle)};
    }
    return v;
}

bool Hexagon::contains(Vec2 p) const {
    // inside iff on the inner side of every edge (convex polygon, CCW order)
    const auto v = vertices();
    for (int k = 0; k < 6; ++k) {
        const Vec2 a = v[k];
        const Vec2 b = v[(k + 1) % 6];
        const Vec2 edge = b - a;
        const Vec2 rel = p - a;
        if (edge.x * rel.y - edge.y * rel.x < 0.0)
            return false;
    }
    return true;
}

double Hexagon::distance_to(Vec2 p) const {
    if (contains(p))
        return 0.0;
    const auto v = vertices();
    double best = point_segment_distance(p, v[0], v[1]);
    for (int k = 1; k < 6; ++k)
        best = std::min(best, point_segment_distance(p, v[k], v[(k + 1) % 6]));
    return best;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len_sq = dot(ab, ab);
    if (len_sq == 0.0)
        return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len_sq, 0.0, 1.0);
    return distance(p, a + ab * t);
}

} // namespace vho
