#include "ellinv/geometry.hpp"

#include <algorithm>

namespace ellinv {

Direction::Direction(double dx, double dy) {
    double n = std::hypot(dx, dy);
    if (!(n > 0.0) || !std::isfinite(n))
        throw InvalidSpecError("direction must be a nonzero finite vector");
    dx_ = dx / n;
    dy_ = dy / n;
}

RigidMotion RigidMotion::inverse() const {
    double c = std::cos(phi), s = std::sin(phi);
    // inverse rotation applied to the negated translation
    Point t{-(c * translation.x + s * translation.y),
            -(-s * translation.x + c * translation.y)};
    return {-phi, t};
}

double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

bool are_collinear(Point a, Point b, Point c, const Tolerance& tol) {
    double scale = std::max({distance(a, b), distance(a, c), distance(b, c)});
    if (scale == 0.0) return true; // coincident points
    double cr = cross(b - a, c - a);
    return std::abs(cr) <= tol.rel * scale * scale + tol.abs_floor;
}

Point apply_motion(const RigidMotion& m, Point p) {
    double c = std::cos(m.phi), s = std::sin(m.phi);
    return {c * p.x - s * p.y + m.translation.x,
            s * p.x + c * p.y + m.translation.y};
}

double signed_distance_along(Point line_origin, const Direction& dir, Point p,
                             const Tolerance& tol) {
    Point rel = p - line_origin;
    double off = std::abs(cross(rel, dir.vec()));
    if (off > tol.rel * norm(rel) + tol.abs_floor)
        throw OffLineError("point is not on the given line");
    return dot(rel, dir.vec());
}

} // namespace ellinv
