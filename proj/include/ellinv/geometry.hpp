// Points, directions, rigid motions and the shared tolerance conventions.
#pragma once

#include <cmath>

#include "ellinv/errors.hpp"

namespace ellinv {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

// Unit direction vector; normalized on construction so dx^2 + dy^2 = 1.
class Direction {
public:
    Direction(double dx, double dy);
    static Direction of(Point from, Point to) { return {to.x - from.x, to.y - from.y}; }

    double dx() const { return dx_; }
    double dy() const { return dy_; }
    Point vec() const { return {dx_, dy_}; }

private:
    double dx_;
    double dy_;
};

// Rotation by phi about the origin followed by a translation.
struct RigidMotion {
    double phi = 0.0;
    Point translation{0.0, 0.0};

    RigidMotion inverse() const;
};

// Shared numeric tolerances. rel is dimensionless, abs_floor is a length
// floor, center_guard (times max semi-axis) rejects near-center inputs in
// the constructions that are singular there.
struct Tolerance {
    double rel = 1e-10;
    double abs_floor = 1e-14;
    double center_guard = 1e-12;
};

inline Tolerance default_tolerance() { return {}; }

double distance(Point p, Point q);

// True iff the cross product (b-a) x (c-a) has magnitude at most
// tol.rel * scale^2, scale being the largest pairwise distance.
bool are_collinear(Point a, Point b, Point c, const Tolerance& tol = {});

Point apply_motion(const RigidMotion& m, Point p);

// Scalar t with p = line_origin + t * dir; throws OffLineError when p is
// farther from the line than the scaled tolerance.
double signed_distance_along(Point line_origin, const Direction& dir, Point p,
                             const Tolerance& tol = {});

} // namespace ellinv
