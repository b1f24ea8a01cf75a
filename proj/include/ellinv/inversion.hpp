// Inversion with respect to an ellipse: P maps to the point P' on the ray
// from the center O through P with |OP|*|OP'| = w^2, where w is the
// direction-dependent radius |OQ| to the ellipse boundary.
#pragma once

#include <optional>
#include <utility>

#include "ellinv/geometry.hpp"
#include "ellinv/implicit_curve.hpp"

namespace ellinv {

// The inversion ellipse: semi-axis a along the local x axis, b along the
// local y axis, rotated by phi and centered anywhere.
struct Ellipse {
    Point center{0.0, 0.0};
    double a = 1.0;
    double b = 1.0;
    double phi = 0.0;

    Ellipse() = default;
    Ellipse(Point c, double a_, double b_, double phi_ = 0.0);
};

// A finite point or the single point at infinity that the center trades
// places with under inversion.
class ExtendedPoint {
public:
    static ExtendedPoint finite(Point p) { return ExtendedPoint(p); }
    static ExtendedPoint infinity() { return ExtendedPoint(); }

    bool is_infinity() const { return !p_.has_value(); }
    const Point& point() const;

private:
    ExtendedPoint() = default;
    explicit ExtendedPoint(Point p) : p_(p) {}
    std::optional<Point> p_;
};

// A direction together with its radius of inversion w = |OQ|, Q being the
// intersection of the ray from the center with the ellipse.
struct DirectionalRadius {
    Direction dir;
    double w;
    Point boundary_point;
};

DirectionalRadius directional_radius(const Ellipse& e, const Direction& dir);

// Total on the extended plane: the center maps to infinity and back; all
// other points map by the closed form (a^2 b^2 u, a^2 b^2 v) / (b^2 u^2 +
// a^2 v^2) in the ellipse's local frame.
ExtendedPoint invert_point(const Ellipse& e, const ExtendedPoint& p);
ExtendedPoint invert_point(const Ellipse& e, Point p);

// Finite-only convenience used by the metric and sampling layers; rejects
// inputs inside the center guard with CenterSingularError.
Point invert_finite(const Ellipse& e, Point p, const Tolerance& tol = {});

// The defining ray construction: scale p - O by w^2 / |OP|^2. Agrees with
// invert_point to rounding; kept separate as an independent route.
Point invert_point_by_ray(const Ellipse& e, Point p, const Tolerance& tol = {});

// The chord-of-contact line of p = (u, v) in the ellipse's local frame:
// b^2 u x + a^2 v y - a^2 b^2 = 0. Its intersection with the ray through p
// is the inverse point, for p interior or exterior alike.
ImplicitCurve polar_line(const Ellipse& e, Point p, const Tolerance& tol = {});

// The motion taking world coordinates to the ellipse's local frame, paired
// with the axis-aligned origin-centered copy of the ellipse.
std::pair<RigidMotion, Ellipse> conjugated(const Ellipse& e);

// Signed interior/exterior indicator (u/a)^2 + (v/b)^2 - 1 in local frame.
double boundary_offset(const Ellipse& e, Point p);

} // namespace ellinv
