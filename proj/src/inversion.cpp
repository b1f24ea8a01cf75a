#include "ellinv/inversion.hpp"

#include <cmath>

namespace ellinv {

Ellipse::Ellipse(Point c, double a_, double b_, double phi_)
    : center(c), a(a_), b(b_), phi(phi_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b) ||
        !std::isfinite(phi) || !std::isfinite(c.x) || !std::isfinite(c.y))
        throw InvalidSpecError("ellipse needs finite center and positive semi-axes");
}

const Point& ExtendedPoint::point() const {
    if (!p_) throw Error("the point at infinity has no coordinates");
    return *p_;
}

std::pair<RigidMotion, Ellipse> conjugated(const Ellipse& e) {
    RigidMotion to_local{-e.phi, {}};
    Point t = apply_motion(to_local, e.center);
    to_local.translation = {-t.x, -t.y};
    return {to_local, Ellipse({0.0, 0.0}, e.a, e.b, 0.0)};
}

DirectionalRadius directional_radius(const Ellipse& e, const Direction& dir) {
    double c = std::cos(e.phi), s = std::sin(e.phi);
    // direction expressed in the local frame (rotation by -phi)
    double dx = c * dir.dx() + s * dir.dy();
    double dy = -s * dir.dx() + c * dir.dy();
    double w = 1.0 / std::sqrt((dx / e.a) * (dx / e.a) + (dy / e.b) * (dy / e.b));
    Point q = e.center + w * dir.vec();
    return {dir, w, q};
}

static Point invert_local(const Ellipse& local, Point p) {
    double a2 = local.a * local.a, b2 = local.b * local.b;
    double rho = b2 * p.x * p.x + a2 * p.y * p.y;
    return {a2 * b2 * p.x / rho, a2 * b2 * p.y / rho};
}

ExtendedPoint invert_point(const Ellipse& e, const ExtendedPoint& p) {
    if (p.is_infinity()) return ExtendedPoint::finite(e.center);
    return invert_point(e, p.point());
}

ExtendedPoint invert_point(const Ellipse& e, Point p) {
    if (p.x == e.center.x && p.y == e.center.y) return ExtendedPoint::infinity();
    auto [to_local, local] = conjugated(e);
    Point q = apply_motion(to_local, p);
    double a2 = local.a * local.a, b2 = local.b * local.b;
    double rho = b2 * q.x * q.x + a2 * q.y * q.y;
    if (rho == 0.0) return ExtendedPoint::infinity(); // underflow guard
    Point img{a2 * b2 * q.x / rho, a2 * b2 * q.y / rho};
    return ExtendedPoint::finite(apply_motion(to_local.inverse(), img));
}

static void check_center_guard(const Ellipse& e, Point p, const Tolerance& tol) {
    if (distance(p, e.center) < tol.center_guard * std::max(e.a, e.b))
        throw CenterSingularError("point is too close to the center of inversion");
}

Point invert_finite(const Ellipse& e, Point p, const Tolerance& tol) {
    check_center_guard(e, p, tol);
    return invert_point(e, p).point();
}

Point invert_point_by_ray(const Ellipse& e, Point p, const Tolerance& tol) {
    check_center_guard(e, p, tol);
    auto dr = directional_radius(e, Direction::of(e.center, p));
    double op = distance(p, e.center);
    return e.center + (dr.w * dr.w / (op * op)) * (p - e.center);
}

ImplicitCurve polar_line(const Ellipse& e, Point p, const Tolerance& tol) {
    check_center_guard(e, p, tol);
    auto [to_local, local] = conjugated(e);
    Point q = apply_motion(to_local, p);
    Rational a2 = rational_from_double(local.a) * rational_from_double(local.a);
    Rational b2 = rational_from_double(local.b) * rational_from_double(local.b);
    return make_line(b2 * rational_from_double(q.x), a2 * rational_from_double(q.y),
                     -a2 * b2);
}

double boundary_offset(const Ellipse& e, Point p) {
    auto [to_local, local] = conjugated(e);
    Point q = apply_motion(to_local, p);
    double sx = q.x / local.a, sy = q.y / local.b;
    return sx * sx + sy * sy - 1.0;
}

} // namespace ellinv
