#include "ellinv/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ellinv {

CollinearQuad make_collinear_quad(Point a, Point b, Point c, Point d,
                                  const Tolerance& tol) {
    std::array<Point, 4> pts{a, b, c, d};
    double best = -1.0;
    Point o = a, far = b;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double dist = distance(pts[i], pts[j]);
            if (dist < tol.abs_floor)
                throw DegenerateQuadError("coincident points in quadruple");
            if (dist > best) {
                best = dist;
                o = pts[i];
                far = pts[j];
            }
        }
    Direction dir = Direction::of(o, far);
    for (const Point& p : pts)
        if (std::abs(cross(p - o, dir.vec())) > tol.rel * best + tol.abs_floor)
            throw OffLineError("quadruple is not collinear");
    return {a, b, c, d, o, dir};
}

double inverse_distance(const Ellipse& e, Point p, Point t, const Tolerance& tol) {
    Point o = e.center;
    double op = distance(o, p), ot = distance(o, t), pt = distance(p, t);
    if (op < tol.center_guard * std::max(e.a, e.b) ||
        ot < tol.center_guard * std::max(e.a, e.b))
        throw CenterSingularError("inverse distance undefined at the center");
    double w = directional_radius(e, Direction::of(o, p)).w;
    if (are_collinear(o, p, t, tol))
        return w * w * pt / (op * ot);
    double u = directional_radius(e, Direction::of(o, t)).w;
    double w2 = w * w, u2 = u * u;
    double radicand = (w2 - u2) * (w2 * ot * ot - u2 * op * op) + w2 * u2 * pt * pt;
    return std::sqrt(std::max(0.0, radicand)) / (op * ot);
}

double cross_ratio(const CollinearQuad& q, const Tolerance& tol) {
    double ta = signed_distance_along(q.line_origin, q.dir, q.a, tol);
    double tb = signed_distance_along(q.line_origin, q.dir, q.b, tol);
    double tc = signed_distance_along(q.line_origin, q.dir, q.c, tol);
    double td = signed_distance_along(q.line_origin, q.dir, q.d, tol);
    double ad = td - ta, bc = tc - tb;
    if (std::abs(ad) < tol.abs_floor || std::abs(bc) < tol.abs_floor)
        throw DegenerateQuadError("vanishing denominator in cross ratio");
    return ((tc - ta) * (td - tb)) / (ad * bc);
}

double cross_ratio_magnitudes(Point a, Point b, Point c, Point d,
                              const Tolerance& tol) {
    double ad = distance(a, d), bc = distance(b, c);
    if (ad < tol.abs_floor || bc < tol.abs_floor)
        throw DegenerateQuadError("vanishing denominator in cross ratio");
    return (distance(a, c) * distance(b, d)) / (ad * bc);
}

bool is_harmonic(Point q1, Point q2, Point p, Point p_prime, const Tolerance& tol) {
    if (!are_collinear(q1, q2, p, tol) || !are_collinear(q1, q2, p_prime, tol))
        throw OffLineError("harmonic test needs four collinear points");
    double q1p = distance(q1, p), q2pp = distance(q2, p_prime);
    double q1pp = distance(q1, p_prime), q2p = distance(q2, p);
    if (q1pp < tol.abs_floor || q2p < tol.abs_floor)
        throw DegenerateQuadError("vanishing denominator in harmonic test");
    double ratio = (q1p * q2pp) / (q1pp * q2p);
    return std::abs(ratio - 1.0) <= 100.0 * tol.rel;
}

Point harmonic_conjugate(Point q1, Point q2, Point p, const Tolerance& tol) {
    double seg = distance(q1, q2);
    if (seg < tol.abs_floor)
        throw DegenerateQuadError("segment endpoints coincide");
    if (!are_collinear(q1, q2, p, tol))
        throw OffLineError("point is not on the segment's line");
    Point mid = 0.5 * (q1 + q2);
    double w = 0.5 * seg;
    double d = distance(p, mid);
    if (d < tol.abs_floor)
        throw MidpointSingularError("conjugate of the midpoint is at infinity");
    return mid + (w * w / (d * d)) * (p - mid);
}

} // namespace ellinv
