#include "ellinv/oracles.hpp"

#include <cmath>

namespace ellinv {
namespace oracle {

double radius_by_bisection(double a, double b, const Direction& dir) {
    auto offset = [&](double t) {
        double sx = t * dir.dx() / a, sy = t * dir.dy() / b;
        return sx * sx + sy * sy - 1.0;
    };
    double lo = 0.0, hi = std::max(a, b);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (offset(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Point invert_by_squash(const Ellipse& e, Point p, const Tolerance& tol) {
    if (distance(p, e.center) < tol.center_guard * std::max(e.a, e.b))
        throw CenterSingularError("point is too close to the center of inversion");
    auto [to_local, local] = conjugated(e);
    Point q = apply_motion(to_local, p);
    double stretch = local.a / local.b;
    Point sq{q.x, stretch * q.y};
    double n2 = sq.x * sq.x + sq.y * sq.y;
    Point circ_inv = (local.a * local.a / n2) * sq;
    Point img{circ_inv.x, circ_inv.y / stretch};
    return apply_motion(to_local.inverse(), img);
}

Point invert_by_polar(const Ellipse& e, Point p, const Tolerance& tol) {
    if (distance(p, e.center) < tol.center_guard * std::max(e.a, e.b))
        throw CenterSingularError("point is too close to the center of inversion");
    auto [to_local, local] = conjugated(e);
    Point q = apply_motion(to_local, p);
    double a2 = local.a * local.a, b2 = local.b * local.b;
    // chord-of-contact line intersected with the ray through q:
    //   b^2 u x + a^2 v y = a^2 b^2,   v x - u y = 0
    double m11 = b2 * q.x, m12 = a2 * q.y, r1 = a2 * b2;
    double m21 = q.y, m22 = -q.x, r2 = 0.0;
    double det = m11 * m22 - m12 * m21;
    Point img{(r1 * m22 - m12 * r2) / det, (m11 * r2 - r1 * m21) / det};
    return apply_motion(to_local.inverse(), img);
}

std::vector<double> chain_radii_by_tangency(double r, int count) {
    if (!(r > 0) || !(r < 1) || count < 1)
        throw InvalidSpecError("tangency oracle needs 0 < r < 1 and count >= 1");
    const double xo = 0.5, rad_o = 0.5;  // outer circle over AB
    const double xi = r / 2, rad_i = r / 2;  // inner circle over AC
    std::vector<double> radii;
    // previous element: the circle over CB
    double px = (1 + r) / 2, py = 0.0, pr = (1 - r) / 2;
    for (int n = 1; n <= count; ++n) {
        // for a trial radius rho, the first two tangency equations
        //   |c - (xo,0)| = rad_o - rho   and   |c - (xi,0)| = rad_i + rho
        // are two circles around the base centers; intersect them
        auto center = [&](double rho) {
            double r1 = rad_o - rho, r2 = rad_i + rho;
            double x = (r1 * r1 - r2 * r2 + xi * xi - xo * xo) / (2 * (xi - xo));
            double y2 = r1 * r1 - (x - xo) * (x - xo);
            return Point{x, std::sqrt(std::max(0.0, y2))};
        };
        // ... leaving the third equation as a one-dimensional root in rho
        auto mismatch = [&](double rho) {
            Point c = center(rho);
            return std::hypot(c.x - px, c.y - py) - (pr + rho);
        };
        // unique root below the previous radius: just under it the two
        // circles overlap (negative mismatch), near zero the candidate
        // shrinks into the cusp at A, far from the previous one (positive)
        double lo = 1e-300, hi = pr * (1.0 - 1e-12);
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            (mismatch(mid) > 0.0 ? lo : hi) = mid;
        }
        double rho = 0.5 * (lo + hi);
        Point c = center(rho);
        radii.push_back(rho);
        px = c.x;
        py = c.y;
        pr = rho;
    }
    return radii;
}

} // namespace oracle
} // namespace ellinv
