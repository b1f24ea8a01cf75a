// Metric relations of inverse points: the distance formula with its
// collinear branch, cross ratios, and harmonic conjugates.
#pragma once

#include "ellinv/geometry.hpp"
#include "ellinv/inversion.hpp"

namespace ellinv {

// Four pairwise-distinct collinear points with their common line.
struct CollinearQuad {
    Point a, b, c, d;
    Point line_origin;
    Direction dir;
};

// Validates distinctness (DegenerateQuadError) and collinearity
// (OffLineError); the carrier line runs through the two farthest-apart
// points.
CollinearQuad make_collinear_quad(Point a, Point b, Point c, Point d,
                                  const Tolerance& tol = {});

// Distance between the inverse images of p and t, computed from the source
// data alone. With w, u the directional radii toward p and t:
//   collinear with O:  w^2 * |PT| / (|OP| * |OT|)
//   otherwise: sqrt((w^2-u^2)(w^2 |OT|^2 - u^2 |OP|^2) + w^2 u^2 |PT|^2)
//              / (|OP| * |OT|)
double inverse_distance(const Ellipse& e, Point p, Point t, const Tolerance& tol = {});

// (AC * BD) / (AD * BC) in signed distances along the quad's line; the
// value is independent of the direction's orientation.
double cross_ratio(const CollinearQuad& q, const Tolerance& tol = {});

// The same combination in unsigned distances; defined for any four points
// (used for quadruples carried onto a curve, where signed positions along
// one line no longer exist).
double cross_ratio_magnitudes(Point a, Point b, Point c, Point d,
                              const Tolerance& tol = {});

// True iff (|Q1P| * |Q2P'|) / (|Q1P'| * |Q2P|) = 1 within tolerance —
// magnitudes, so a harmonic quadruple reports true (its signed cross ratio
// is -1).
bool is_harmonic(Point q1, Point q2, Point p, Point p_prime,
                 const Tolerance& tol = {});

// The point p' on the ray from the midpoint O of q1 q2 through p with
// |OP| * |OP'| = (|q1 q2| / 2)^2; MidpointSingularError when p sits at the
// midpoint (the conjugate escapes to infinity).
Point harmonic_conjugate(Point q1, Point q2, Point p, const Tolerance& tol = {});

} // namespace ellinv
