// Independent reference constructions used to cross-check the library:
// bisection instead of closed forms, conjugation through circle inversion,
// and a direct tangency solver for the chain radii.
#pragma once

#include <vector>

#include "ellinv/inversion.hpp"

namespace ellinv {
namespace oracle {

// Radius of inversion in a given direction found by bisecting the
// ray-ellipse crossing (a, b are the semi-axes; dir is in the local frame).
double radius_by_bisection(double a, double b, const Direction& dir);

// Inversion computed by flattening to the circle picture: scale y by a/b,
// invert in the circle of radius a, scale back.
Point invert_by_squash(const Ellipse& e, Point p, const Tolerance& tol = {});

// Inversion computed as the intersection of the chord-of-contact line of p
// with the ray through p (generic 2x2 solve, no closed form).
Point invert_by_polar(const Ellipse& e, Point p, const Tolerance& tol = {});

// Radii of the first `count` chain circles for a unit baseline and
// semi-axis ratio 1, found by solving the three tangency distance
// equations per element with bisection: centers (x, y) with
//   |c - cO| = RO - rho   (inside the outer circle)
//   |c - cI| = RI + rho   (outside the inner circle over AC)
//   |c - cP| = rP + rho   (outside the previous element)
// The first two reduce to x = rho (1+r) / (1-r) and a height, leaving a
// one-dimensional root in rho that is bracketed by (0, previous radius).
std::vector<double> chain_radii_by_tangency(double r, int count);

} // namespace oracle
} // namespace ellinv
