// Exact pushforward of lines and conics under the inversion map, with the
// classification of the image curves and the derived incidence predicates.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ellinv/implicit_curve.hpp"
#include "ellinv/inversion.hpp"

namespace ellinv {

// Exact-arithmetic twin of the inversion ellipse (axis-aligned, centered
// at the origin), carrying the squared semi-axes.
struct InversionEllipseExact {
    Rational a2;
    Rational b2;

    InversionEllipseExact(Rational a2_, Rational b2_);
};

struct RationalPoint {
    Rational x;
    Rational y;
};

// Exact inversion of a rational point; CenterSingularError at the origin.
RationalPoint psi_exact(const InversionEllipseExact& e, const RationalPoint& p);

struct CurveClass {
    enum Kind { LineThroughCenter, EllipseThroughCenter, HomotheticConic,
                Cubic, Quartic, Other };
    Kind kind;
    int degree;

    std::string name() const;
    bool operator==(const CurveClass& o) const {
        return kind == o.kind && degree == o.degree;
    }
};

// Image of a degree-1 or degree-2 curve under inversion: substitute
//   x <- a^2 b^2 x / rho,  y <- a^2 b^2 y / rho,  rho = b^2 x^2 + a^2 y^2,
// clear rho^degree, strip the maximal exact power of rho (rho vanishes only
// at the center, so only a spurious component is removed), canonicalize.
ImplicitCurve pushforward(const InversionEllipseExact& e, const ImplicitCurve& c);

// Class of a curve by its own exact coefficients.
CurveClass classify_curve(const InversionEllipseExact& e, const ImplicitCurve& c);

// Class of pushforward(e, c).
CurveClass classify_image(const InversionEllipseExact& e, const ImplicitCurve& c);

// Degree-2 curve whose quadratic part is proportional to
// x^2/a^2 + y^2/b^2: no cross term and A a^2 = C b^2.
bool is_homothetic(const InversionEllipseExact& e, const ImplicitCurve& c);

// Direction of the tangent line D x + E y = 0 of a curve through the
// origin; SingularAtOriginError when the linear part vanishes.
Direction tangent_direction_at_origin(const ImplicitCurve& c);

// Images of two lines not through the center meet orthogonally at the
// center: exact dot product of their image tangent normals is zero.
bool images_orthogonal_at_origin(const InversionEllipseExact& e,
                                 const ImplicitCurve& l1, const ImplicitCurve& l2);

// Images of a pencil of lines through h all pass through the center and
// through the inverse of h — both memberships evaluated exactly.
bool common_points_of_images(const InversionEllipseExact& e,
                             const std::vector<ImplicitCurve>& lines,
                             const RationalPoint& h);

// Images of a family of parallel lines (none through the center) are
// tangent to one another at the center: common exact tangent direction.
bool images_tangent_at_origin(const InversionEllipseExact& e,
                              const std::vector<ImplicitCurve>& lines);

// Maps n parametric samples of a source curve through the inversion,
// dropping samples inside the center guard; EmptyResultError when nothing
// survives.
std::vector<Point> sample_image(const Ellipse& e,
                                const std::function<Point(double)>& source,
                                double t0, double t1, int n,
                                const Tolerance& tol = {});

} // namespace ellinv
