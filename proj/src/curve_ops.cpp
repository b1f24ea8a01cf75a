#include "ellinv/curve_ops.hpp"

#include <cmath>

namespace ellinv {

InversionEllipseExact::InversionEllipseExact(Rational a2_, Rational b2_)
    : a2(std::move(a2_)), b2(std::move(b2_)) {
    if (a2 <= 0 || b2 <= 0)
        throw InvalidSpecError("squared semi-axes must be positive");
}

RationalPoint psi_exact(const InversionEllipseExact& e, const RationalPoint& p) {
    Rational rho = e.b2 * p.x * p.x + e.a2 * p.y * p.y;
    if (rho == 0)
        throw CenterSingularError("exact inversion is undefined at the center");
    Rational s = e.a2 * e.b2;
    return {s * p.x / rho, s * p.y / rho};
}

std::string CurveClass::name() const {
    switch (kind) {
        case LineThroughCenter: return "LineThroughCenter";
        case EllipseThroughCenter: return "EllipseThroughCenter";
        case HomotheticConic: return "HomotheticConic";
        case Cubic: return "Cubic";
        case Quartic: return "Quartic";
        case Other: break;
    }
    return "Other(" + std::to_string(degree) + ")";
}

static TermMap rho_poly(const InversionEllipseExact& e) {
    return TermMap{{{2, 0}, e.b2}, {{0, 2}, e.a2}};
}

ImplicitCurve pushforward(const InversionEllipseExact& e, const ImplicitCurve& c) {
    int d = c.degree();
    if (d > 2)
        throw UnsupportedDegreeError("pushforward accepts lines and conics only");
    Rational s = e.a2 * e.b2;
    TermMap rho = rho_poly(e);
    TermMap acc;
    for (const auto& [exp, coef] : c.terms()) {
        int total = exp.first + exp.second;
        Rational factor = coef;
        for (int k = 0; k < total; ++k) factor *= s;
        TermMap term = poly::multiply(TermMap{{exp, factor}}, poly::power(rho, d - total));
        for (const auto& [te, tc] : term) poly::add_term(acc, te, tc);
    }
    if (acc.empty()) throw ZeroCurveError("image polynomial vanished");
    // strip spurious factors supported only at the center
    while (true) {
        auto [q, r] = poly::divide(acc, rho);
        if (!r.empty() || q.empty()) break;
        acc = std::move(q);
    }
    return ImplicitCurve(std::move(acc));
}

bool is_homothetic(const InversionEllipseExact& e, const ImplicitCurve& c) {
    if (c.degree() != 2)
        throw UnsupportedDegreeError("homothety test expects a degree-2 curve");
    return c.coeff(1, 1) == 0 && c.coeff(2, 0) * e.a2 == c.coeff(0, 2) * e.b2;
}

CurveClass classify_curve(const InversionEllipseExact& e, const ImplicitCurve& c) {
    int d = c.degree();
    bool through_center = c.coeff(0, 0) == 0;
    if (d == 1)
        return through_center ? CurveClass{CurveClass::LineThroughCenter, 1}
                              : CurveClass{CurveClass::Other, 1};
    if (d == 2) {
        if (is_homothetic(e, c))
            return through_center ? CurveClass{CurveClass::EllipseThroughCenter, 2}
                                  : CurveClass{CurveClass::HomotheticConic, 2};
        return CurveClass{CurveClass::Other, 2};
    }
    if (d == 3) return CurveClass{CurveClass::Cubic, 3};
    if (d == 4) return CurveClass{CurveClass::Quartic, 4};
    return CurveClass{CurveClass::Other, d};
}

CurveClass classify_image(const InversionEllipseExact& e, const ImplicitCurve& c) {
    return classify_curve(e, pushforward(e, c));
}

Direction tangent_direction_at_origin(const ImplicitCurve& c) {
    if (c.coeff(0, 0) != 0)
        throw InvalidSpecError("curve does not pass through the origin");
    Rational d = c.coeff(1, 0), ee = c.coeff(0, 1);
    if (d == 0 && ee == 0)
        throw SingularAtOriginError("no tangent line: the origin is a singular point");
    return {to_double(ee), -to_double(d)};
}

static void require_line_off_center(const ImplicitCurve& l) {
    if (l.degree() != 1)
        throw UnsupportedDegreeError("operation expects a line");
    if (l.coeff(0, 0) == 0)
        throw InvalidSpecError("line passes through the center");
}

bool images_orthogonal_at_origin(const InversionEllipseExact& e,
                                 const ImplicitCurve& l1, const ImplicitCurve& l2) {
    require_line_off_center(l1);
    require_line_off_center(l2);
    ImplicitCurve i1 = pushforward(e, l1), i2 = pushforward(e, l2);
    return i1.coeff(1, 0) * i2.coeff(1, 0) + i1.coeff(0, 1) * i2.coeff(0, 1) == 0;
}

bool common_points_of_images(const InversionEllipseExact& e,
                             const std::vector<ImplicitCurve>& lines,
                             const RationalPoint& h) {
    if (h.x == 0 && h.y == 0)
        throw InvalidSpecError("the common point must differ from the center");
    RationalPoint hp = psi_exact(e, h);
    for (const ImplicitCurve& l : lines) {
        if (l.degree() != 1)
            throw UnsupportedDegreeError("pencil members must be lines");
        ImplicitCurve img = pushforward(e, l);
        if (img.evaluate(Rational(0), Rational(0)) != 0) return false;
        if (img.evaluate(hp.x, hp.y) != 0) return false;
    }
    return true;
}

bool images_tangent_at_origin(const InversionEllipseExact& e,
                              const std::vector<ImplicitCurve>& lines) {
    if (lines.empty()) throw EmptyResultError("no lines given");
    for (const ImplicitCurve& l : lines) require_line_off_center(l);
    const Rational m0 = lines.front().coeff(1, 0), n0 = lines.front().coeff(0, 1);
    for (const ImplicitCurve& l : lines)
        if (l.coeff(1, 0) * n0 != m0 * l.coeff(0, 1))
            throw InvalidSpecError("lines are not parallel");
    Rational tm, tn;
    bool first = true;
    for (const ImplicitCurve& l : lines) {
        ImplicitCurve img = pushforward(e, l);
        if (img.coeff(0, 0) != 0) return false;
        Rational m = img.coeff(1, 0), n = img.coeff(0, 1);
        if (m == 0 && n == 0) return false;
        if (first) {
            tm = m;
            tn = n;
            first = false;
        } else if (m * tn != tm * n) {
            return false;
        }
    }
    return true;
}

std::vector<Point> sample_image(const Ellipse& e,
                                const std::function<Point(double)>& source,
                                double t0, double t1, int n, const Tolerance& tol) {
    if (n < 2) throw InvalidSpecError("need at least two samples");
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    double guard = tol.center_guard * std::max(e.a, e.b);
    for (int k = 0; k < n; ++k) {
        double t = t0 + (t1 - t0) * static_cast<double>(k) / (n - 1);
        Point p = source(t);
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
        if (distance(p, e.center) < guard) continue;
        out.push_back(invert_point(e, p).point());
    }
    if (out.empty())
        throw EmptyResultError("every sample fell inside the center guard");
    return out;
}

} // namespace ellinv
