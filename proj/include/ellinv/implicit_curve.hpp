// Bivariate polynomials with exact rational coefficients in a canonical
// form: integer coefficients of content 1, leading coefficient positive in
// graded-lexicographic order.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellinv/geometry.hpp"
#include "ellinv/rational.hpp"

namespace ellinv {

// Exponent pair (i, j) for the monomial x^i y^j.
using Exponents = std::pair<int, int>;

// Descending graded-lexicographic order: higher total degree first, ties
// broken by the larger x exponent.
struct GradedLexDescending {
    bool operator()(const Exponents& l, const Exponents& r) const {
        int dl = l.first + l.second, dr = r.first + r.second;
        if (dl != dr) return dl > dr;
        return l.first > r.first;
    }
};

using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

class ImplicitCurve {
public:
    // Canonicalizes on construction. Throws ZeroCurveError when every
    // coefficient vanishes or only a constant term remains (empty zero set).
    explicit ImplicitCurve(TermMap terms);

    // Parses the canonical text form "i,j:num/den;..." (the "/den" part is
    // optional); duplicate exponent pairs are summed. Throws ParseError.
    static ImplicitCurve parse(const std::string& text);

    int degree() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff(int i, int j) const;

    Rational evaluate(const Rational& x, const Rational& y) const;
    double evaluate(double x, double y) const;

    // Canonical text form; round-trips bit-exactly through parse().
    std::string text() const;

    bool operator==(const ImplicitCurve& o) const { return terms_ == o.terms_; }
    bool operator!=(const ImplicitCurve& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

ImplicitCurve make_line(const Rational& m, const Rational& n, const Rational& p);
ImplicitCurve make_conic(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const Rational& e, const Rational& f);

// |value| / (sum_ij |c_ij| * max(1,|x|,|y|)^(i+j)) — a scale-free membership
// residual for numeric points.
double scaled_residual(const ImplicitCurve& c, Point p);

// Low-level helpers shared with the pushforward machinery.
namespace poly {
void add_term(TermMap& m, const Exponents& e, const Rational& c);
TermMap multiply(const TermMap& a, const TermMap& b);
TermMap power(const TermMap& a, int k);
// Single-divisor multivariate division (quotient, remainder); the divisor
// divides the polynomial exactly iff the remainder is empty.
std::pair<TermMap, TermMap> divide(const TermMap& p, const TermMap& d);
} // namespace poly

} // namespace ellinv
