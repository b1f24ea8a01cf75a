#include "ellinv/implicit_curve.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ellinv {

namespace poly {

void add_term(TermMap& m, const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

TermMap multiply(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            add_term(out, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

TermMap power(const TermMap& a, int k) {
    TermMap out{{{0, 0}, Rational(1)}};
    for (int i = 0; i < k; ++i) out = multiply(out, a);
    return out;
}

std::pair<TermMap, TermMap> divide(const TermMap& p, const TermMap& d) {
    if (d.empty()) throw ZeroCurveError("division by the zero polynomial");
    const auto& [lead_exp, lead_coef] = *d.begin();
    TermMap quotient, remainder, work = p;
    while (!work.empty()) {
        auto [e, c] = *work.begin();
        if (e.first >= lead_exp.first && e.second >= lead_exp.second) {
            Exponents qe{e.first - lead_exp.first, e.second - lead_exp.second};
            Rational qc = c / lead_coef;
            add_term(quotient, qe, qc);
            TermMap sub = multiply(TermMap{{qe, qc}}, d);
            for (const auto& [se, sc] : sub) add_term(work, se, -sc);
        } else {
            add_term(remainder, e, c);
            work.erase(work.begin());
        }
    }
    return {quotient, remainder};
}

} // namespace poly

ImplicitCurve::ImplicitCurve(TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0) it = terms.erase(it);
        else ++it;
    }
    if (terms.empty())
        throw ZeroCurveError("the zero polynomial is not a curve");
    if (terms.begin()->first == Exponents{0, 0})
        throw ZeroCurveError("a nonzero constant has an empty zero set");

    // scale to integers: multiply by the lcm of denominators
    BigInt den_lcm = 1;
    for (const auto& [e, c] : terms) den_lcm = lcm(den_lcm, denominator(c));
    // divide out the content
    BigInt content = 0;
    for (auto& [e, c] : terms) {
        c *= den_lcm;
        content = gcd(content, numerator(c));
    }
    bool negate = numerator(terms.begin()->second) < 0;
    for (auto& [e, c] : terms) {
        c /= Rational(content);
        if (negate) c = -c;
    }
    terms_ = std::move(terms);
}

ImplicitCurve ImplicitCurve::parse(const std::string& text) {
    TermMap terms;
    std::stringstream ss(text);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) throw ParseError("empty term in curve: " + text);
        auto comma = item.find(',');
        auto colon = item.find(':');
        if (comma == std::string::npos || colon == std::string::npos || comma > colon)
            throw ParseError("term must look like \"i,j:coeff\": " + item);
        int i = 0, j = 0;
        try {
            std::size_t pos = 0;
            i = std::stoi(item.substr(0, comma), &pos);
            if (pos != comma) throw ParseError("bad exponent in term: " + item);
            std::string js = item.substr(comma + 1, colon - comma - 1);
            j = std::stoi(js, &pos);
            if (pos != js.size()) throw ParseError("bad exponent in term: " + item);
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent in term: " + item);
        }
        if (i < 0 || j < 0) throw ParseError("negative exponent in term: " + item);
        poly::add_term(terms, {i, j}, rational_from_string(item.substr(colon + 1)));
        any = true;
    }
    if (!any) throw ParseError("empty curve text");
    return ImplicitCurve(std::move(terms));
}

int ImplicitCurve::degree() const {
    const auto& e = terms_.begin()->first;
    return e.first + e.second;
}

Rational ImplicitCurve::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ImplicitCurve::evaluate(const Rational& x, const Rational& y) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int k = 0; k < e.first; ++k) term *= x;
        for (int k = 0; k < e.second; ++k) term *= y;
        sum += term;
    }
    return sum;
}

double ImplicitCurve::evaluate(double x, double y) const {
    double sum = 0;
    for (const auto& [e, c] : terms_)
        sum += to_double(c) * std::pow(x, e.first) * std::pow(y, e.second);
    return sum;
}

std::string ImplicitCurve::text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ';';
        first = false;
        os << e.first << ',' << e.second << ':' << to_string(c);
    }
    return os.str();
}

ImplicitCurve make_line(const Rational& m, const Rational& n, const Rational& p) {
    TermMap t;
    poly::add_term(t, {1, 0}, m);
    poly::add_term(t, {0, 1}, n);
    poly::add_term(t, {0, 0}, p);
    return ImplicitCurve(std::move(t));
}

ImplicitCurve make_conic(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const Rational& e, const Rational& f) {
    TermMap t;
    poly::add_term(t, {2, 0}, a);
    poly::add_term(t, {1, 1}, b);
    poly::add_term(t, {0, 2}, c);
    poly::add_term(t, {1, 0}, d);
    poly::add_term(t, {0, 1}, e);
    poly::add_term(t, {0, 0}, f);
    return ImplicitCurve(std::move(t));
}

double scaled_residual(const ImplicitCurve& c, Point p) {
    double m = std::max({1.0, std::abs(p.x), std::abs(p.y)});
    double denom = 0;
    for (const auto& [e, coef] : c.terms())
        denom += std::abs(to_double(coef)) * std::pow(m, e.first + e.second);
    return std::abs(c.evaluate(p.x, p.y)) / denom;
}

} // namespace ellinv
