#include "ellinv/pappus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ellinv {

void validate(const ChainSpec& spec) {
    if (!(spec.ab > 0) || !std::isfinite(spec.ab))
        throw InvalidSpecError("baseline length must be positive");
    if (!(spec.r > 0) || !(spec.r < 1))
        throw InvalidSpecError("split ratio must lie strictly between 0 and 1");
    if (!(spec.k > 0) || !std::isfinite(spec.k))
        throw InvalidSpecError("semi-axis ratio must be positive");
    if (spec.count < 1)
        throw InvalidSpecError("chain needs at least one element");
}

ChainBase chain_base(const ChainSpec& spec) {
    validate(spec);
    double ab = spec.ab, r = spec.r, k = spec.k;
    return {Ellipse({ab / 2, 0}, ab / 2, k * ab / 2),
            Ellipse({r * ab / 2, 0}, r * ab / 2, k * r * ab / 2),
            Ellipse({(1 + r) * ab / 2, 0}, (1 - r) * ab / 2, k * (1 - r) * ab / 2)};
}

// Circles of the flattened picture (semi-axis ratio 1). Flattening divides
// every height by k; the inversion centered at A with radius^2 s = r*ab^2
// turns the two base circles through A into the vertical walls x = r*ab
// and x = ab, between which the images of the chain members stack up as
// equal circles of radius rho_hat = ab(1-r)/2 on the midline x_hat.
// Inverting the n-th stacked circle back gives the closed form below.
struct Circle {
    double cx, cy, rad;
};

static Circle chain_circle(const ChainSpec& spec, int n) {
    double ab = spec.ab, r = spec.r;
    double s = r * ab * ab;
    double rho_hat = ab * (1 - r) / 2;
    double x_hat = ab * (1 + r) / 2;
    double yh = 2.0 * n * rho_hat;
    double f = x_hat * x_hat + yh * yh - rho_hat * rho_hat;
    return {s * x_hat / f, s * yh / f, s * rho_hat / f};
}

std::vector<ChainElement> build_chain(const ChainSpec& spec) {
    validate(spec);
    std::vector<ChainElement> chain;
    chain.reserve(static_cast<std::size_t>(spec.count));
    for (int n = 1; n <= spec.count; ++n) {
        Circle c = chain_circle(spec, n);
        chain.push_back({n, Point{c.cx, spec.k * c.cy}, c.rad, spec.k * c.rad,
                         spec.k * c.cy});
    }
    return chain;
}

bool ChainReport::ok(double threshold) const {
    return worst_tangency <= threshold && worst_homothety <= threshold &&
           worst_identity <= threshold;
}

std::string ChainReport::summary() const {
    std::ostringstream os;
    os << "elements: " << rows.size() << ", worst tangency residual: " << worst_tangency
       << ", worst homothety residual: " << worst_homothety
       << ", worst height-identity residual: " << worst_identity;
    return os.str();
}

ChainReport verify_chain(const ChainSpec& spec, const std::vector<ChainElement>& chain) {
    validate(spec);
    double ab = spec.ab, r = spec.r, k = spec.k;
    Circle outer{ab / 2, 0, ab / 2};
    Circle inner{r * ab / 2, 0, r * ab / 2};
    Circle prev{(1 + r) * ab / 2, 0, (1 - r) * ab / 2}; // the ellipse over CB
    ChainReport report;
    for (const ChainElement& el : chain) {
        // tangency lives in the flattened picture, where the homothetic
        // ellipses become circles
        Circle c{el.center.x, el.center.y / k, el.rx};
        auto gap = [](const Circle& p, const Circle& q, double sign) {
            double d = std::hypot(p.cx - q.cx, p.cy - q.cy);
            return std::abs(d - (p.rad + sign * q.rad));
        };
        ElementReport row{};
        row.n = el.n;
        row.res_outer = gap(outer, c, -1.0);
        row.res_inner = gap(inner, c, +1.0);
        row.res_prev = gap(prev, c, +1.0);
        row.res_homothety = std::abs(el.ry - k * el.rx) / std::abs(el.ry);
        row.res_identity = std::abs(el.h - 2.0 * el.n * el.ry) / std::abs(el.h);
        report.worst_tangency = std::max({report.worst_tangency, row.res_outer,
                                          row.res_inner, row.res_prev});
        report.worst_homothety = std::max(report.worst_homothety, row.res_homothety);
        report.worst_identity = std::max(report.worst_identity, row.res_identity);
        report.rows.push_back(row);
        prev = c;
    }
    return report;
}

ChainWitness chain_inversion_witness(const ChainSpec& spec, int i) {
    validate(spec);
    if (i < 1 || i > spec.count)
        throw IndexOutOfRangeError("witness index outside the chain");
    Circle c = chain_circle(spec, i);
    // squared tangent length from A to the flattened element — the radius
    // of the inversion that fixes it
    double t2 = c.cx * c.cx + c.cy * c.cy - c.rad * c.rad;
    double t = std::sqrt(t2);
    double outer_x = t2 / spec.ab;
    double inner_x = t2 / (spec.r * spec.ab);
    Rational ox = rational_from_double(outer_x), ix = rational_from_double(inner_x);
    return {i,
            Ellipse({0, 0}, t, spec.k * t),
            make_line(Rational(1), Rational(0), -ox),
            make_line(Rational(1), Rational(0), -ix),
            outer_x,
            inner_x,
            inner_x - outer_x};
}

std::string chain_csv(const std::vector<ChainElement>& chain) {
    std::ostringstream os;
    os << "n,cx,cy,rx,ry,h,ratio\n";
    char buf[512];
    for (const ChainElement& el : chain) {
        double ratio = el.h / (el.n * el.ry);
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      el.n, el.center.x, el.center.y, el.rx, el.ry, el.h, ratio);
        os << buf;
    }
    return os.str();
}

} // namespace ellinv
