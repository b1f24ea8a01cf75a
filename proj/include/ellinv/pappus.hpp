// The chain of pairwise-tangent homothetic ellipses inscribed between two
// inner semiellipses and an outer one over a common baseline, with the
// center-height identity h_n = 2 n r_n.
#pragma once

#include <string>
#include <vector>

#include "ellinv/implicit_curve.hpp"
#include "ellinv/inversion.hpp"

namespace ellinv {

// Baseline from A = (0,0) to B = (ab, 0); C = (r*ab, 0) splits it. The
// outer ellipse spans AB, the inner ones AC and CB, all with vertical to
// horizontal semi-axis ratio k, drawn above the baseline.
struct ChainSpec {
    double ab = 1.0;
    double r = 2.0 / 3.0;
    double k = 0.6;
    int count = 5;
};

// One chain ellipse: rx along the baseline, ry = k * rx perpendicular to
// it, center height h above the baseline.
struct ChainElement {
    int n;
    Point center;
    double rx;
    double ry;
    double h;
};

struct ElementReport {
    int n;
    double res_outer;      // internal tangency to the outer ellipse
    double res_inner;      // external tangency to the inner ellipse over AC
    double res_prev;       // external tangency to the previous element
    double res_homothety;  // |ry - k*rx| / ry
    double res_identity;   // |h - 2n*ry| / h
};

struct ChainReport {
    std::vector<ElementReport> rows;
    double worst_tangency = 0;
    double worst_homothety = 0;
    double worst_identity = 0;

    bool ok(double threshold = 1e-9) const;
    std::string summary() const;
};

// The tangency certificate behind each element: an inversion ellipse
// centered at A that fixes element i and flattens the two base ellipses
// through A into the two vertical lines tangent to it.
struct ChainWitness {
    int index;
    Ellipse inversion_ellipse;
    ImplicitCurve outer_wall; // image of the outer ellipse
    ImplicitCurve inner_wall; // image of the inner ellipse over AC
    double outer_x;
    double inner_x;
    double gap; // inner_x - outer_x = 2 * rx of element i
};

void validate(const ChainSpec& spec);

// The three base ellipses (full outlines; the figure draws their upper
// halves): outer over AB, inner over AC, inner over CB.
struct ChainBase {
    Ellipse outer;
    Ellipse inner_left;
    Ellipse inner_right;
};
ChainBase chain_base(const ChainSpec& spec);

std::vector<ChainElement> build_chain(const ChainSpec& spec);

ChainReport verify_chain(const ChainSpec& spec, const std::vector<ChainElement>& chain);

ChainWitness chain_inversion_witness(const ChainSpec& spec, int i);

// CSV export: header n,cx,cy,rx,ry,h,ratio with ratio = h / (n * ry),
// 17 significant digits.
std::string chain_csv(const std::vector<ChainElement>& chain);

} // namespace ellinv
