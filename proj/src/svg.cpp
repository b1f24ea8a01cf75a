#include "ellinv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ellinv {

SvgScene::SvgScene(double xmin, double xmax, double ymin, double ymax, int width_px)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), wpx_(width_px) {
    if (!(xmax > xmin) || !(ymax > ymin) || width_px < 64)
        throw InvalidSpecError("degenerate drawing window");
    margin_ = 0.04 * wpx_;
    scale_ = (wpx_ - 2 * margin_) / (xmax_ - xmin_);
    hpx_ = static_cast<int>(std::lround((ymax_ - ymin_) * scale_ + 2 * margin_));
}

bool SvgScene::inside(Point p) const {
    return std::isfinite(p.x) && std::isfinite(p.y) && p.x >= xmin_ && p.x <= xmax_ &&
           p.y >= ymin_ && p.y <= ymax_;
}

void SvgScene::map(Point p, double& px, double& py) const {
    px = margin_ + (p.x - xmin_) * scale_;
    py = hpx_ - (margin_ + (p.y - ymin_) * scale_);
}

void SvgScene::add_polyline(const std::vector<Point>& pts, const SvgStyle& style,
                            bool closed) {
    // split at clipped points so the emitted coordinates all stay inside
    // the viewport; a run loses its closing stroke when clipping cuts it
    std::vector<Point> run;
    bool cut = false;
    auto flush = [&](bool close_run) {
        if (run.size() >= 2) lines_.push_back({run, style, close_run});
        run.clear();
    };
    for (const Point& p : pts) {
        if (inside(p)) {
            run.push_back(p);
        } else {
            cut = true;
            flush(false);
        }
    }
    flush(closed && !cut);
}

void SvgScene::add_marker(Point p, const std::string& color) {
    if (inside(p)) markers_.push_back({p, color});
}

void SvgScene::add_label(Point p, const std::string& text) {
    if (inside(p)) labels_.push_back({p, text});
}

std::string SvgScene::to_string() const {
    std::ostringstream os;
    char buf[128];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx_ << "\" height=\""
       << hpx_ << "\" viewBox=\"0 0 " << wpx_ << ' ' << hpx_ << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const Line& l : lines_) {
        os << "<path d=\"";
        bool first = true;
        for (const Point& p : l.pts) {
            double px, py;
            map(p, px, py);
            std::snprintf(buf, sizeof buf, "%c%.2f %.2f ", first ? 'M' : 'L', px, py);
            os << buf;
            first = false;
        }
        if (l.closed) os << 'Z';
        os << "\" fill=\"none\" stroke=\"" << l.style.stroke << "\" stroke-width=\""
           << l.style.width << '"';
        if (!l.style.dash.empty()) os << " stroke-dasharray=\"" << l.style.dash << '"';
        os << "/>\n";
    }
    for (const Marker& m : markers_) {
        double px, py;
        map(m.p, px, py);
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n", px, py,
                      m.color.c_str());
        os << buf;
    }
    for (const Label& l : labels_) {
        double px, py;
        map(l.p, px, py);
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\" "
                      "font-family=\"sans-serif\">",
                      px + 6, py - 6);
        os << buf << l.text << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ellinv
