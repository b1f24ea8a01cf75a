// Minimal SVG scene writer: polylines, markers and labels in world
// coordinates, mapped to the viewport with a uniform (aspect-preserving)
// scale. Points outside the world window are clipped away.
#pragma once

#include <string>
#include <vector>

#include "ellinv/geometry.hpp"

namespace ellinv {

struct SvgStyle {
    std::string stroke = "#000000";
    double width = 1.5;
    std::string dash;  // e.g. "6,4"; empty for solid
};

class SvgScene {
public:
    SvgScene(double xmin, double xmax, double ymin, double ymax, int width_px = 760);

    void add_polyline(const std::vector<Point>& pts, const SvgStyle& style,
                      bool closed = false);
    void add_marker(Point p, const std::string& color = "#000000");
    void add_label(Point p, const std::string& text);

    std::string to_string() const;

private:
    struct Line {
        std::vector<Point> pts;
        SvgStyle style;
        bool closed;
    };
    struct Marker {
        Point p;
        std::string color;
    };
    struct Label {
        Point p;
        std::string text;
    };

    bool inside(Point p) const;
    void map(Point p, double& px, double& py) const;

    double xmin_, xmax_, ymin_, ymax_;
    int wpx_, hpx_;
    double scale_, margin_;
    std::vector<Line> lines_;
    std::vector<Marker> markers_;
    std::vector<Label> labels_;
};

} // namespace ellinv
