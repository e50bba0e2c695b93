#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "gallery.hpp"

namespace artgallery {

struct RenderOptions {
    double stroke_width = 0.05;
    bool highlight_segments = true;
    bool show_regions = true;
};

namespace detail {

/// Decimal approximation for drawing only.
inline std::string svg_number(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.get_d());
    return buf;
}

inline std::string svg_points(const std::vector<Point>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += (i ? " " : "") + svg_number(pts[i].x) + "," + svg_number(-pts[i].y);
    return s;
}

}  // namespace detail

/// SVG drawing of a gallery; y is flipped so the picture has the usual orientation.
inline std::string render_svg(const Gallery& g, const RenderOptions& opt = {}) {
    Rational xmin = g.polygon[0].x, xmax = xmin, ymin = g.polygon[0].y, ymax = ymin;
    for (const Point& p : g.polygon.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    using detail::svg_number;
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<!-- Approximate rendering at 12 significant digits. The gallery file holds the exact coordinates. -->\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_number(xmin) << " " << svg_number(-ymax) << " "
      << svg_number(xmax - xmin) << " " << svg_number(ymax - ymin) << "\" preserveAspectRatio=\"none\">\n";
    o << "  <polygon points=\"" << detail::svg_points(g.polygon.vertices()) << "\" fill=\"#f4f1ea\" stroke=\"#222\" stroke-width=\""
      << opt.stroke_width << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    if (opt.show_regions)
        for (const auto& c : g.clause_regions)
            o << "  <polygon points=\"" << detail::svg_points(c.region) << "\" fill=\"#4a7ab5\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
    if (opt.highlight_segments)
        for (const auto& s : g.guard_segments)
            o << "  <line x1=\"" << svg_number(s.segment.a.x) << "\" y1=\"" << svg_number(-s.segment.a.y) << "\" x2=\""
              << svg_number(s.segment.b.x) << "\" y2=\"" << svg_number(-s.segment.b.y)
              << "\" stroke=\"#c0392b\" stroke-width=\"" << opt.stroke_width * 2 << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace artgallery
