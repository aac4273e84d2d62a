// Plain-text and SVG drawings of Newton polygons: valuation on the vertical
// axis, phi-power index on the horizontal, '*' for hull vertices, 'o' for the
// remaining valuation points, '.' for integer-height hull crossings.
#ifndef MONOGEN_RENDER_HPP
#define MONOGEN_RENDER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monogen/newton.hpp"

namespace monogen {

namespace detail {

// Exact hull height at column x when it is an integer on a vertex-to-vertex
// segment; nullopt between lattice heights or outside the hull.
inline std::optional<std::int64_t> hull_height_if_integral(const NewtonPolygon& polygon,
                                                           std::int64_t x) {
    const auto& v = polygon.vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].x <= x && x <= v[i + 1].x) {
            std::int64_t dx = v[i + 1].x - v[i].x;
            std::int64_t num = v[i].y * (v[i + 1].x - x) + v[i + 1].y * (x - v[i].x);
            if (num % dx == 0) return num / dx;
            return std::nullopt;
        }
    }
    if (!v.empty() && v.size() == 1 && v[0].x == x) return v[0].y;
    return std::nullopt;
}

} // namespace detail

inline std::string ascii_polygon(const NewtonPolygon& polygon) {
    std::int64_t xmax = 0, ymax = 0;
    for (const auto& pt : polygon.points) {
        xmax = std::max(xmax, pt.x);
        ymax = std::max(ymax, pt.y);
    }
    if (xmax > 160 || ymax > 60) {
        return "(polygon too large to draw: " + std::to_string(xmax) + " columns x " +
               std::to_string(ymax) + " rows)\n";
    }
    auto column = [](std::int64_t x) { return static_cast<std::size_t>(2 * x); };
    std::size_t width = column(xmax) + 1;
    std::vector<std::string> rows(static_cast<std::size_t>(ymax) + 1, std::string(width, ' '));
    auto put = [&](std::int64_t x, std::int64_t y, char c) {
        rows[static_cast<std::size_t>(ymax - y)][column(x)] = c;
    };
    for (std::int64_t x = 0; x <= xmax; ++x) {
        auto h = detail::hull_height_if_integral(polygon, x);
        if (h && *h >= 0 && *h <= ymax) put(x, *h, '.');
    }
    for (const auto& pt : polygon.points) put(pt.x, pt.y, 'o');
    for (const auto& pt : polygon.vertices) put(pt.x, pt.y, '*');
    std::ostringstream out;
    std::size_t label_width = std::to_string(ymax).size();
    for (std::int64_t y = ymax; y >= 0; --y) {
        std::string label = std::to_string(y);
        out << std::string(label_width - label.size(), ' ') << label << " |"
            << rows[static_cast<std::size_t>(ymax - y)] << "\n";
    }
    out << std::string(label_width, ' ') << " +" << std::string(width, '-') << "\n";
    std::string axis(width, ' ');
    for (std::int64_t x = 0; x <= xmax; ++x) {
        std::string label = std::to_string(x);
        std::size_t c = column(x);
        if (c + label.size() <= axis.size() && (x < 10 || x % 2 == 0))
            axis.replace(c, label.size(), label);
    }
    out << std::string(label_width, ' ') << "  " << axis << "\n";
    return out.str();
}

inline std::string svg_polygon(const NewtonPolygon& polygon) {
    std::int64_t xmax = 1, ymax = 1;
    for (const auto& pt : polygon.points) {
        xmax = std::max(xmax, pt.x);
        ymax = std::max(ymax, pt.y);
    }
    const std::int64_t scale = 40, margin = 30;
    auto px = [&](std::int64_t x) { return std::to_string(margin + x * scale); };
    auto py = [&](std::int64_t y) { return std::to_string(margin + (ymax - y) * scale); };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << margin * 2 + xmax * scale << "\" height=\"" << margin * 2 + ymax * scale << "\">\n";
    out << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax)
        << "\" y2=\"" << py(0) << "\"/>\n";
    out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0)
        << "\" y2=\"" << py(ymax) << "\"/>\n";
    out << "  </g>\n";
    if (polygon.vertices.size() > 1) {
        out << "  <polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
            if (i) out << ' ';
            out << px(polygon.vertices[i].x) << ',' << py(polygon.vertices[i].y);
        }
        out << "\"/>\n";
    }
    for (const auto& pt : polygon.points)
        out << "  <circle cx=\"" << px(pt.x) << "\" cy=\"" << py(pt.y)
            << "\" r=\"4\" fill=\"#fff\" stroke=\"#000\"/>\n";
    for (const auto& pt : polygon.vertices)
        out << "  <circle cx=\"" << px(pt.x) << "\" cy=\"" << py(pt.y)
            << "\" r=\"5\" fill=\"#000\"/>\n";
    for (const auto& pt : polygon.points)
        out << "  <text x=\"" << px(pt.x) << "\" y=\""
            << std::to_string(margin + (ymax - pt.y) * scale - 10)
            << "\" font-size=\"11\" text-anchor=\"middle\">(" << pt.x << ',' << pt.y
            << ")</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace monogen

#endif
