#include "curvarc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "curvarc/errors.hpp"
#include "curvarc/io.hpp"

namespace curvarc {

namespace {

struct Box {
    double min_x = 0.0, min_y = 0.0, width = 1.0, height = 1.0;
    double diagonal = 1.0;
};

// Bounding box of already y-flipped points, widened by a 5% margin.
Box padded_box(const std::vector<Vec2>& pts) {
    double min_x = pts[0].x, max_x = pts[0].x;
    double min_y = pts[0].y, max_y = pts[0].y;
    for (const Vec2& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
    if (pad == 0.0) pad = 0.5;
    Box box;
    box.min_x = min_x - pad;
    box.min_y = min_y - pad;
    box.width = max_x - min_x + 2.0 * pad;
    box.height = max_y - min_y + 2.0 * pad;
    box.diagonal = std::hypot(box.width, box.height);
    return box;
}

std::ofstream open_svg(const std::filesystem::path& path, const Box& box) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << format_double(box.min_x) << ' ' << format_double(box.min_y) << ' '
        << format_double(box.width) << ' ' << format_double(box.height) << "\">\n";
    return out;
}

void emit_path(std::ofstream& out, const std::vector<Vec2>& pts, bool close, double width,
               const char* color) {
    out << "  <path d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << (i == 0 ? "M " : " L ") << format_double(pts[i].x) << ' '
            << format_double(pts[i].y);
    if (close) out << " Z";
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << format_double(width) << "\" stroke-linejoin=\"round\"/>\n";
}

Vec2 flip(Vec2 p) { return {p.x, -p.y}; }

}  // namespace

void write_contour_svg(const std::filesystem::path& path, const PlanarContour& contour,
                       InterpolationMode mode, const std::vector<Vec2>& markers,
                       bool label_markers) {
    std::vector<Vec2> curve;
    if (mode == InterpolationMode::Polyline) {
        curve.reserve(contour.size());
        for (const Vec2& p : contour.points()) curve.push_back(flip(p));
    } else {
        const CurveInterpolant interp(contour, mode);
        const std::size_t m = std::max<std::size_t>(64, 8 * contour.size());
        const std::size_t samples = contour.closed() ? m : m + 1;
        curve.reserve(samples);
        for (std::size_t k = 0; k < samples; ++k)
            curve.push_back(flip(interp.evaluate(static_cast<double>(k) / m)));
    }

    std::vector<Vec2> everything = curve;
    everything.reserve(curve.size() + markers.size());
    for (const Vec2& p : markers) everything.push_back(flip(p));
    const Box box = padded_box(everything);

    std::ofstream out = open_svg(path, box);
    emit_path(out, curve, contour.closed(), 0.004 * box.diagonal, "#2a6fb0");
    const double radius = 0.008 * box.diagonal;
    for (const Vec2& marker : markers) {
        const Vec2 p = flip(marker);
        out << "  <circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(p.y)
            << "\" r=\"" << format_double(radius) << "\" fill=\"#c23b3b\"/>\n";
    }
    if (label_markers) {
        const double font = 0.03 * box.diagonal;
        for (std::size_t k = 0; k < markers.size(); ++k) {
            const Vec2 p = flip(markers[k]);
            out << "  <text x=\"" << format_double(p.x + 1.5 * radius) << "\" y=\""
                << format_double(p.y - 1.5 * radius) << "\" font-size=\""
                << format_double(font) << "\" font-family=\"sans-serif\" fill=\"#333333\">"
                << k << "</text>\n";
        }
    }
    out << "</svg>\n";
}

void write_plot_svg(const std::filesystem::path& path, const std::vector<double>& x,
                    const std::vector<double>& y) {
    if (x.size() != y.size()) throw InconsistentCounts("plot columns differ in length");
    if (x.size() < 2) throw Error("plot needs at least two samples");

    std::vector<Vec2> pts(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) pts[i] = flip({x[i], y[i]});
    const Box box = padded_box(pts);

    std::ofstream out = open_svg(path, box);
    const double thin = 0.002 * box.diagonal;
    out << "  <rect x=\"" << format_double(box.min_x) << "\" y=\"" << format_double(box.min_y)
        << "\" width=\"" << format_double(box.width) << "\" height=\""
        << format_double(box.height) << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\""
        << format_double(thin) << "\"/>\n";

    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (*lo <= 0.0 && *hi >= 0.0) {
        out << "  <line x1=\"" << format_double(box.min_x) << "\" y1=\"0\" x2=\""
            << format_double(box.min_x + box.width)
            << "\" y2=\"0\" stroke=\"#999999\" stroke-width=\"" << format_double(thin)
            << "\"/>\n";
    }
    emit_path(out, pts, false, 0.004 * box.diagonal, "#2a6fb0");
    out << "</svg>\n";
}

}  // namespace curvarc
