#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "curvarc/contour.hpp"
#include "curvarc/vec2.hpp"

namespace curvarc {

/// Contour drawing: the interpolant as a path plus marker circles, in
/// mathematical orientation (y up). The viewBox is the geometry bounding
/// box with a 5% margin. Output is deterministic: fixed styling, no
/// timestamps. Marker labels, when given, are drawn next to the markers.
void write_contour_svg(const std::filesystem::path& path, const PlanarContour& contour,
                       InterpolationMode mode, const std::vector<Vec2>& markers,
                       bool label_markers = false);

/// Graph of y against x as a polyline with a frame and a y = 0 axis line,
/// y up, 5% margin. Deterministic like write_contour_svg.
void write_plot_svg(const std::filesystem::path& path, const std::vector<double>& x,
                    const std::vector<double>& y);

}  // namespace curvarc
