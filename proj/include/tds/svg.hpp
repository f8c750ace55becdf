#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tds {

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points; // (tau, value)
    bool dashed = false;                           // reference lines (chance level)
};

/// Renders a standalone SVG 1.1 line chart: x-axis 0-100 labeled
/// "% mastication time", y-axis 0-axis_max_y, one polyline per series, and a
/// legend. Output is deterministic for identical input (fixed-precision
/// coordinates, no timestamps). Throws DomainError when the series list is
/// empty, a series has no points, axis_max_y <= 0, or a value is non-finite.
std::string render_svg(std::span<const SvgSeries> series, double axis_max_y,
                       std::string_view title);

} // namespace tds
