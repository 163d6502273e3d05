#pragma once

#include <string>
#include <vector>

namespace fracwave {

/// Minimal self-contained SVG line plot (axes, ticks, one polyline). The
/// CSVs are the machine-readable contract; these plots are a convenience.
void write_svg_line_plot(const std::string& path, const std::vector<double>& xs,
                         const std::vector<double>& ys,
                         const std::string& title);

}  // namespace fracwave
