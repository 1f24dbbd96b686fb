#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "dispnet/point_set.hpp"

namespace dispnet {

inline constexpr int kSvgSize = 512;

/// Scatter of the points in the unit square (y axis pointing up) with an
/// optional outlined box. Output is deterministic for a given input.
void render_svg(const GridPointSet& points, const std::optional<BoxReport>& box, std::ostream& out);
std::string render_svg(const GridPointSet& points, const std::optional<BoxReport>& box);
void write_svg(const GridPointSet& points, const std::optional<BoxReport>& box, const std::string& path);

}  // namespace dispnet
