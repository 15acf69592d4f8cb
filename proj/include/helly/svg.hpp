#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helly/norms.hpp"

namespace helly {

struct SvgScene {
    std::string title;
    std::optional<UnitBall<double>> ball;       // outline of the unit ball
    std::vector<Vec2<double>> polygon;          // extra closed outline, e.g. a convex body
    std::vector<Vec2<double>> vectors;          // arrows from the origin
    std::vector<Vec2<double>> points;           // marked points, e.g. partial sums
    std::optional<Vec2<double>> highlight;      // the final sum
};

/// Standalone SVG document, y axis pointing up.
std::string render_svg(const SvgScene &scene);

void write_svg(const SvgScene &scene, const std::string &path);

}  // namespace helly
