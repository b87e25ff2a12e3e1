/**
 * @file svg.hpp
 * @brief Deterministic SVG 1.1 scenes: closed region paths, open curves,
 *        and point markers over a computed viewport.
 */

#ifndef HSDEPTH_CLI_SVG_HPP
#define HSDEPTH_CLI_SVG_HPP

#include <string>
#include <vector>

#include "hsdepth/geom.hpp"

namespace hsdepth::cli {

struct ScenePath {
    std::vector<Vec2> points;
    bool closed = true;
    std::string stroke = "#000000";
    std::string fill = "none";
};

struct ScenePoints {
    std::vector<Vec2> points;
    std::string fill = "#1f77b4";
    double radius = 1.5;
};

struct Scene {
    std::vector<ScenePath> paths;
    std::vector<ScenePoints> markers;

    bool empty() const { return paths.empty() && markers.empty(); }
};

/// Render to SVG 1.1. Byte-deterministic for identical scenes; throws
/// std::invalid_argument on an empty scene.
std::string emit_svg(const Scene& scene, double size = 640.0);

}  // namespace hsdepth::cli

#endif  // HSDEPTH_CLI_SVG_HPP
