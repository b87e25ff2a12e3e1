/**
 * @file svg.cpp
 * @brief SVG 1.1 rendering with a fixed viewport transform and %.12g
 *        coordinate formatting, byte-deterministic per scene.
 */

#include "svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "table.hpp"

namespace hsdepth::cli {

namespace {

struct Box {
    double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;

    void add(const Vec2& p) {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
};

}  // namespace

std::string emit_svg(const Scene& scene, double size) {
    if (scene.empty())
        throw std::invalid_argument("emit_svg: empty scene");
    Box box;
    for (const ScenePath& p : scene.paths)
        for (const Vec2& v : p.points) box.add(v);
    for (const ScenePoints& m : scene.markers)
        for (const Vec2& v : m.points) box.add(v);
    const double span =
        std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-9});
    const double margin = 0.05 * span;
    const double scale = size / (span + 2.0 * margin);
    // y flips: SVG grows downward
    auto tx = [&](const Vec2& p) {
        return Vec2{(p.x - box.xmin + margin) * scale,
                    (box.ymax - p.y + margin) * scale};
    };
    const double h = (box.ymax - box.ymin + 2.0 * margin) * scale;
    const double w = (box.xmax - box.xmin + 2.0 * margin) * scale;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << fmt12(w) << "\" height=\"" << fmt12(h)
        << "\" viewBox=\"0 0 " << fmt12(w) << " " << fmt12(h) << "\">\n";
    for (const ScenePath& p : scene.paths) {
        if (p.points.empty()) continue;
        out << "  <path d=\"";
        for (std::size_t i = 0; i < p.points.size(); ++i) {
            const Vec2 q = tx(p.points[i]);
            out << (i == 0 ? "M " : " L ") << fmt12(q.x) << " " << fmt12(q.y);
        }
        if (p.closed) out << " Z";
        out << "\" stroke=\"" << p.stroke << "\" fill=\"" << p.fill
            << "\" stroke-width=\"1.5\"/>\n";
    }
    for (const ScenePoints& m : scene.markers)
        for (const Vec2& v : m.points) {
            const Vec2 q = tx(v);
            out << "  <circle cx=\"" << fmt12(q.x) << "\" cy=\"" << fmt12(q.y)
                << "\" r=\"" << fmt12(m.radius) << "\" fill=\"" << m.fill
                << "\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

}  // namespace hsdepth::cli
