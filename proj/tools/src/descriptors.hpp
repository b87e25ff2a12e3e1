/**
 * @file descriptors.hpp
 * @brief Textual descriptors for built-in measures and bodies, e.g.
 *        "disk(3)", "gaussian(0,0,2,0.5,1)", "ellipse(3,1)".
 */

#ifndef HSDEPTH_CLI_DESCRIPTORS_HPP
#define HSDEPTH_CLI_DESCRIPTORS_HPP

#include <string>
#include <variant>

#include "hsdepth/asa.hpp"
#include "hsdepth/measures.hpp"

namespace hsdepth::cli {

/// Built-in measures:
///   square            uniform on [0,1]^2 (closed-form depth)
///   triangle          uniform on the unit equilateral triangle
///   disk | disk(d)    uniform on the unit ball in R^d
///   gaussian | gaussian(d) | gaussian(mx,my,sxx,sxy,syy)
///   cauchy-1sym       1-symmetric with Cauchy marginals, d = 2
///   tancer            uniform on the two stacked rectangles
///                     [-1,1]x[0,2] and [-2,2]x[-4,0]
///   fig-difference    1-D density 1/8 on (-2,0) and 3/16 on (1,5)
/// Throws std::invalid_argument for anything else.
Measure make_measure(const std::string& descriptor);

/// Bodies for surface-area and approximation commands:
///   disk, ellipse(a,b), perturbed-disk(amp,k)   -> SmoothBody2D
///   square, ngon(n) | ngon(n,r)                 -> Polygon
using Body = std::variant<SmoothBody2D, Polygon>;
Body make_body(const std::string& descriptor);

}  // namespace hsdepth::cli

#endif  // HSDEPTH_CLI_DESCRIPTORS_HPP
