/**
 * @file regions.hpp
 * @brief Depth central regions, convex floating bodies, floating-body
 *        existence, medians, symmetry reports, and the reconstruction of
 *        halfspace probabilities from the depth function.
 */

#ifndef HSDEPTH_REGIONS_HPP
#define HSDEPTH_REGIONS_HPP

#include "hsdepth/depth.hpp"
#include "hsdepth/measures.hpp"

namespace hsdepth {

/// A depth central region / floating body with a certified outer superset.
/// For 1-D measures the interval [lo, hi] is used instead of the polygons.
struct DepthRegion {
    bool empty = true;
    int dim = 2;
    double delta = 0.0;
    Polygon polygon;  // certified inner region (2-D)
    Polygon outer;    // certified superset (2-D)
    double bound = 0.0;  // hausdorff gap between inner and outer
    double lo = 0.0, hi = 0.0;  // 1-D interval
};

/// D_delta: intersection over all halfspaces H^+ with P(H^+) > 1 - delta.
DepthRegion central_region(const Measure& m, double delta,
                           int directions = 512);

/// P_delta: intersection over all halfspaces H^+ with P(H^+) >= 1 - delta.
/// delta = 0 gives the closed convex hull of the support (bounded variants).
DepthRegion convex_floating_body(const Measure& m, double delta,
                                 int directions = 512);

/// Dupin test: does every supporting halfspace of P_delta cut off exactly
/// probability delta?
struct FloatingBodyCheck {
    bool exists = false;
    double max_deviation = 0.0;  // max |P(cut) - delta| / delta over normals
    double tol = 0.0;
};
FloatingBodyCheck floating_body_exists(const Measure& m, double delta,
                                       double tol = -1.0, int normals = 1024);

/// Locus of barycenters of chords cutting probability exactly delta.
std::vector<Vec2> dupin_curve(const Measure& m, double delta,
                              int samples = 512);

/// True when the closed curve turns in one direction only.
bool is_convex_curve(const std::vector<Vec2>& curve, double tol = 1e-9);

/// Maximal depth by bisection on region emptiness.
double max_depth(const Measure& m, int directions = 2048);

struct MedianResult {
    double max_depth = 0.0;
    VecD point;           // representative median
    bool unique = true;   // false when the median set is non-degenerate
    Polygon median_set;   // 2-D median set (near-maximal-depth region)
    double set_diameter = 0.0;
};
MedianResult halfspace_median(const Measure& m, int directions = 2048);

/// Winternitz measure of symmetry MD/(1 - MD) of a polygon-uniform law.
double winternitz(const Measure& m, int directions = 2048);

/// Centroid of the central region (an affine-equivariant point map).
Vec2 depth_centroid_map(const Measure& m, double delta, int directions = 512);

struct SymmetryReport {
    bool central = false;
    bool angular = false;
    bool halfspace = false;
    VecD center;        // candidate center (halfspace median)
    double max_depth = 0.0;
};
SymmetryReport symmetry_report(const Measure& m);

/// Directions u whose halfspace through x attains HD(x; m) within tol.
/// Throws for Empirical input (the infimum need not be attained).
std::vector<Vec2> minimal_directions(const Vec2& x, const Measure& m,
                                     double tol = 1e-9);

/// True when the minimal halfspaces at x cover the plane (0 lies in the
/// interior of the convex hull of the minimal directions).
bool ray_basis_check(const Vec2& x, const Measure& m);

/// Max distance from x to the barycenter of its minimal chords.
double dupin_barycenter_check(const Vec2& x, const Measure& m);

/// Recover P(H^-) from the depth function: sup of depth over the boundary
/// hyperplane, complemented when the median lies inside H^-.
double reconstruct_halfspace_prob(
    const Halfplane& h, const std::function<double(const Vec2&)>& depth,
    const Vec2& median, double scale = 10.0);

/// (1/e - delta) L_P B  subset of  P_delta  subset of  17 log(1/delta) L_P B
/// for an isotropic log-concave measure with L_P = (sup density)^(1/d).
struct SandwichCheck {
    bool holds = false;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    double region_min_support = 0.0;
    double region_max_vertex = 0.0;
};
SandwichCheck isotropic_sandwich_check(const Measure& m, double delta,
                                       int directions = 512);

}  // namespace hsdepth

#endif  // HSDEPTH_REGIONS_HPP
