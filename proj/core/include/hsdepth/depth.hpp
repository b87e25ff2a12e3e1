/**
 * @file depth.hpp
 * @brief Halfspace depth (exact empirical, optimized polygonal, closed-form
 *        analytic), Mahalanobis depth, simplicial-volume (Oja) depth with
 *        the centroid-body identity, and max-depth classification.
 */

#ifndef HSDEPTH_DEPTH_HPP
#define HSDEPTH_DEPTH_HPP

#include "hsdepth/measures.hpp"

namespace hsdepth {

struct DepthResult {
    enum class Method { Exact, Optimized, ClosedForm };

    double value = 0.0;
    /// Normals u of minimal halfspaces H^- = { z : <z,u> <= <x,u> }.
    /// Empty when the infimum is not attained (or all directions minimize).
    std::vector<VecD> directions;
    Method method = Method::Exact;
    double bound = 0.0;  // certified error; 0 for exact methods
};

/// Exact 2-D empirical depth by an O(n log n) rotating sweep of closed
/// halfplanes through x.
DepthResult hd_empirical_2d(const Vec2& x, const std::vector<Vec2>& pts);

/// Exact empirical depth for d <= 3 by enumerating atom-spanned hyperplanes
/// through x plus infinitesimal rotations. n <= 60.
DepthResult hd_empirical_brute(const VecD& x, const std::vector<VecD>& pts);

/// Closed forms: Gaussian, alpha-symmetric, uniform ball, unit square.
DepthResult hd_analytic(const VecD& x, const Measure& m);

/// Depth w.r.t. a polygon-uniform law: minimizes the cut probability over
/// halfplane directions through x (critical-angle set + golden section).
DepthResult hd_polygonal(const Vec2& x, const Measure& m);

/// Dispatch on the measure variant (1-D variants use both tail
/// probabilities directly).
DepthResult hd(const VecD& x, const Measure& m);

double mahalanobis_depth(const VecD& x, const VecD& mu, const MatD& sigma);

/// Mahalanobis depth region { x : dist_Sigma(x, mu) <= (1-delta)/delta }.
struct EllipsoidRegion {
    VecD center;
    MatD sigma;
    double radius;  // Mahalanobis radius

    bool contains(const VecD& x, double tol = 1e-12) const;
};
EllipsoidRegion mahalanobis_region(const VecD& mu, const MatD& sigma,
                                   double delta);

struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
};

/// Simplicial volume depth (1 + E vol[x, X_1..X_d] / sqrt(det Sigma))^-1
/// by Monte Carlo; deterministic per seed.
MCEstimate oja_depth_mc(const VecD& x, const Measure& m, std::size_t trials,
                        std::uint64_t seed);

/// Centroid body of (support of m) - x for a polygon-uniform law:
/// h_Z(u) = (1/vol K) * integral over K of |<y - x, u>| dy, sampled on a
/// direction grid and reconstructed as a halfplane intersection.
struct CentroidBody2D {
    Polygon polygon;
    double volume = 0.0;
};
CentroidBody2D centroid_body_2d(const Measure& m, const Vec2& x,
                                int grid = 512);

/// Exact-route Oja depth of x for a polygon-uniform law via the zonoid
/// volume identity vol(Z_x) = 2^d * E vol[x, X_1..X_d].
double oja_via_centroid_body(const Measure& m, const Vec2& x, int grid = 512);

enum class DepthLabel { Unclassified = 0, First = 1, Second = 2 };

/// Maximum-depth classification of x between two measures.
DepthLabel classify_max_depth(const VecD& x, const Measure& m1,
                              const Measure& m2);

}  // namespace hsdepth

#endif  // HSDEPTH_DEPTH_HPP
