/**
 * @file approx.hpp
 * @brief Polytope approximation of convex bodies: the greedy floating-body
 *        vertex selection, random polytopes from interior and boundary
 *        sampling with their volume deficits, and the convex-hull versus
 *        floating-body law of large numbers experiment.
 */

#ifndef HSDEPTH_APPROX_HPP
#define HSDEPTH_APPROX_HPP

#include <cstdint>
#include <string>

#include "hsdepth/asa.hpp"
#include "hsdepth/measures.hpp"

namespace hsdepth {

/// Monte Carlo deficit statistics for one (body, N) configuration.
struct ApproxRun {
    std::string body;
    int n = 0;  // vertices / sample size
    double deficit_mean = 0.0;
    double deficit_se = 0.0;  // sample sd / sqrt(trials)
    std::uint64_t seed = 0;
    int trials = 0;
};

/// Output of the greedy floating-body approximation.
struct FloatingApprox {
    std::vector<Vec2> vertices;  // chosen boundary points, in order
    Polygon polygon;             // their convex hull P_N
    double delta = 0.0;
    bool containment_verified = false;  // K_delta subset P_N subset K
};

/// Greedy vertex selection by direction sweep: for each cap normal on a
/// fine angular grid, if the cap of area delta contains no vertex chosen
/// so far, the support point of the body in that direction is added; every
/// grid cap then contains a vertex, so K_delta subset P_N subset K.
/// Requires 0 < delta <= vol(K) / (4 e^4).
FloatingApprox floating_body_algorithm(const Polygon& body, double delta);

/// vol K minus the area of the convex hull of n uniform interior samples,
/// averaged over trials.
ApproxRun random_polytope_deficit(const Polygon& body, int n, int trials,
                                  std::uint64_t seed);

enum class BoundaryDensity {
    Uniform,        // arclength
    AffineSurface,  // kappa^{1/3} / integral of kappa^{1/3}
};

/// vol K minus the hull area of n boundary points drawn by inverse CDF on
/// a 16384-point arclength table with the chosen density.
ApproxRun random_boundary_polytope(const SmoothBody2D& body,
                                   BoundaryDensity density, int n, int trials,
                                   std::uint64_t seed);

/// One row of the hull-vs-floating-body experiment.
struct GnedenkoRow {
    int n = 0;
    double hausdorff_dist = 0.0;  // mean over replicates
    double max_overshoot = 0.0;   // mean of the per-hull max distance of a
                                  // vertex outside the floating body
};

/// Hausdorff distance between the convex hull of n samples and the
/// floating body P_{1/n}, per n, averaged over `replicates` independent
/// samples (the single-sample distance fluctuates more than the slow
/// (log log n)/sqrt(log n) decay); gaussian measures only.
std::vector<GnedenkoRow> gnedenko_experiment(const Measure& m,
                                             const std::vector<int>& ns,
                                             std::uint64_t seed,
                                             int replicates = 256);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x,
                     const std::vector<double>& y);

/// One-sided Mann-Kendall trend test for a decreasing series.
bool mann_kendall_decreasing(const std::vector<double>& series,
                             double alpha = 0.05);

}  // namespace hsdepth

#endif  // HSDEPTH_APPROX_HPP
