/**
 * @file asa.hpp
 * @brief Affine surface area in the plane: curvature integrals for smooth
 *        bodies, floating-body volume limits, polytope flag asymptotics,
 *        L_p variants, affine isoperimetric and Blaschke-Santalo checks,
 *        affine surface area of log-concave measures, and floating
 *        functions in one dimension.
 */

#ifndef HSDEPTH_ASA_HPP
#define HSDEPTH_ASA_HPP

#include "hsdepth/measures.hpp"

namespace hsdepth {

/// Twice-differentiable closed convex curve, parametrized by t in [0, 1),
/// positively oriented.
class SmoothBody2D {
  public:
    static SmoothBody2D disk(double radius = 1.0);
    static SmoothBody2D ellipse(double a, double b);
    /// r(theta) = 1 + amplitude * cos(frequency * theta); convex for small
    /// amplitudes (certificate sampled on construction use).
    static SmoothBody2D perturbed_disk(double amplitude, int frequency);

    Vec2 point(double t) const { return p_(t); }
    Vec2 velocity(double t) const { return v_(t); }
    Vec2 acceleration(double t) const { return a_(t); }

    /// Curvature cross(v, a)/|v|^3, clamped at 0 when |kappa| < 1e-12.
    double curvature(double t) const;
    Vec2 outward_normal(double t) const;

    double area() const;
    /// Minimum of curvature over a sample grid (convexity certificate).
    double min_curvature(int samples = 4096) const;
    Polygon to_polygon(int n) const;

  private:
    SmoothBody2D(std::function<Vec2(double)> p, std::function<Vec2(double)> v,
                 std::function<Vec2(double)> a);

    std::function<Vec2(double)> p_, v_, a_;
};

/// Integral of kappa^{1/3} over the boundary arclength; throws when the
/// sampled convexity certificate fails.
double affine_surface_area(const SmoothBody2D& body);

/// Polytopes have zero curvature almost everywhere on the boundary.
inline double affine_surface_area(const Polygon&) { return 0.0; }

/// Volume deficit (vol K - vol K_delta)/delta^{2/3} along a delta sequence
/// (delta is absolute cut-off area) with an a + b*delta^c fit; the limit
/// equals (1/2)(3/2)^{2/3} times the affine surface area.
struct FloatingExtrapolation {
    std::vector<double> deltas;
    std::vector<double> values;
    double limit = 0.0;
    double exponent = 0.0;     // fitted correction exponent c
    double implied_asa = 0.0;  // limit / ((1/2)(3/2)^{2/3})
};
FloatingExtrapolation asa_via_floating(const Polygon& body,
                                       std::vector<double> deltas,
                                       int directions = 4096);
FloatingExtrapolation asa_via_floating(const SmoothBody2D& body,
                                       std::vector<double> deltas,
                                       int directions = 4096,
                                       int facets = 4096);

/// (vol S - vol S_delta)/(delta log(1/delta)) along a delta sequence; the
/// limit is the flag count over d! * d^{d-1} = #flags / 4 in the plane.
struct FlagAsymptotic {
    std::vector<double> deltas;
    std::vector<double> ratios;
    int flags = 0;  // 2 * #edges
    double predicted_limit = 0.0;
};
FlagAsymptotic polytope_flag_asymptotic(const Polygon& poly,
                                        std::vector<double> deltas,
                                        int directions = 8192);

/// Integral of kappa^{p/(2+p)} / <x, N(x)>^{2(p-1)/(2+p)} over arclength.
/// p = +infinity is accepted (integrand kappa / <x,N>^2); p = -2 throws.
/// The origin must be interior to the body.
double lp_affine_surface_area(const SmoothBody2D& body, double p);

/// (vol K / vol B)^{1/3} - as(K)/as(B); >= 0 with equality for ellipses.
double affine_isoperimetric_margin(const SmoothBody2D& body);

/// Minimizes the polar volume over interior base points (Santalo point);
/// margin = vol(B)^2 - vol(K) vol(K^s) >= 0.
struct SantaloResult {
    Vec2 santalo_point;
    double product = 0.0;
    double margin = 0.0;
};
SantaloResult blaschke_santalo_check(const Polygon& poly);

/// Generalized curvature at the boundary point gamma(t) via the cap-height
/// limit c2 * Delta(x,delta)^3 / delta^2 with c2 = 32/9; cap areas are
/// computed exactly from the parametrization.
double generalized_curvature_probe(const SmoothBody2D& body, double t,
                                   const std::vector<double>& deltas);

/// Same probe at the apex x = 0 of the epigraph of a convex profile f with
/// f(0) = 0 and supporting line y = 0 (covers non-smooth profiles).
double generalized_curvature_probe_profile(
    const std::function<double(double)>& f, double lo, double hi,
    const std::vector<double>& deltas);

/// Piecewise-linear interpolation of x^2 at the points +-1/n: nowhere
/// twice differentiable at 0 yet with generalized curvature 2 there.
double sawtooth_parabola_profile(double x);

/// Integral of (det Hess psi)^{1/(d+2)} e^{-psi}.
double asa_logconcave(const ConvexPotential1D& psi);
double asa_logconcave(const ConvexPotential2D& psi);

/// Integral of e^{lambda(2 psi - <x, grad psi>)} (det Hess psi)^lambda
/// e^{-psi}; lambda = 0 gives the total mass, lambda = 1/(d+2) matches
/// asa_logconcave for 2-homogeneous psi.
double lambda_asa(const ConvexPotential1D& psi, double lambda);
double lambda_asa(const ConvexPotential2D& psi, double lambda);

/// Floating function psi_delta: upper envelope of all lines cutting area
/// at most delta from the epigraph of psi over [lo, hi].
struct FloatingFunction1D {
    std::function<double(double)> base;
    std::vector<std::pair<double, double>> lines;  // (slope, intercept)
    double delta = 0.0;

    double eval(double x) const;
};
FloatingFunction1D floating_function_1d(const ConvexPotential1D& psi,
                                        double delta, double lo, double hi,
                                        int grid = 2048);

}  // namespace hsdepth

#endif  // HSDEPTH_ASA_HPP
