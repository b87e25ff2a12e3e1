/**
 * @file measures.hpp
 * @brief Probability measures with a halfspace-probability oracle,
 *        projection quantiles, and seeded sampling.
 *
 * Conventions: halfspaces are closed; atoms on the boundary hyperplane
 * count toward H^-.
 */

#ifndef HSDEPTH_MEASURES_HPP
#define HSDEPTH_MEASURES_HPP

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hsdepth/geom.hpp"
#include "hsdepth/numeric.hpp"

namespace hsdepth {

using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

inline VecD to_vecd(const Vec2& p) {
    VecD v(2);
    v << p.x, p.y;
    return v;
}
inline Vec2 to_vec2(const VecD& v) { return {v(0), v(1)}; }

/// Closed lower halfspace { z : <z, normal> <= offset } in R^d.
struct HalfspaceD {
    VecD normal;  // unit
    double offset;
};

/// Union of disjoint simple polygons with positive mass weights summing
/// to 1. uniform_union() assigns area-proportional weights (the uniform
/// distribution on the union).
struct PolygonalRegion {
    std::vector<Polygon> components;
    std::vector<double> weights;

    static PolygonalRegion uniform_union(std::vector<Polygon> polys);
    double total_area() const;
    /// Convex hull of all component vertices.
    Polygon hull() const;
};

/// Marginal distribution function F1 of the first coordinate.
struct MarginalCDF {
    enum class Kind { GaussianPhi, Cauchy, UniformBallMarginal };
    Kind kind = Kind::GaussianPhi;
    int dim = 1;  // for UniformBallMarginal

    double cdf(double s) const;
    double quantile(double p) const;
};

/// F1(s) for the uniform distribution on the unit ball in R^d.
double ball_marginal_cdf(int d, double s);
double ball_marginal_quantile(int d, double p);

/// 1-D convex potential with derivatives; density e^{-psi}.
struct ConvexPotential1D {
    std::function<double(double)> psi;
    std::function<double(double)> dpsi;
    std::function<double(double)> ddpsi;
};

/// 2-D convex potential; hess returns {xx, xy, yy}.
struct ConvexPotential2D {
    std::function<double(const Vec2&)> psi;
    std::function<Vec2(const Vec2&)> grad;
    std::function<Mat2Sym(const Vec2&)> hess;
};

/// Tagged-union probability measure. Immutable after construction.
class Measure {
  public:
    enum class Kind {
        Empirical,
        UniformPolygonal,
        Gaussian,
        AlphaSymmetric,
        UniformBall,
        UnitSquare,
        LogConcave1D,
        LogConcave2D,
        PiecewiseUniform1D,
    };

    static Measure empirical(std::vector<VecD> points);
    static Measure empirical2d(const std::vector<Vec2>& points);
    static Measure uniform_polygonal(PolygonalRegion region);
    static Measure uniform_polygon(Polygon poly);
    static Measure gaussian(VecD mean, MatD cov);
    static Measure standard_gaussian(int d);
    static Measure alpha_symmetric(double alpha, MarginalCDF f1, int d);
    static Measure uniform_ball(int d);
    static Measure unit_square();
    static Measure log_concave_1d(ConvexPotential1D psi);
    static Measure log_concave_2d(ConvexPotential2D psi);
    /// Segments (a, b, mass); masses must sum to 1.
    static Measure piecewise_uniform_1d(
        std::vector<std::array<double, 3>> segments);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    /// P(H^-), exact where the variant allows.
    double halfspace_prob(const HalfspaceD& h) const;
    double halfspace_prob2d(const Halfplane& h) const;

    /// Survival S_u(s) = P(<X, u> >= s) (closed).
    double upper_prob(const VecD& u, double s) const;

    /// Smallest t with P(<X, u> <= t) >= p.
    double projection_quantile(const VecD& u, double p) const;

    /// sup { s : P(<X,u> >= s) >= c } (strict=false)
    /// sup { s : P(<X,u> >= s) >  c } (strict=true)
    double upper_quantile(const VecD& u, double c, bool strict) const;

    /// Deterministic per seed.
    std::vector<VecD> sample(std::size_t n, std::uint64_t seed) const;
    std::vector<Vec2> sample2d(std::size_t n, std::uint64_t seed) const;

    VecD mean() const;
    MatD covariance() const;

    /// Rough support scale for bisection brackets.
    double scale() const;

    /// P({x}) — nonzero only for Empirical.
    double point_mass(const VecD& x) const;

    // variant accessors (nullptr when the kind does not match)
    const std::vector<VecD>* points() const;
    const PolygonalRegion* region() const;
    const ConvexPotential1D* potential1d() const;
    const ConvexPotential2D* potential2d() const;
    double alpha() const { return alpha_; }
    const MarginalCDF& marginal() const { return f1_; }
    const VecD& gaussian_mean() const { return mu_; }
    const MatD& gaussian_cov() const { return sigma_; }

  private:
    Measure() = default;

    Kind kind_ = Kind::UnitSquare;
    int dim_ = 2;

    std::vector<VecD> points_;
    PolygonalRegion region_;
    VecD mu_;
    MatD sigma_;
    MatD chol_;  // lower Cholesky factor of sigma_
    double alpha_ = 2.0;
    MarginalCDF f1_;
    std::shared_ptr<ConvexPotential1D> psi1_;
    std::shared_ptr<ConvexPotential2D> psi2_;
    std::vector<std::array<double, 3>> segments_;
    double lc_mass_ = 1.0;    // total mass of e^{-psi}
    double lc_lo_ = 0, lc_hi_ = 0;  // truncated integration domain

    // cached cut profiles are built lazily per direction by callers
    friend class UniformPolygonalOracle;
};

/// Exact projection CDF machinery for UniformPolygonal measures: one
/// CutProfile per convex component for a fixed direction.
class UniformPolygonalOracle {
  public:
    UniformPolygonalOracle(const Measure& m, const Vec2& u);

    double cdf(double t) const;              // P(<X,u> <= t)
    double quantile_weak(double c) const;    // sup{s : 1-F(s-) >= c}
    double quantile_strict(double c) const;  // sup{s : 1-F(s-) >  c}
    double t_min() const { return tmin_; }
    double t_max() const { return tmax_; }

  private:
    std::vector<CutProfile> profiles_;
    std::vector<double> weights_;  // per-component mass / area
    double tmin_ = 0, tmax_ = 0;
};

}  // namespace hsdepth

#endif  // HSDEPTH_MEASURES_HPP
