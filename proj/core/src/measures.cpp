#include "hsdepth/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace hsdepth {

// ---------------------------------------------------------------------------
// PolygonalRegion

PolygonalRegion PolygonalRegion::uniform_union(std::vector<Polygon> polys) {
    PolygonalRegion r;
    double total = 0.0;
    for (const Polygon& p : polys) {
        const double a = p.area();
        if (a <= 0.0)
            throw std::invalid_argument("uniform_union: zero-area component");
        total += a;
    }
    r.weights.reserve(polys.size());
    for (const Polygon& p : polys) r.weights.push_back(p.area() / total);
    r.components = std::move(polys);
    return r;
}

double PolygonalRegion::total_area() const {
    double a = 0.0;
    for (const Polygon& p : components) a += p.area();
    return a;
}

Polygon PolygonalRegion::hull() const {
    std::vector<Vec2> pts;
    for (const Polygon& p : components)
        pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
    return convex_hull(std::move(pts));
}

// ---------------------------------------------------------------------------
// Marginals

double ball_marginal_cdf(int d, double s) {
    if (d < 1) throw std::invalid_argument("ball_marginal_cdf: d < 1");
    if (s <= -1.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double c = std::tgamma((d + 2) / 2.0) /
                     (std::tgamma((d + 1) / 2.0) * std::sqrt(M_PI));
    const double e = (d - 1) / 2.0;
    const double tail = integrate(
        [e](double t) { return std::pow(1.0 - t * t, e); }, -1.0, s, 1e-12);
    return c * tail;
}

double ball_marginal_quantile(int d, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("ball_marginal_quantile: p outside (0,1)");
    return bisect_boundary(
        [d, p](double s) { return ball_marginal_cdf(d, s) < p; }, -1.0, 1.0,
        1e-13);
}

double MarginalCDF::cdf(double s) const {
    switch (kind) {
        case Kind::GaussianPhi: return norm_cdf(s);
        case Kind::Cauchy: return cauchy_cdf(s);
        case Kind::UniformBallMarginal: return ball_marginal_cdf(dim, s);
    }
    throw std::logic_error("MarginalCDF: bad kind");
}

double MarginalCDF::quantile(double p) const {
    switch (kind) {
        case Kind::GaussianPhi: return norm_quantile(p);
        case Kind::Cauchy: return cauchy_quantile(p);
        case Kind::UniformBallMarginal: return ball_marginal_quantile(dim, p);
    }
    throw std::logic_error("MarginalCDF: bad kind");
}

// ---------------------------------------------------------------------------
// Construction

Measure Measure::empirical(std::vector<VecD> points) {
    if (points.empty()) throw std::invalid_argument("empirical: no points");
    Measure m;
    m.kind_ = Kind::Empirical;
    m.dim_ = static_cast<int>(points.front().size());
    for (const VecD& p : points)
        if (p.size() != m.dim_ || !p.allFinite())
            throw std::invalid_argument("empirical: ragged or non-finite point");
    m.points_ = std::move(points);
    return m;
}

Measure Measure::empirical2d(const std::vector<Vec2>& points) {
    std::vector<VecD> pts;
    pts.reserve(points.size());
    for (const Vec2& p : points) pts.push_back(to_vecd(p));
    return empirical(std::move(pts));
}

Measure Measure::uniform_polygonal(PolygonalRegion region) {
    if (region.components.empty())
        throw std::invalid_argument("uniform_polygonal: empty region");
    Measure m;
    m.kind_ = Kind::UniformPolygonal;
    m.dim_ = 2;
    m.region_ = std::move(region);
    return m;
}

Measure Measure::uniform_polygon(Polygon poly) {
    return uniform_polygonal(PolygonalRegion::uniform_union({std::move(poly)}));
}

Measure Measure::gaussian(VecD mean, MatD cov) {
    Measure m;
    m.kind_ = Kind::Gaussian;
    m.dim_ = static_cast<int>(mean.size());
    if (cov.rows() != m.dim_ || cov.cols() != m.dim_)
        throw std::invalid_argument("gaussian: dimension mismatch");
    Eigen::LLT<MatD> llt(cov);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("gaussian: covariance not positive-definite");
    m.mu_ = std::move(mean);
    m.sigma_ = std::move(cov);
    m.chol_ = llt.matrixL();
    return m;
}

Measure Measure::standard_gaussian(int d) {
    return gaussian(VecD::Zero(d), MatD::Identity(d, d));
}

Measure Measure::alpha_symmetric(double alpha, MarginalCDF f1, int d) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("alpha_symmetric: alpha outside (0,2]");
    Measure m;
    m.kind_ = Kind::AlphaSymmetric;
    m.dim_ = d;
    m.alpha_ = alpha;
    m.f1_ = f1;
    return m;
}

Measure Measure::uniform_ball(int d) {
    Measure m;
    m.kind_ = Kind::UniformBall;
    m.dim_ = d;
    return m;
}

Measure Measure::unit_square() {
    Measure m;
    m.kind_ = Kind::UnitSquare;
    m.dim_ = 2;
    m.region_ = PolygonalRegion::uniform_union(
        {Polygon::rectangle(0.0, 0.0, 1.0, 1.0)});
    return m;
}

namespace {

// effective support [lo, hi] of e^{-psi}: psi <= psi_min + 32.3 (density
// >= 1e-14 x peak)
std::pair<double, double> effective_domain_1d(const ConvexPotential1D& p) {
    double x0 = golden_max([&](double x) { return -p.psi(x); }, -1e3, 1e3,
                           1e-10);
    const double pmin = p.psi(x0);
    const double cut = pmin + 32.3;
    double lo = x0 - 1.0, hi = x0 + 1.0;
    while (p.psi(lo) < cut && lo > -1e6) lo = x0 + 2.0 * (lo - x0);
    while (p.psi(hi) < cut && hi < 1e6) hi = x0 + 2.0 * (hi - x0);
    lo = bisect_boundary([&](double x) { return p.psi(x) >= cut; }, lo, x0,
                         1e-10);
    hi = -bisect_boundary([&](double x) { return p.psi(-x) >= cut; }, -hi,
                          -x0, 1e-10);
    return {lo, hi};
}

}  // namespace

Measure Measure::log_concave_1d(ConvexPotential1D psi) {
    Measure m;
    m.kind_ = Kind::LogConcave1D;
    m.dim_ = 1;
    m.psi1_ = std::make_shared<ConvexPotential1D>(std::move(psi));
    auto [lo, hi] = effective_domain_1d(*m.psi1_);
    m.lc_lo_ = lo;
    m.lc_hi_ = hi;
    const ConvexPotential1D& p = *m.psi1_;
    m.lc_mass_ = integrate([&p](double x) { return std::exp(-p.psi(x)); }, lo,
                           hi, 1e-10);
    if (!(m.lc_mass_ > 0.0) || !std::isfinite(m.lc_mass_))
        throw std::invalid_argument("log_concave_1d: density not integrable");
    return m;
}

Measure Measure::log_concave_2d(ConvexPotential2D psi) {
    Measure m;
    m.kind_ = Kind::LogConcave2D;
    m.dim_ = 2;
    m.psi2_ = std::make_shared<ConvexPotential2D>(std::move(psi));
    // crude minimizer by coordinate golden descent
    const ConvexPotential2D& p = *m.psi2_;
    Vec2 x{0, 0};
    for (int it = 0; it < 8; ++it) {
        x.x = golden_max([&](double t) { return -p.psi({t, x.y}); }, x.x - 50,
                         x.x + 50, 1e-8);
        x.y = golden_max([&](double t) { return -p.psi({x.x, t}); }, x.y - 50,
                         x.y + 50, 1e-8);
    }
    const double pmin = p.psi(x);
    double r = 1.0;
    auto boundary_min = [&](double rad) {
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 64; ++k) {
            const Vec2 q = x + rad * dir(2.0 * M_PI * k / 64);
            best = std::min(best, p.psi(q));
        }
        return best;
    };
    while (boundary_min(r) < pmin + 34.5 && r < 1e5) r *= 2.0;
    m.lc_lo_ = -r;  // box [x - r, x + r]^2, stored via center below
    m.lc_hi_ = r;
    m.mu_ = to_vecd(x);  // reuse mu_ as the box center
    auto slab = [&p, &m](double t) {
        const double r2 = m.lc_hi_;
        const Vec2 c = to_vec2(m.mu_);
        return integrate(
            [&p, t, c](double s) {
                return std::exp(-p.psi({c.x + t, c.y + s}));
            },
            -r2, r2, 1e-9);
    };
    m.lc_mass_ = integrate(slab, -r, r, 1e-8);
    if (!(m.lc_mass_ > 0.0) || !std::isfinite(m.lc_mass_))
        throw std::invalid_argument("log_concave_2d: density not integrable");
    return m;
}

Measure Measure::piecewise_uniform_1d(
    std::vector<std::array<double, 3>> segments) {
    if (segments.empty())
        throw std::invalid_argument("piecewise_uniform_1d: no segments");
    double total = 0.0;
    for (const auto& s : segments) {
        if (!(s[1] > s[0]) || !(s[2] > 0.0))
            throw std::invalid_argument("piecewise_uniform_1d: bad segment");
        total += s[2];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("piecewise_uniform_1d: masses must sum to 1");
    std::sort(segments.begin(), segments.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    Measure m;
    m.kind_ = Kind::PiecewiseUniform1D;
    m.dim_ = 1;
    m.segments_ = std::move(segments);
    return m;
}

// ---------------------------------------------------------------------------
// accessors

const std::vector<VecD>* Measure::points() const {
    return kind_ == Kind::Empirical ? &points_ : nullptr;
}
const PolygonalRegion* Measure::region() const {
    return (kind_ == Kind::UniformPolygonal || kind_ == Kind::UnitSquare)
               ? &region_
               : nullptr;
}
const ConvexPotential1D* Measure::potential1d() const { return psi1_.get(); }
const ConvexPotential2D* Measure::potential2d() const { return psi2_.get(); }

double Measure::point_mass(const VecD& x) const {
    if (kind_ != Kind::Empirical) return 0.0;
    std::size_t c = 0;
    for (const VecD& p : points_)
        if ((p - x).norm() <= 1e-12 * (1.0 + x.norm())) ++c;
    return static_cast<double>(c) / static_cast<double>(points_.size());
}

double Measure::scale() const {
    switch (kind_) {
        case Kind::Empirical: {
            double r = 1.0;
            for (const VecD& p : points_) r = std::max(r, p.norm());
            return r;
        }
        case Kind::UniformPolygonal:
        case Kind::UnitSquare: {
            const Polygon h = region_.hull();
            double r = 1.0;
            for (const Vec2& v : h.vertices()) r = std::max(r, v.norm());
            return r;
        }
        case Kind::Gaussian: {
            Eigen::SelfAdjointEigenSolver<MatD> es(sigma_);
            return mu_.norm() + 10.0 * std::sqrt(es.eigenvalues().maxCoeff());
        }
        case Kind::AlphaSymmetric:
            return f1_.kind == MarginalCDF::Kind::Cauchy ? 1e4 : 10.0;
        case Kind::UniformBall: return 1.0;
        case Kind::LogConcave1D:
            return std::max(std::abs(lc_lo_), std::abs(lc_hi_));
        case Kind::LogConcave2D: return mu_.norm() + lc_hi_;
        case Kind::PiecewiseUniform1D: {
            double r = 1.0;
            for (const auto& s : segments_)
                r = std::max({r, std::abs(s[0]), std::abs(s[1])});
            return r;
        }
    }
    return 1.0;
}

// ---------------------------------------------------------------------------
// halfspace probability

namespace {

double lp_norm(const VecD& u, double alpha) {
    double s = 0.0;
    for (int i = 0; i < u.size(); ++i) s += std::pow(std::abs(u(i)), alpha);
    return std::pow(s, 1.0 / alpha);
}

}  // namespace

double Measure::halfspace_prob(const HalfspaceD& h) const {
    if (h.normal.size() != dim_)
        throw std::invalid_argument("halfspace_prob: dimension mismatch");
    const VecD u = h.normal / h.normal.norm();
    const double a = h.offset / h.normal.norm();
    switch (kind_) {
        case Kind::Empirical: {
            const double tol = 1e-12 * (1.0 + std::abs(a) + scale());
            std::size_t c = 0;
            for (const VecD& p : points_)
                if (u.dot(p) <= a + tol) ++c;
            return static_cast<double>(c) / static_cast<double>(points_.size());
        }
        case Kind::UniformPolygonal:
        case Kind::UnitSquare: {
            const Halfplane hp(to_vec2(u), a);
            double prob = 0.0;
            for (std::size_t i = 0; i < region_.components.size(); ++i) {
                const Polygon& poly = region_.components[i];
                const double cut = clip_halfplane(poly, hp).area();
                prob += region_.weights[i] * cut / poly.area();
            }
            return std::min(1.0, prob);
        }
        case Kind::Gaussian: {
            const double sd = std::sqrt(u.dot(sigma_ * u));
            return norm_cdf((a - mu_.dot(u)) / sd);
        }
        case Kind::AlphaSymmetric: {
            const double na = lp_norm(u, alpha_);
            return f1_.cdf(a / na);
        }
        case Kind::UniformBall:
            return ball_marginal_cdf(dim_, std::clamp(a, -1.0, 1.0));
        case Kind::LogConcave1D: {
            const double s = u(0);  // +-1
            const double lo = lc_lo_, hi = lc_hi_;
            const ConvexPotential1D& p = *psi1_;
            auto f = [&p](double x) { return std::exp(-p.psi(x)); };
            double num;
            if (s > 0.0) {
                if (a <= lo) return 0.0;
                if (a >= hi) return 1.0;
                num = integrate(f, lo, a, 1e-9);
            } else {
                if (-a <= lo) return 1.0;
                if (-a >= hi) return 0.0;
                num = integrate(f, -a, hi, 1e-9);
            }
            return std::clamp(num / lc_mass_, 0.0, 1.0);
        }
        case Kind::LogConcave2D: {
            const Vec2 un = to_vec2(u);
            const Vec2 up = un.perp();
            const Vec2 c = to_vec2(mu_);
            const double r = lc_hi_;
            const ConvexPotential2D& p = *psi2_;
            const double tc = un.dot(c);
            const double t0 = -r * std::sqrt(2.0), t1 = a - tc;
            if (t1 <= t0) return 0.0;
            const double rr = r * std::sqrt(2.0);
            auto slab = [&](double t) {
                return integrate(
                    [&](double s) {
                        const Vec2 q = c + t * un + s * up;
                        return std::exp(-p.psi(q));
                    },
                    -rr, rr, 1e-9);
            };
            const double num = integrate(slab, t0, std::min(t1, rr), 1e-8);
            return std::clamp(num / lc_mass_, 0.0, 1.0);
        }
        case Kind::PiecewiseUniform1D: {
            const double s = u(0);
            double prob = 0.0;
            for (const auto& seg : segments_) {
                const double lo = seg[0], hi = seg[1], mass = seg[2];
                double frac;
                if (s > 0.0)
                    frac = std::clamp((a - lo) / (hi - lo), 0.0, 1.0);
                else
                    frac = std::clamp((hi + a) / (hi - lo), 0.0, 1.0);
                prob += mass * frac;
            }
            return prob;
        }
    }
    throw std::logic_error("halfspace_prob: bad kind");
}

double Measure::halfspace_prob2d(const Halfplane& h) const {
    return halfspace_prob({to_vecd(h.normal), h.offset});
}

double Measure::upper_prob(const VecD& u, double s) const {
    return halfspace_prob({-u, -s});
}

// ---------------------------------------------------------------------------
// quantiles

namespace {

double empirical_upper_quantile(const std::vector<VecD>& pts, const VecD& u,
                                double c, bool strict) {
    const std::size_t n = pts.size();
    std::vector<double> proj(n);
    for (std::size_t i = 0; i < n; ++i) proj[i] = u.dot(pts[i]);
    const double eps = 1e-9;
    std::size_t k;
    if (!strict) {
        k = static_cast<std::size_t>(std::ceil(c * n - eps));
        if (k < 1) k = 1;
    } else {
        k = static_cast<std::size_t>(std::floor(c * n + eps)) + 1;
    }
    if (k > n)
        throw std::domain_error("upper_quantile: level not attainable");
    // k-th largest projection
    std::nth_element(proj.begin(),
                     proj.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     proj.end(), std::greater<double>());
    return proj[k - 1];
}

}  // namespace

double Measure::upper_quantile(const VecD& u, double c, bool strict) const {
    const VecD un = u / u.norm();
    switch (kind_) {
        case Kind::Empirical:
            return empirical_upper_quantile(points_, un, c, strict);
        case Kind::Gaussian: {
            const double sd = std::sqrt(un.dot(sigma_ * un));
            return mu_.dot(un) + sd * norm_quantile(1.0 - c);
        }
        case Kind::AlphaSymmetric:
            return lp_norm(un, alpha_) * f1_.quantile(1.0 - c);
        case Kind::UniformBall:
            return ball_marginal_quantile(dim_, 1.0 - c);
        default: break;
    }
    // continuous variants with possible density gaps: predicate bisection
    const double tol = 1e-12;
    double r = 2.0 * scale() + 1.0;
    auto S = [&](double s) { return upper_prob(un, s); };
    while (S(-r) < c || S(r) > c) {
        r *= 2.0;
        if (r > 1e12)
            throw std::domain_error("upper_quantile: bracket expansion failed");
    }
    auto pred = strict ? std::function<bool(double)>(
                             [&](double s) { return S(s) > c + tol; })
                       : std::function<bool(double)>(
                             [&](double s) { return S(s) >= c - tol; });
    return bisect_boundary(pred, -r, r, 1e-11 * std::max(1.0, scale()));
}

double Measure::projection_quantile(const VecD& u, double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("projection_quantile: p outside (0,1)");
    return -upper_quantile(-u, p, /*strict=*/false);
}

// ---------------------------------------------------------------------------
// moments

VecD Measure::mean() const {
    switch (kind_) {
        case Kind::Empirical: {
            VecD m = VecD::Zero(dim_);
            for (const VecD& p : points_) m += p;
            return m / static_cast<double>(points_.size());
        }
        case Kind::UniformPolygonal:
        case Kind::UnitSquare: {
            Vec2 m{0, 0};
            for (std::size_t i = 0; i < region_.components.size(); ++i)
                m = m + region_.weights[i] * region_.components[i].centroid();
            return to_vecd(m);
        }
        case Kind::Gaussian: return mu_;
        case Kind::AlphaSymmetric:
            if (f1_.kind == MarginalCDF::Kind::Cauchy)
                throw std::domain_error("mean: undefined for Cauchy marginals");
            return VecD::Zero(dim_);
        case Kind::UniformBall: return VecD::Zero(dim_);
        case Kind::LogConcave1D: {
            const ConvexPotential1D& p = *psi1_;
            const double m = integrate(
                [&p](double x) { return x * std::exp(-p.psi(x)); }, lc_lo_,
                lc_hi_, 1e-10);
            VecD v(1);
            v << m / lc_mass_;
            return v;
        }
        case Kind::PiecewiseUniform1D: {
            double m = 0.0;
            for (const auto& s : segments_) m += s[2] * 0.5 * (s[0] + s[1]);
            VecD v(1);
            v << m;
            return v;
        }
        default:
            throw std::domain_error("mean: unsupported variant");
    }
}

MatD Measure::covariance() const {
    switch (kind_) {
        case Kind::Empirical: {
            const VecD m = mean();
            MatD c = MatD::Zero(dim_, dim_);
            for (const VecD& p : points_) c += (p - m) * (p - m).transpose();
            return c / static_cast<double>(points_.size());
        }
        case Kind::UniformPolygonal:
        case Kind::UnitSquare: {
            const Vec2 m = to_vec2(mean());
            MatD c = MatD::Zero(2, 2);
            for (std::size_t i = 0; i < region_.components.size(); ++i) {
                const Polygon& poly = region_.components[i];
                const Mat2Sym s = polygon_covariance(poly);
                const Vec2 d = poly.centroid() - m;
                const double w = region_.weights[i];
                c(0, 0) += w * (s.xx + d.x * d.x);
                c(0, 1) += w * (s.xy + d.x * d.y);
                c(1, 1) += w * (s.yy + d.y * d.y);
            }
            c(1, 0) = c(0, 1);
            return c;
        }
        case Kind::Gaussian: return sigma_;
        case Kind::AlphaSymmetric:
            if (f1_.kind == MarginalCDF::Kind::GaussianPhi && alpha_ == 2.0)
                return MatD::Identity(dim_, dim_);
            throw std::domain_error("covariance: undefined for this variant");
        case Kind::UniformBall:
            return MatD::Identity(dim_, dim_) / (dim_ + 2.0);
        case Kind::LogConcave1D: {
            const double m = mean()(0);
            const ConvexPotential1D& p = *psi1_;
            const double v = integrate(
                                 [&p, m](double x) {
                                     return (x - m) * (x - m) *
                                            std::exp(-p.psi(x));
                                 },
                                 lc_lo_, lc_hi_, 1e-10) /
                             lc_mass_;
            MatD c(1, 1);
            c << v;
            return c;
        }
        case Kind::PiecewiseUniform1D: {
            const double m = mean()(0);
            double e2 = 0.0;
            for (const auto& s : segments_)
                e2 += s[2] * (s[0] * s[0] + s[0] * s[1] + s[1] * s[1]) / 3.0;
            MatD c(1, 1);
            c << e2 - m * m;
            return c;
        }
        default:
            throw std::domain_error("covariance: unsupported variant");
    }
}

// ---------------------------------------------------------------------------
// sampling

namespace {

// fan/ear triangulation of a simple polygon (CCW)
std::vector<std::array<Vec2, 3>> triangulate(const Polygon& poly) {
    std::vector<Vec2> v = poly.vertices();
    std::vector<std::array<Vec2, 3>> tris;
    if (v.size() < 3) return tris;
    if (poly.is_convex(1e-12)) {
        for (std::size_t i = 1; i + 1 < v.size(); ++i)
            tris.push_back({v[0], v[i], v[i + 1]});
        return tris;
    }
    // ear clipping
    auto inside_tri = [](const Vec2& a, const Vec2& b, const Vec2& c,
                         const Vec2& p) {
        const double d1 = (b - a).cross(p - a);
        const double d2 = (c - b).cross(p - b);
        const double d3 = (a - c).cross(p - c);
        return d1 > 0 && d2 > 0 && d3 > 0;
    };
    int guard = static_cast<int>(v.size() * v.size()) + 16;
    while (v.size() > 3 && guard-- > 0) {
        bool clipped = false;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = v[(i + n - 1) % n];
            const Vec2& b = v[i];
            const Vec2& c = v[(i + 1) % n];
            if ((b - a).cross(c - b) <= 0) continue;  // reflex
            bool ear = true;
            for (std::size_t j = 0; j < n && ear; ++j) {
                if (j == (i + n - 1) % n || j == i || j == (i + 1) % n)
                    continue;
                if (inside_tri(a, b, c, v[j])) ear = false;
            }
            if (ear) {
                tris.push_back({a, b, c});
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                clipped = true;
                break;
            }
        }
        if (!clipped) break;
    }
    if (v.size() == 3) tris.push_back({v[0], v[1], v[2]});
    return tris;
}

Vec2 sample_triangle(const std::array<Vec2, 3>& t, Rng& rng) {
    double u = rng.uniform(), w = rng.uniform();
    if (u + w > 1.0) {
        u = 1.0 - u;
        w = 1.0 - w;
    }
    return t[0] + u * (t[1] - t[0]) + w * (t[2] - t[0]);
}

}  // namespace

std::vector<VecD> Measure::sample(std::size_t n, std::uint64_t seed) const {
    if (n < 1) throw std::invalid_argument("sample: n < 1");
    Rng rng(seed);
    std::vector<VecD> out;
    out.reserve(n);
    switch (kind_) {
        case Kind::Empirical: {
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(points_[rng.next_u64() % points_.size()]);
            return out;
        }
        case Kind::UniformPolygonal:
        case Kind::UnitSquare: {
            std::vector<std::array<Vec2, 3>> tris;
            std::vector<double> cum;
            double total = 0.0;
            for (const Polygon& p : region_.components) {
                for (const auto& t : triangulate(p)) {
                    const double a =
                        0.5 * std::abs((t[1] - t[0]).cross(t[2] - t[0]));
                    tris.push_back(t);
                    total += a;
                    cum.push_back(total);
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double r = rng.uniform() * total;
                const std::size_t k = static_cast<std::size_t>(
                    std::lower_bound(cum.begin(), cum.end(), r) - cum.begin());
                out.push_back(to_vecd(
                    sample_triangle(tris[std::min(k, tris.size() - 1)], rng)));
            }
            return out;
        }
        case Kind::Gaussian: {
            for (std::size_t i = 0; i < n; ++i) {
                VecD z(dim_);
                for (int j = 0; j < dim_; ++j) z(j) = rng.normal();
                out.push_back(mu_ + chol_ * z);
            }
            return out;
        }
        case Kind::AlphaSymmetric: {
            if (alpha_ == 2.0 && f1_.kind == MarginalCDF::Kind::GaussianPhi) {
                for (std::size_t i = 0; i < n; ++i) {
                    VecD z(dim_);
                    for (int j = 0; j < dim_; ++j) z(j) = rng.normal();
                    out.push_back(z);
                }
                return out;
            }
            if (alpha_ == 1.0 && f1_.kind == MarginalCDF::Kind::Cauchy) {
                for (std::size_t i = 0; i < n; ++i) {
                    VecD z(dim_);
                    for (int j = 0; j < dim_; ++j) {
                        double v;
                        do { v = rng.uniform(); } while (v <= 0.0 || v >= 1.0);
                        z(j) = cauchy_quantile(v);
                    }
                    out.push_back(z);
                }
                return out;
            }
            throw std::domain_error(
                "sample: alpha-symmetric sampling supported only for "
                "alpha in {1, 2}");
        }
        case Kind::UniformBall: {
            for (std::size_t i = 0; i < n; ++i) {
                VecD z(dim_);
                double nz;
                do {
                    for (int j = 0; j < dim_; ++j) z(j) = rng.normal();
                    nz = z.norm();
                } while (nz < 1e-12);
                const double r = std::pow(rng.uniform(), 1.0 / dim_);
                out.push_back(z * (r / nz));
            }
            return out;
        }
        case Kind::LogConcave1D: {
            // inverse-CDF on a fixed grid with linear interpolation
            const int grid = 4096;
            const ConvexPotential1D& p = *psi1_;
            std::vector<double> xs(grid + 1), cdf(grid + 1);
            double acc = 0.0;
            xs[0] = lc_lo_;
            cdf[0] = 0.0;
            for (int i = 1; i <= grid; ++i) {
                xs[i] = lc_lo_ + (lc_hi_ - lc_lo_) * i / grid;
                acc += integrate(
                    [&p](double x) { return std::exp(-p.psi(x)); }, xs[i - 1],
                    xs[i], 1e-9);
                cdf[i] = acc;
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double r = rng.uniform() * acc;
                const std::size_t k = static_cast<std::size_t>(
                    std::lower_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
                const std::size_t k1 = std::clamp<std::size_t>(k, 1, grid);
                const double f =
                    (r - cdf[k1 - 1]) / std::max(1e-300, cdf[k1] - cdf[k1 - 1]);
                VecD v(1);
                v << xs[k1 - 1] + f * (xs[k1] - xs[k1 - 1]);
                out.push_back(v);
            }
            return out;
        }
        case Kind::PiecewiseUniform1D: {
            std::vector<double> cum;
            double total = 0.0;
            for (const auto& s : segments_) {
                total += s[2];
                cum.push_back(total);
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double r = rng.uniform() * total;
                const std::size_t k = static_cast<std::size_t>(
                    std::lower_bound(cum.begin(), cum.end(), r) - cum.begin());
                const auto& s = segments_[std::min(k, segments_.size() - 1)];
                VecD v(1);
                v << s[0] + rng.uniform() * (s[1] - s[0]);
                out.push_back(v);
            }
            return out;
        }
        default:
            throw std::domain_error("sample: unsupported variant");
    }
}

std::vector<Vec2> Measure::sample2d(std::size_t n, std::uint64_t seed) const {
    if (dim_ != 2) throw std::domain_error("sample2d: measure is not 2-D");
    std::vector<Vec2> out;
    out.reserve(n);
    for (const VecD& v : sample(n, seed)) out.push_back(to_vec2(v));
    return out;
}

// ---------------------------------------------------------------------------
// UniformPolygonalOracle

UniformPolygonalOracle::UniformPolygonalOracle(const Measure& m,
                                               const Vec2& u) {
    const PolygonalRegion* r = m.region();
    if (!r) throw std::invalid_argument("UniformPolygonalOracle: wrong kind");
    tmin_ = std::numeric_limits<double>::infinity();
    tmax_ = -tmin_;
    for (std::size_t i = 0; i < r->components.size(); ++i) {
        profiles_.emplace_back(r->components[i], u);
        weights_.push_back(r->weights[i] / profiles_.back().total_area());
        tmin_ = std::min(tmin_, profiles_.back().t_min());
        tmax_ = std::max(tmax_, profiles_.back().t_max());
    }
}

double UniformPolygonalOracle::cdf(double t) const {
    double f = 0.0;
    for (std::size_t i = 0; i < profiles_.size(); ++i)
        f += weights_[i] * profiles_[i].area_below(t);
    return std::min(1.0, f);
}

double UniformPolygonalOracle::quantile_weak(double c) const {
    const double tol = 1e-13;
    auto pred = [&](double s) { return 1.0 - cdf(s) >= c - tol; };
    if (!pred(tmin_)) return tmin_;
    if (pred(tmax_)) return tmax_;
    return bisect_boundary(pred, tmin_, tmax_,
                           1e-13 * std::max(1.0, tmax_ - tmin_));
}

double UniformPolygonalOracle::quantile_strict(double c) const {
    const double tol = 1e-13;
    auto pred = [&](double s) { return 1.0 - cdf(s) > c + tol; };
    if (!pred(tmin_)) return tmin_;
    if (pred(tmax_)) return tmax_;
    return bisect_boundary(pred, tmin_, tmax_,
                           1e-13 * std::max(1.0, tmax_ - tmin_));
}

}  // namespace hsdepth
