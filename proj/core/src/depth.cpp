#include "hsdepth/depth.hpp"

#include <algorithm>
#include <cmath>

namespace hsdepth {

namespace {

double two_pi() { return 2.0 * M_PI; }

double wrap_angle(double a) {
    a = std::fmod(a, two_pi());
    if (a < 0) a += two_pi();
    return a;
}

// #{angles in the open arc (a, a + pi)} for a sorted ascending list
std::size_t count_open_halfarc(const std::vector<double>& s, double a) {
    const double b = a + M_PI;
    auto ub = std::upper_bound(s.begin(), s.end(), a);
    if (b < two_pi()) {
        auto lb = std::lower_bound(s.begin(), s.end(), b);
        return static_cast<std::size_t>(lb - ub);
    }
    auto lb = std::lower_bound(s.begin(), s.end(), b - two_pi());
    return static_cast<std::size_t>(s.end() - ub) +
           static_cast<std::size_t>(lb - s.begin());
}

}  // namespace

DepthResult hd_empirical_2d(const Vec2& x, const std::vector<Vec2>& pts) {
    if (pts.empty()) throw std::invalid_argument("hd_empirical_2d: no points");
    const std::size_t n = pts.size();
    const double tol = 1e-12 * (1.0 + x.norm());
    std::size_t m0 = 0;
    std::vector<double> ang;
    ang.reserve(n);
    for (const Vec2& p : pts) {
        const Vec2 v = p - x;
        if (v.norm() <= tol)
            ++m0;
        else
            ang.push_back(wrap_angle(std::atan2(v.y, v.x)));
    }
    DepthResult r;
    r.method = DepthResult::Method::Exact;
    if (ang.empty()) {
        r.value = 1.0;
        return r;
    }
    std::sort(ang.begin(), ang.end());
    // kinks of the count function occur where the boundary line passes an
    // atom: at every angle theta_i and its antipode
    std::vector<double> ev;
    ev.reserve(2 * ang.size());
    for (double a : ang) {
        ev.push_back(a);
        ev.push_back(wrap_angle(a + M_PI));
    }
    std::sort(ev.begin(), ev.end());
    std::size_t best = n + 1;
    double best_phi = 0.0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const double next =
            (i + 1 < ev.size()) ? ev[i + 1] : ev.front() + two_pi();
        // a zero-length gap has no generic direction inside it; an arc
        // anchored at the event itself would drop both an atom and its
        // antipode, which no closed halfplane can do
        if (next - ev[i] < 1e-12) continue;
        const double mid = wrap_angle(0.5 * (ev[i] + next));
        const std::size_t c = count_open_halfarc(ang, mid);
        if (c < best) {
            best = c;
            best_phi = mid;
        }
    }
    r.value = static_cast<double>(best + m0) / static_cast<double>(n);
    r.directions.push_back(to_vecd(dir(best_phi - M_PI / 2.0)));
    return r;
}

namespace {

std::size_t count_halfspace(const std::vector<VecD>& pts, const VecD& x,
                            const VecD& u) {
    std::size_t c = 0;
    for (const VecD& p : pts)
        if (u.dot(p - x) <= 0.0) ++c;
    return c;
}

}  // namespace

DepthResult hd_empirical_brute(const VecD& x, const std::vector<VecD>& pts) {
    if (pts.empty())
        throw std::invalid_argument("hd_empirical_brute: no points");
    if (pts.size() > 60)
        throw std::invalid_argument("hd_empirical_brute: n > 60");
    const int d = static_cast<int>(x.size());
    if (d > 3) throw std::invalid_argument("hd_empirical_brute: d > 3");
    const std::size_t n = pts.size();
    DepthResult r;
    r.method = DepthResult::Method::Exact;

    std::vector<VecD> dirs;
    const double tol = 1e-12 * (1.0 + x.norm());
    std::vector<VecD> off;  // non-coincident displacements, normalized
    for (const VecD& p : pts) {
        const VecD v = p - x;
        if (v.norm() > tol) off.push_back(v / v.norm());
    }
    if (off.empty()) {
        r.value = 1.0;
        return r;
    }
    const double eps = 2e-7;
    if (d == 1) {
        VecD u(1);
        u << 1.0;
        dirs.push_back(u);
        dirs.push_back(-u);
    } else if (d == 2) {
        for (const VecD& a : off) {
            VecD w(2);
            w << -a(1), a(0);
            for (double s : {-eps, 0.0, eps}) {
                VecD u = w + s * a;
                u /= u.norm();
                dirs.push_back(u);
                dirs.push_back(-u);
            }
        }
    } else {
        for (std::size_t i = 0; i < off.size(); ++i) {
            for (std::size_t j = i + 1; j < off.size(); ++j) {
                Eigen::Vector3d a = off[i], b = off[j];
                Eigen::Vector3d w = a.cross(b);
                if (w.norm() < 1e-10) continue;
                w /= w.norm();
                for (double s1 : {-eps, 0.0, eps})
                    for (double s2 : {-eps, 0.0, eps}) {
                        Eigen::Vector3d u = w + s1 * a + s2 * b;
                        u /= u.norm();
                        dirs.push_back(u);
                        dirs.push_back(-u);
                    }
            }
            // degenerate configs (all atoms collinear with x)
            Eigen::Vector3d a = off[i];
            Eigen::Vector3d w = a.cross(Eigen::Vector3d(1, 0, 0));
            if (w.norm() < 1e-8) w = a.cross(Eigen::Vector3d(0, 1, 0));
            w /= w.norm();
            dirs.push_back(w);
            dirs.push_back(-w);
        }
    }
    std::size_t best = n + 1;
    VecD best_u;
    for (const VecD& u : dirs) {
        const std::size_t c = count_halfspace(pts, x, u);
        if (c < best) {
            best = c;
            best_u = u;
        }
    }
    r.value = static_cast<double>(best) / static_cast<double>(n);
    r.directions.push_back(best_u);
    return r;
}

DepthResult hd_analytic(const VecD& x, const Measure& m) {
    DepthResult r;
    r.method = DepthResult::Method::ClosedForm;
    switch (m.kind()) {
        case Measure::Kind::Gaussian: {
            const VecD& mu = m.gaussian_mean();
            const MatD& sig = m.gaussian_cov();
            const VecD v = x - mu;
            const double dist = std::sqrt(v.dot(sig.llt().solve(v)));
            r.value = norm_cdf(-dist);
            if (dist > 1e-12) {
                VecD u = sig.llt().solve(v);
                r.directions.push_back(u / u.norm());
            }
            return r;
        }
        case Measure::Kind::AlphaSymmetric: {
            const double a = m.alpha();
            double nrm;
            if (a == 1.0) {
                nrm = x.lpNorm<Eigen::Infinity>();
            } else if (a > 1.0) {
                const double q = a / (a - 1.0);
                double s = 0.0;
                for (int i = 0; i < x.size(); ++i)
                    s += std::pow(std::abs(x(i)), q);
                nrm = std::pow(s, 1.0 / q);
            } else {
                throw std::domain_error(
                    "hd_analytic: alpha < 1 has no conjugate-norm closed "
                    "form");
            }
            r.value = m.marginal().cdf(-nrm);
            return r;
        }
        case Measure::Kind::UniformBall: {
            const double nx = x.norm();
            r.value = nx >= 1.0 ? 0.0 : ball_marginal_cdf(m.dim(), -nx);
            if (nx > 1e-12) r.directions.push_back(x / nx);
            return r;
        }
        case Measure::Kind::UnitSquare: {
            const double mx = std::min(x(0), 1.0 - x(0));
            const double my = std::min(x(1), 1.0 - x(1));
            r.value = std::max(0.0, 2.0 * std::max(0.0, mx) *
                                        std::max(0.0, my));
            if (mx <= my)
                r.directions.push_back(to_vecd(x(0) <= 0.5 ? Vec2{-1, 0}
                                                           : Vec2{1, 0}));
            else
                r.directions.push_back(to_vecd(x(1) <= 0.5 ? Vec2{0, -1}
                                                           : Vec2{0, 1}));
            return r;
        }
        default:
            throw std::invalid_argument("hd_analytic: unsupported variant");
    }
}

DepthResult hd_polygonal(const Vec2& x, const Measure& m) {
    const PolygonalRegion* reg = m.region();
    if (!reg) throw std::invalid_argument("hd_polygonal: not polygon-uniform");

    auto f = [&](double th) {
        const Vec2 u = dir(th);
        return m.halfspace_prob2d(Halfplane(u, u.dot(x)));
    };

    // kinks only where the boundary line sweeps over a vertex
    std::vector<double> cand;
    double lip = 0.0;
    for (std::size_t i = 0; i < reg->components.size(); ++i) {
        const Polygon& poly = reg->components[i];
        double rmax = 0.0;
        for (const Vec2& v : poly.vertices()) {
            const double b = std::atan2(v.y - x.y, v.x - x.x);
            cand.push_back(wrap_angle(b + M_PI / 2.0));
            cand.push_back(wrap_angle(b - M_PI / 2.0));
            rmax = std::max(rmax, (v - x).norm());
        }
        lip += reg->weights[i] / poly.area() * poly.diameter() * rmax;
    }
    for (int k = 0; k < 256; ++k) cand.push_back(two_pi() * k / 256.0);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](double a, double b) { return b - a < 1e-12; }),
               cand.end());

    DepthResult r;
    r.method = DepthResult::Method::Optimized;
    double best = 2.0;
    std::vector<double> best_angles;
    const std::size_t nc = cand.size();
    for (std::size_t i = 0; i < nc; ++i) {
        const double a = cand[i];
        const double b = (i + 1 < nc) ? cand[i + 1] : cand.front() + two_pi();
        const double th =
            golden_max([&](double t) { return -f(t); }, a, b, 1e-10);
        for (double t : {a, th}) {
            const double v = f(t);
            if (v < best - 1e-9) {
                best = v;
                best_angles.assign(1, t);
            } else if (v < best + 1e-9) {
                bool dup = false;
                for (double s : best_angles)
                    if (std::abs(wrap_angle(s - t + M_PI) - M_PI) < 1e-6)
                        dup = true;
                if (!dup) best_angles.push_back(t);
            }
        }
    }
    r.value = best;
    r.bound = lip * 1e-10 + 1e-12;
    for (double t : best_angles) r.directions.push_back(to_vecd(dir(t)));
    return r;
}

DepthResult hd(const VecD& x, const Measure& m) {
    switch (m.kind()) {
        case Measure::Kind::Empirical: {
            if (m.dim() == 2) {
                std::vector<Vec2> pts;
                for (const VecD& p : *m.points()) pts.push_back(to_vec2(p));
                return hd_empirical_2d(to_vec2(x), pts);
            }
            return hd_empirical_brute(x, *m.points());
        }
        case Measure::Kind::UnitSquare:
        case Measure::Kind::Gaussian:
        case Measure::Kind::AlphaSymmetric:
        case Measure::Kind::UniformBall:
            return hd_analytic(x, m);
        case Measure::Kind::UniformPolygonal:
            return hd_polygonal(to_vec2(x), m);
        case Measure::Kind::LogConcave1D:
        case Measure::Kind::PiecewiseUniform1D: {
            DepthResult r;
            r.method = DepthResult::Method::Exact;
            VecD e(1);
            e << 1.0;
            const double lo = m.halfspace_prob({e, x(0)});
            const double hi = m.upper_prob(e, x(0));
            r.value = std::min(lo, hi);
            r.directions.push_back(lo <= hi ? e : VecD(-e));
            return r;
        }
        case Measure::Kind::LogConcave2D: {
            // smooth 2-D density: coarse angular grid + golden refinement
            const Vec2 x2 = to_vec2(x);
            auto f = [&](double th) {
                const Vec2 u = dir(th);
                return m.halfspace_prob2d(Halfplane(u, u.dot(x2)));
            };
            const int grid = 128;
            std::vector<double> vals(grid);
            int imin = 0;
            for (int k = 0; k < grid; ++k) {
                vals[k] = f(two_pi() * k / grid);
                if (vals[k] < vals[imin]) imin = k;
            }
            const double step = two_pi() / grid;
            const double th = golden_max(
                [&](double t) { return -f(t); }, imin * step - step,
                imin * step + step, 1e-8);
            DepthResult r;
            r.method = DepthResult::Method::Optimized;
            r.value = f(th);
            r.bound = 1e-6;
            r.directions.push_back(to_vecd(dir(th)));
            return r;
        }
    }
    throw std::logic_error("hd: bad kind");
}

double mahalanobis_depth(const VecD& x, const VecD& mu, const MatD& sigma) {
    Eigen::LLT<MatD> llt(sigma);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("mahalanobis_depth: sigma not PD");
    const VecD v = x - mu;
    const double dist = std::sqrt(v.dot(llt.solve(v)));
    return 1.0 / (1.0 + dist);
}

bool EllipsoidRegion::contains(const VecD& x, double tol) const {
    const VecD v = x - center;
    const double dist = std::sqrt(v.dot(sigma.llt().solve(v)));
    return dist <= radius + tol;
}

EllipsoidRegion mahalanobis_region(const VecD& mu, const MatD& sigma,
                                   double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("mahalanobis_region: delta outside (0,1]");
    Eigen::LLT<MatD> llt(sigma);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("mahalanobis_region: sigma not PD");
    return {mu, sigma, (1.0 - delta) / delta};
}

MCEstimate oja_depth_mc(const VecD& x, const Measure& m, std::size_t trials,
                        std::uint64_t seed) {
    const int d = m.dim();
    const double sdet = std::sqrt(m.covariance().determinant());
    if (!(sdet > 0.0))
        throw std::invalid_argument("oja_depth_mc: degenerate covariance");
    const std::vector<VecD> xs =
        m.sample(trials * static_cast<std::size_t>(d), seed);
    double fact = 1.0;
    for (int i = 2; i <= d; ++i) fact *= i;
    double s = 0.0, s2 = 0.0;
    MatD M(d, d);
    for (std::size_t t = 0; t < trials; ++t) {
        for (int j = 0; j < d; ++j)
            M.col(j) = xs[t * static_cast<std::size_t>(d) +
                          static_cast<std::size_t>(j)] -
                       x;
        const double a = std::abs(M.determinant()) / (fact * sdet);
        s += a;
        s2 += a * a;
    }
    const double n = static_cast<double>(trials);
    const double mean = s / n;
    const double var = std::max(0.0, s2 / n - mean * mean);
    const double se_mean = std::sqrt(var / n);
    MCEstimate est;
    est.value = 1.0 / (1.0 + mean);
    // delta method through a -> 1/(1+a)
    est.std_error = se_mean / ((1.0 + mean) * (1.0 + mean));
    est.trials = trials;
    return est;
}

CentroidBody2D centroid_body_2d(const Measure& m, const Vec2& x, int grid) {
    const PolygonalRegion* reg = m.region();
    if (!reg)
        throw std::invalid_argument("centroid_body_2d: not polygon-uniform");
    std::vector<Polygon> shifted;
    for (const Polygon& p : reg->components) {
        if (p.area() <= 0.0)
            throw std::invalid_argument("centroid_body_2d: zero-area region");
        shifted.push_back(p.translated(-x));
    }
    std::vector<Halfplane> hs;
    hs.reserve(static_cast<std::size_t>(grid));
    double scale = 0.0;
    for (int k = 0; k < grid; ++k) {
        const Vec2 u = dir(two_pi() * k / grid);
        double h = 0.0;
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            const Polygon& p = shifted[i];
            // split K - x along <y,u> = 0 and integrate |<y,u>| exactly
            const double pos =
                linear_moment(clip_halfplane(p, Halfplane(-u, 0.0)), u);
            const double neg =
                linear_moment(clip_halfplane(p, Halfplane(u, 0.0)), u);
            h += reg->weights[i] / p.area() * (pos - neg);
        }
        hs.emplace_back(u, h);
        scale = std::max(scale, h);
    }
    auto inter = intersect_halfplanes(hs, std::max(scale, 1e-12));
    if (inter.kind != HalfplaneIntersection::Kind::Bounded)
        throw std::domain_error("centroid_body_2d: reconstruction failed");
    CentroidBody2D z;
    z.polygon = inter.polygon;
    z.volume = inter.polygon.area();
    return z;
}

double oja_via_centroid_body(const Measure& m, const Vec2& x, int grid) {
    const double sdet = std::sqrt(m.covariance().determinant());
    if (!(sdet > 0.0))
        throw std::invalid_argument("oja_via_centroid_body: degenerate "
                                    "covariance");
    const CentroidBody2D z = centroid_body_2d(m, x, grid);
    // zonoid volume identity: vol(Z_x) = 2^d E vol[x, X_1..X_d], d = 2
    return 1.0 / (1.0 + z.volume / (4.0 * sdet));
}

DepthLabel classify_max_depth(const VecD& x, const Measure& m1,
                              const Measure& m2) {
    if (m1.dim() != m2.dim() || m1.dim() != x.size())
        throw std::invalid_argument("classify_max_depth: dimension mismatch");
    const double d1 = hd(x, m1).value;
    const double d2 = hd(x, m2).value;
    if ((d1 <= 0.0 && d2 <= 0.0) || std::abs(d1 - d2) <= 1e-12)
        return DepthLabel::Unclassified;
    return d1 > d2 ? DepthLabel::First : DepthLabel::Second;
}

}  // namespace hsdepth
