#include "hsdepth/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hsdepth/numeric.hpp"
#include "hsdepth/regions.hpp"

namespace hsdepth {

namespace {

// full avalanche over (seed, stream): adjacent stream ids must not map to
// seeds a fixed SplitMix increment apart, or their streams overlap
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct DeficitStats {
    double mean = 0.0;
    double se = 0.0;
};

DeficitStats summarize(const std::vector<double>& deficits) {
    const double n = static_cast<double>(deficits.size());
    const double mean =
        std::accumulate(deficits.begin(), deficits.end(), 0.0) / n;
    double var = 0.0;
    for (double d : deficits) var += (d - mean) * (d - mean);
    var = deficits.size() > 1 ? var / (n - 1.0) : 0.0;
    return {mean, std::sqrt(var / n)};
}

}  // namespace

FloatingApprox floating_body_algorithm(const Polygon& body, double delta) {
    if (body.degenerate() || !body.is_convex())
        throw std::invalid_argument("floating_body_algorithm: not convex");
    const double A = body.area();
    if (!(delta > 0.0) || delta > A / (4.0 * std::exp(4.0)))
        throw std::invalid_argument(
            "floating_body_algorithm: delta outside (0, vol K / (4 e^4)]");

    // sweep the cap normal over a fine angular grid; whenever the
    // delta-cap excludes every chosen vertex, add the support point of the
    // body in that direction (a boundary point inside the cap). Every grid
    // cap then contains a vertex, which is what K_delta subset P_N needs.
    const int steps = 16384;
    FloatingApprox out;
    out.delta = delta;
    for (int k = 0; k < steps; ++k) {
        const Vec2 u = dir(2.0 * M_PI * k / steps);
        const double t = CutProfile(body, u).offset_for_area(A - delta);
        bool covered = false;
        for (const Vec2& v : out.vertices)
            if (u.dot(v) > t + 1e-12) {
                covered = true;
                break;
            }
        if (covered) continue;
        const Vec2* best = &body.vertices()[0];
        for (const Vec2& v : body.vertices())
            if (u.dot(v) > u.dot(*best)) best = &v;
        out.vertices.push_back(*best);
    }
    out.polygon = convex_hull(out.vertices);

    // verify K_delta subset P_N subset K
    const Measure m = Measure::uniform_polygon(body);
    const DepthRegion fb = convex_floating_body(m, delta / A, 1024);
    bool ok = !fb.empty;
    if (ok)
        for (const Vec2& v : fb.polygon.vertices())
            ok = ok && out.polygon.contains(v, 1e-9);
    for (const Vec2& v : out.polygon.vertices())
        ok = ok && body.contains(v, 1e-9);
    out.containment_verified = ok;
    return out;
}

ApproxRun random_polytope_deficit(const Polygon& body, int n, int trials,
                                  std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_polytope_deficit: n < 3");
    if (trials < 1)
        throw std::invalid_argument("random_polytope_deficit: trials < 1");
    const Measure m = Measure::uniform_polygon(body);
    const double A = body.area();
    std::vector<double> deficits;
    deficits.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        const std::vector<VecD> pts =
            m.sample(static_cast<std::size_t>(n), stream_seed(seed, t));
        std::vector<Vec2> ps;
        ps.reserve(pts.size());
        for (const VecD& p : pts) ps.push_back(to_vec2(p));
        const Polygon hull = convex_hull(std::move(ps));
        deficits.push_back(std::max(0.0, A - hull.area()));
    }
    const DeficitStats st = summarize(deficits);
    return {"polygon-" + std::to_string(body.size()), n, st.mean, st.se, seed,
            trials};
}

ApproxRun random_boundary_polytope(const SmoothBody2D& body,
                                   BoundaryDensity density, int n, int trials,
                                   std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_boundary_polytope: n < 3");
    if (body.min_curvature() < -1e-9)
        throw std::domain_error("random_boundary_polytope: body not convex");
    const int table = 16384;
    // cumulative weighted arclength: weight 1 or kappa^{1/3}
    std::vector<double> cum(table + 1, 0.0);
    auto g = [&](double t) {
        const double sp = body.velocity(t).norm();
        if (density == BoundaryDensity::Uniform) return sp;
        return sp * std::cbrt(std::max(0.0, body.curvature(t)));
    };
    double prev = g(0.0);
    for (int i = 0; i < table; ++i) {
        const double cur = g(static_cast<double>(i + 1) / table);
        cum[i + 1] = cum[i] + 0.5 * (prev + cur) / table;
        prev = cur;
    }
    auto draw_t = [&](Rng& rng) {
        const double u = rng.uniform() * cum.back();
        const std::size_t k =
            std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
        const std::size_t i = std::min<std::size_t>(table - 1, k > 0 ? k - 1 : 0);
        const double span = std::max(1e-300, cum[i + 1] - cum[i]);
        return (i + (u - cum[i]) / span) / table;
    };
    const double A = body.area();
    std::vector<double> deficits;
    deficits.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        Rng rng(stream_seed(seed, t));
        std::vector<Vec2> ps;
        ps.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ps.push_back(body.point(draw_t(rng)));
        const Polygon hull = convex_hull(std::move(ps));
        deficits.push_back(std::max(0.0, A - hull.area()));
    }
    const DeficitStats st = summarize(deficits);
    const char* name = density == BoundaryDensity::Uniform
                           ? "boundary-uniform"
                           : "boundary-affine";
    return {name, n, st.mean, st.se, seed, trials};
}

namespace {

// distance of p beyond the boundary of a convex polygon, 0 when inside
// (max constraint violation; exact up to corner regions)
double overshoot(const Polygon& poly, const Vec2& p) {
    double worst = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.vertices()[i];
        const Vec2 e = poly.vertices()[(i + 1) % n] - a;
        const Vec2 nrm = Vec2{e.y, -e.x} / std::max(1e-300, e.norm());
        worst = std::max(worst, nrm.dot(p - a));
    }
    return worst;
}

}  // namespace

std::vector<GnedenkoRow> gnedenko_experiment(const Measure& m,
                                             const std::vector<int>& ns,
                                             std::uint64_t seed,
                                             int replicates) {
    if (m.kind() != Measure::Kind::Gaussian || m.dim() != 2)
        throw std::invalid_argument(
            "gnedenko_experiment: needs a planar gaussian");
    if (replicates < 1)
        throw std::invalid_argument("gnedenko_experiment: replicates < 1");
    std::vector<GnedenkoRow> rows;
    rows.reserve(ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const int n = ns[k];
        if (n < 3)
            throw std::invalid_argument("gnedenko_experiment: n < 3");
        const DepthRegion fb = convex_floating_body(m, 1.0 / n);
        GnedenkoRow row;
        row.n = n;
        for (int r = 0; r < replicates; ++r) {
            const std::vector<VecD> pts =
                m.sample(static_cast<std::size_t>(n),
                         stream_seed(seed, k * 1000003ULL + r));
            std::vector<Vec2> ps;
            ps.reserve(pts.size());
            for (const VecD& p : pts) ps.push_back(to_vec2(p));
            const Polygon hull = convex_hull(std::move(ps));
            row.hausdorff_dist += hausdorff(hull, fb.outer);
            double over = 0.0;
            for (const Vec2& v : hull.vertices())
                over = std::max(over, overshoot(fb.outer, v));
            row.max_overshoot += over;
        }
        row.hausdorff_dist /= replicates;
        row.max_overshoot /= replicates;
        rows.push_back(row);
    }
    return rows;
}

double log_log_slope(const std::vector<double>& x,
                     const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("log_log_slope: needs matched series");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool mann_kendall_decreasing(const std::vector<double>& series, double alpha) {
    const std::size_t n = series.size();
    if (n < 3) return false;
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (series[j] > series[i]) ++s;
            if (series[j] < series[i]) --s;
        }
    const double var = n * (n - 1.0) * (2.0 * n + 5.0) / 18.0;
    if (var <= 0.0) return false;
    const double z =
        s < 0 ? (s + 1.0) / std::sqrt(var) : (s - 1.0) / std::sqrt(var);
    return z < norm_quantile(alpha);
}

}  // namespace hsdepth
