#include "hsdepth/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hsdepth {

namespace {

// interior reference point that never throws on slivers of zero area
Vec2 rep_point(const Polygon& poly) {
    Vec2 s{0, 0};
    for (const Vec2& v : poly.vertices()) s = s + v;
    return s / static_cast<double>(poly.size());
}

// directions of the supporting-halfplane grid; for small empirical samples
// the atom-pair perpendiculars are added, which makes the region exact
// (its edges lie on lines through atom pairs)
std::vector<Vec2> region_directions(const Measure& m, int directions) {
    std::vector<Vec2> us;
    us.reserve(static_cast<std::size_t>(directions));
    for (int k = 0; k < directions; ++k)
        us.push_back(dir(2.0 * M_PI * k / directions));
    if (m.kind() == Measure::Kind::Empirical && m.dim() == 2) {
        const std::vector<VecD>& pts = *m.points();
        if (pts.size() <= 200) {
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    const Vec2 d = to_vec2(pts[i]) - to_vec2(pts[j]);
                    if (d.norm() < 1e-14) continue;
                    const Vec2 w = unit(d).perp();
                    us.push_back(w);
                    us.push_back(-w);
                }
        }
    }
    return us;
}

DepthRegion build_region(const Measure& m, double delta, int directions,
                         bool strict) {
    const double c = 1.0 - delta;
    DepthRegion r;
    r.delta = delta;
    r.dim = m.dim();

    if (m.dim() == 1) {
        VecD e(1);
        e << 1.0;
        r.lo = m.upper_quantile(e, c, strict);
        r.hi = -m.upper_quantile(-e, c, strict);
        r.empty = !(r.lo <= r.hi + 1e-12);
        return r;
    }
    if (m.dim() != 2)
        throw std::invalid_argument("regions: only d = 1 and d = 2");

    const bool polygonal = m.region() != nullptr;
    std::vector<Halfplane> hs;
    const std::vector<Vec2> us = region_directions(m, directions);
    hs.reserve(us.size());
    for (const Vec2& u : us) {
        double t;
        if (polygonal) {
            UniformPolygonalOracle orc(m, u);
            t = strict ? orc.quantile_strict(c) : orc.quantile_weak(c);
        } else {
            t = m.upper_quantile(to_vecd(u), c, strict);
        }
        // constraint <z, u> >= t
        hs.emplace_back(-u, -t);
    }
    auto inter = intersect_halfplanes(hs, std::max(1.0, m.scale()));
    if (inter.kind == HalfplaneIntersection::Kind::Empty) {
        // a region that is a single point or a segment has zero area and is
        // lost by the clipper; retry with the constraints relaxed by eta
        const double eta = 1e-9 * std::max(1.0, m.scale());
        std::vector<Halfplane> relaxed;
        relaxed.reserve(hs.size());
        for (const Halfplane& h : hs)
            relaxed.emplace_back(h.normal, h.offset + eta);
        auto retry = intersect_halfplanes(relaxed, std::max(1.0, m.scale()));
        if (retry.kind != HalfplaneIntersection::Kind::Bounded) {
            r.empty = true;
            return r;
        }
        r.empty = false;
        r.outer = retry.polygon;
        r.polygon = retry.polygon;
        r.bound = retry.polygon.diameter() + eta;
        return r;
    }
    if (inter.kind == HalfplaneIntersection::Kind::Unbounded)
        throw std::domain_error("regions: unbounded at this direction grid");
    r.empty = false;
    r.outer = inter.polygon;

    // grid certificate: between sampled normals the supporting line can
    // recede by at most R (sec(pi/N) - 1) around any interior point
    const Vec2 cen = rep_point(r.outer);
    double R = 0.0;
    for (const Vec2& v : r.outer.vertices())
        R = std::max(R, (v - cen).norm());
    const double eps = R * (1.0 / std::cos(M_PI / directions) - 1.0);
    r.bound = eps;
    std::vector<Halfplane> tight;
    tight.reserve(hs.size());
    for (const Halfplane& h : hs) tight.emplace_back(h.normal, h.offset - eps);
    auto inner = intersect_halfplanes(tight, std::max(1.0, m.scale()));
    if (inner.kind == HalfplaneIntersection::Kind::Bounded)
        r.polygon = inner.polygon;
    return r;
}

}  // namespace

DepthRegion central_region(const Measure& m, double delta, int directions) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("central_region: delta outside (0,1)");
    return build_region(m, delta, directions, /*strict=*/true);
}

DepthRegion convex_floating_body(const Measure& m, double delta,
                                 int directions) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument(
            "convex_floating_body: delta outside [0,1)");
    return build_region(m, delta, directions, /*strict=*/false);
}

FloatingBodyCheck floating_body_exists(const Measure& m, double delta,
                                       double tol, int normals) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument(
            "floating_body_exists: delta outside (0, 1/2)");
    if (tol <= 0.0) tol = 1e-4 * delta;
    DepthRegion fb = convex_floating_body(m, delta, normals);
    if (fb.empty) throw std::domain_error("floating_body_exists: empty P_delta");
    FloatingBodyCheck chk;
    chk.tol = tol;
    double dev = 0.0;
    for (int k = 0; k < normals; ++k) {
        const Vec2 u = dir(2.0 * M_PI * k / normals);
        const double h = support_function(fb.outer, u);
        // relative mass deviation of the cut { <z,u> >= h } supporting
        // P_delta; positive where the cutting line fails to touch the body
        dev = std::max(dev,
                       std::abs(m.upper_prob(to_vecd(u), h) - delta) / delta);
    }
    chk.max_deviation = dev;
    chk.exists = dev < tol;
    return chk;
}

std::vector<Vec2> dupin_curve(const Measure& m, double delta, int samples) {
    const PolygonalRegion* reg = m.region();
    if (!reg) throw std::invalid_argument("dupin_curve: not polygon-uniform");
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("dupin_curve: delta outside (0, 1/2)");
    std::vector<Vec2> curve;
    curve.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const Vec2 u = dir(2.0 * M_PI * k / samples);
        UniformPolygonalOracle orc(m, u);
        const double s = orc.quantile_weak(delta);
        const Halfplane line(u, s);
        double mass = 0.0;
        Vec2 bary{0, 0};
        for (std::size_t i = 0; i < reg->components.size(); ++i) {
            const ChordMeasure cm = chord_measure(reg->components[i], line);
            const double w =
                reg->weights[i] / reg->components[i].area() * cm.length;
            mass += w;
            bary = bary + w * cm.barycenter;
        }
        if (mass <= 0.0) continue;  // grazing chord
        curve.push_back(bary / mass);
    }
    return curve;
}

bool is_convex_curve(const std::vector<Vec2>& curve, double tol) {
    const std::size_t n = curve.size();
    if (n < 4) return true;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max(scale, (curve[(i + 1) % n] - curve[i]).norm());
    double pos = 0.0, neg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = curve[(i + 1) % n] - curve[i];
        const Vec2 b = curve[(i + 2) % n] - curve[(i + 1) % n];
        const double cr = a.cross(b);
        if (cr > 0) pos = std::max(pos, cr);
        if (cr < 0) neg = std::max(neg, -cr);
    }
    const double thresh = tol * scale * scale + 1e-300;
    return std::min(pos, neg) <= thresh;
}

namespace {

bool symmetric_analytic_md(const Measure& m, double& md, VecD& center) {
    switch (m.kind()) {
        case Measure::Kind::Gaussian:
            md = 0.5;
            center = m.gaussian_mean();
            return true;
        case Measure::Kind::UniformBall:
        case Measure::Kind::AlphaSymmetric:
            md = 0.5;
            center = VecD::Zero(m.dim());
            return true;
        case Measure::Kind::UnitSquare:
            md = 0.5;
            center = to_vecd({0.5, 0.5});
            return true;
        default:
            return false;
    }
}

}  // namespace

double max_depth(const Measure& m, int directions) {
    double md;
    VecD center;
    if (symmetric_analytic_md(m, md, center)) return md;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!central_region(m, mid, directions).empty)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

MedianResult halfspace_median(const Measure& m, int directions) {
    MedianResult res;
    double md;
    VecD center;
    if (symmetric_analytic_md(m, md, center)) {
        res.max_depth = md;
        res.point = center;
        res.unique = true;
        return res;
    }
    res.max_depth = max_depth(m, directions);
    // evaluate the region at (numerically) the maximal depth
    double eval = res.max_depth;
    DepthRegion reg = central_region(m, eval, directions);
    for (int back = 0; reg.empty && back < 40; ++back) {
        eval -= std::max(1e-15, eval * 1e-12) * std::pow(2.0, back);
        reg = central_region(m, eval, directions);
    }
    if (reg.empty)
        throw std::domain_error("halfspace_median: median region not found");
    if (m.dim() == 1) {
        res.point = VecD(1);
        res.point(0) = 0.5 * (reg.lo + reg.hi);
        res.set_diameter = reg.hi - reg.lo;
    } else {
        res.point = to_vecd(reg.outer.area() > 1e-18 ? reg.outer.centroid()
                                                     : rep_point(reg.outer));
        res.median_set = reg.outer;
        res.set_diameter = reg.outer.diameter();
        if (m.kind() == Measure::Kind::Empirical) {
            // the centroid of the (relaxed) region can sit a hair off the
            // true median, where atomic depth drops; snap to the best of a
            // few candidate points
            std::vector<Vec2> pts2;
            for (const VecD& p : *m.points()) pts2.push_back(to_vec2(p));
            const Vec2 c = to_vec2(res.point);
            auto round6 = [](const Vec2& p) {
                return Vec2{std::round(p.x * 1e6) / 1e6,
                            std::round(p.y * 1e6) / 1e6};
            };
            std::vector<Vec2> cands{c, round6(c), to_vec2(m.mean()),
                                    round6(to_vec2(m.mean()))};
            Vec2 best = c;
            double best_d = -1.0;
            for (const Vec2& cand : cands) {
                const double d = hd_empirical_2d(cand, pts2).value;
                if (d > best_d) {
                    best_d = d;
                    best = cand;
                }
            }
            res.point = to_vecd(best);
        }
    }
    res.unique = res.set_diameter <= 1e-6;
    return res;
}

double winternitz(const Measure& m, int directions) {
    if (!m.region())
        throw std::invalid_argument("winternitz: not polygon-uniform");
    const double md = max_depth(m, directions);
    if (!(md < 1.0)) throw std::domain_error("winternitz: MD >= 1");
    return md / (1.0 - md);
}

Vec2 depth_centroid_map(const Measure& m, double delta, int directions) {
    DepthRegion reg = central_region(m, delta, directions);
    if (reg.empty)
        throw std::domain_error("depth_centroid_map: empty region");
    return reg.outer.centroid();
}

namespace {

bool centrally_symmetric(const Measure& m, const VecD& c) {
    auto match_sets = [&](const std::vector<Vec2>& pts) {
        const Vec2 c2 = to_vec2(c);
        for (const Vec2& p : pts) {
            const Vec2 q = 2.0 * c2 - p;
            bool found = false;
            for (const Vec2& r : pts)
                if ((r - q).norm() <= 1e-9) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    switch (m.kind()) {
        case Measure::Kind::Gaussian:
        case Measure::Kind::UniformBall:
        case Measure::Kind::AlphaSymmetric:
        case Measure::Kind::UnitSquare:
            return true;
        case Measure::Kind::Empirical: {
            // multiset of atoms must be invariant under reflection; equal
            // weights make the per-point matching sufficient
            std::vector<Vec2> pts;
            if (m.dim() != 2) {
                // 1-D / d>2: compare sorted projections on each axis
                for (int k = 0; k < m.dim(); ++k) {
                    std::vector<double> a;
                    for (const VecD& p : *m.points()) a.push_back(p(k));
                    std::sort(a.begin(), a.end());
                    const std::size_t n = a.size();
                    for (std::size_t i = 0; i < n; ++i)
                        if (std::abs(a[i] + a[n - 1 - i] - 2 * c(k)) > 1e-9)
                            return false;
                }
                return true;
            }
            for (const VecD& p : *m.points()) pts.push_back(to_vec2(p));
            return match_sets(pts);
        }
        case Measure::Kind::UniformPolygonal: {
            std::vector<Vec2> pts;
            for (const Polygon& poly : m.region()->components)
                for (const Vec2& v : poly.vertices()) pts.push_back(v);
            return match_sets(pts);
        }
        case Measure::Kind::LogConcave1D:
        case Measure::Kind::PiecewiseUniform1D: {
            VecD e(1);
            e << 1.0;
            for (double p : {0.05, 0.2, 0.35}) {
                const double q1 = m.projection_quantile(e, p);
                const double q2 = m.projection_quantile(e, 1.0 - p);
                if (std::abs(q1 + q2 - 2.0 * c(0)) > 1e-7) return false;
            }
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

SymmetryReport symmetry_report(const Measure& m) {
    SymmetryReport rep;
    MedianResult med = halfspace_median(m, 1024);
    rep.center = med.point;
    rep.max_depth = med.max_depth;
    rep.halfspace = med.max_depth >= 0.5 - 1e-6;
    // angular symmetry criterion at the median:
    // HD(x_P) = (1 + P({x_P})) / 2
    const double target = 0.5 * (1.0 + m.point_mass(med.point));
    const double depth_at = hd(med.point, m).value;
    rep.angular = std::abs(depth_at - target) <= 1e-6;
    rep.central = centrally_symmetric(m, med.point);
    // implication chain: central => angular => halfspace
    if (rep.central) rep.angular = true;
    if (rep.angular) rep.halfspace = true;
    return rep;
}

std::vector<Vec2> minimal_directions(const Vec2& x, const Measure& m,
                                     double tol) {
    if (m.kind() == Measure::Kind::Empirical)
        throw std::invalid_argument(
            "minimal_directions: infimum need not be attained for atomic "
            "measures");
    if (m.dim() != 2)
        throw std::invalid_argument("minimal_directions: d != 2");
    auto fv = [&](const Vec2& u) {
        return m.halfspace_prob2d(Halfplane(u, u.dot(x)));
    };
    auto f = [&](double th) { return fv(dir(th)); };
    // exact candidate normals: edge normals and vertex bearings of a
    // polygonal support; a refined angle snaps to one of these when the
    // depth does not increase, so that boundary-grazing minimal lines are
    // represented without floating-point tilt
    std::vector<Vec2> structural;
    if (const PolygonalRegion* reg = m.region()) {
        for (const Polygon& poly : reg->components) {
            const auto& vs = poly.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const Vec2 e = vs[(i + 1) % vs.size()] - vs[i];
                const Vec2 w = vs[i] - x;
                for (const Vec2& cand : {e, w}) {
                    if (cand.norm() < 1e-12) continue;
                    const Vec2 n = unit(cand).perp();
                    structural.push_back(n);
                    structural.push_back(-n);
                }
            }
        }
    }
    const int grid = 512;
    std::vector<double> vals(grid);
    double vmin = 2.0, vmax = -1.0;
    for (int k = 0; k < grid; ++k) {
        vals[k] = f(2.0 * M_PI * k / grid);
        vmin = std::min(vmin, vals[k]);
        vmax = std::max(vmax, vals[k]);
    }
    std::vector<Vec2> out;
    if (vmax - vmin <= tol) {
        // every direction is minimal (spherical-type symmetry around x)
        for (int k = 0; k < 64; ++k) out.push_back(dir(2.0 * M_PI * k / 64));
        return out;
    }
    const double step = 2.0 * M_PI / grid;
    std::vector<double> angles;
    double best = vmin;
    for (int k = 0; k < grid; ++k) {
        const double prev = vals[(k + grid - 1) % grid];
        const double next = vals[(k + 1) % grid];
        if (vals[k] <= prev && vals[k] <= next &&
            vals[k] <= vmin + 10.0 * tol + 1e-4) {
            const double th = golden_max([&](double t) { return -f(t); },
                                         k * step - step, k * step + step,
                                         1e-11);
            angles.push_back(th);
            best = std::min(best, f(th));
        }
    }
    for (double th : angles) {
        if (f(th) > best + tol) continue;
        Vec2 u = dir(th);
        for (const Vec2& s : structural)
            if ((s - u).norm() < 1e-6 && fv(s) <= best + tol) {
                u = s;
                break;
            }
        bool dup = false;
        for (const Vec2& v : out)
            if ((v - u).norm() < 1e-4) dup = true;
        if (!dup) out.push_back(u);
    }
    return out;
}

bool ray_basis_check(const Vec2& x, const Measure& m) {
    const std::vector<Vec2> dirs = minimal_directions(x, m);
    if (dirs.empty()) return false;
    for (int k = 0; k < 128; ++k) {
        const Vec2 w = dir(2.0 * M_PI * k / 128);
        bool covered = false;
        for (const Vec2& u : dirs)
            if (u.dot(w) > 1e-6) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

double dupin_barycenter_check(const Vec2& x, const Measure& m) {
    const PolygonalRegion* reg = m.region();
    if (!reg)
        throw std::invalid_argument(
            "dupin_barycenter_check: not polygon-uniform");
    const std::vector<Vec2> dirs = minimal_directions(x, m);
    if (dirs.empty())
        throw std::domain_error("dupin_barycenter_check: no minimal direction");
    double dev = 0.0;
    for (const Vec2& u : dirs) {
        const Halfplane line(u, u.dot(x));
        double mass = 0.0;
        Vec2 bary{0, 0};
        for (std::size_t i = 0; i < reg->components.size(); ++i) {
            const ChordMeasure cm = chord_measure(reg->components[i], line);
            const double w =
                reg->weights[i] / reg->components[i].area() * cm.length;
            mass += w;
            bary = bary + w * cm.barycenter;
        }
        if (mass <= 0.0)
            throw std::domain_error("dupin_barycenter_check: zero chord");
        dev = std::max(dev, (bary / mass - x).norm());
    }
    return dev;
}

double reconstruct_halfspace_prob(
    const Halfplane& h, const std::function<double(const Vec2&)>& depth,
    const Vec2& median, double scale) {
    const Vec2 u = h.normal;
    const Vec2 foot = median + (h.offset - u.dot(median)) * u;
    const Vec2 along = u.perp();
    auto g = [&](double t) { return depth(foot + t * along); };
    const int coarse = 129;
    double tbest = 0.0, gbest = -1.0;
    for (int k = 0; k < coarse; ++k) {
        const double t = -scale + 2.0 * scale * k / (coarse - 1);
        const double v = g(t);
        if (v > gbest) {
            gbest = v;
            tbest = t;
        }
    }
    const double stepw = 2.0 * scale / (coarse - 1);
    const double tmax =
        golden_max(g, tbest - stepw, tbest + stepw, 1e-10 * scale);
    const double s = std::max(gbest, g(tmax));
    return h.contains(median, 1e-12) ? 1.0 - s : s;
}

SandwichCheck isotropic_sandwich_check(const Measure& m, double delta,
                                       int directions) {
    if (!(delta > 0.0 && delta < 1.0 / M_E))
        throw std::invalid_argument(
            "isotropic_sandwich_check: delta outside (0, 1/e)");
    if (m.dim() != 2)
        throw std::invalid_argument("isotropic_sandwich_check: d != 2");
    if (m.mean().norm() > 1e-6 ||
        (m.covariance() - MatD::Identity(2, 2)).norm() > 1e-6)
        throw std::invalid_argument("isotropic_sandwich_check: not isotropic");
    double sup_f;
    switch (m.kind()) {
        case Measure::Kind::Gaussian:
            sup_f = 1.0 / (2.0 * M_PI);
            break;
        case Measure::Kind::UniformPolygonal:
            sup_f = 1.0 / m.region()->total_area();
            break;
        default:
            throw std::invalid_argument(
                "isotropic_sandwich_check: unsupported variant");
    }
    const double lp = std::sqrt(sup_f);  // (sup f)^(1/d), d = 2
    SandwichCheck chk;
    chk.inner_radius = (1.0 / M_E - delta) * lp;
    chk.outer_radius = 17.0 * std::log(1.0 / delta) * lp;
    DepthRegion fb = convex_floating_body(m, delta, directions);
    if (fb.empty) throw std::domain_error("isotropic_sandwich_check: empty");
    // inner ball containment: distance from 0 to every edge of the
    // certified inner polygon
    const Polygon& inner = fb.polygon.degenerate() ? fb.outer : fb.polygon;
    double min_edge = std::numeric_limits<double>::infinity();
    const auto& v = inner.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        const Vec2 n = unit((b - a).perp());
        min_edge = std::min(min_edge, std::abs(n.dot(a)));
    }
    double max_vertex = 0.0;
    for (const Vec2& p : fb.outer.vertices())
        max_vertex = std::max(max_vertex, p.norm());
    chk.region_min_support = min_edge;
    chk.region_max_vertex = max_vertex;
    chk.holds =
        min_edge >= chk.inner_radius && max_vertex <= chk.outer_radius;
    return chk;
}

}  // namespace hsdepth
