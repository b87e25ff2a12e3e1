#include "hsdepth/asa.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "hsdepth/regions.hpp"

namespace hsdepth {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// limit constant of the floating-body volume deficit at d = 2:
// (vol K - vol K_delta)/delta^{2/3} -> (1/2)(3/2)^{2/3} as(K)
const double kFloatLimitFactor = 0.5 * std::pow(1.5, 2.0 / 3.0);

// boundary integrands of perturbed bodies are periodic with periods at
// dyadic fractions of [0, 1]; a single adaptive pass can alias and stop
// early, so split into fixed panels first
double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int panels = 16) {
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + (b - a) * i / panels;
        const double x1 = a + (b - a) * (i + 1) / panels;
        total += integrate(f, x0, x1, rel_tol);
    }
    return total;
}

double solve_increasing(const std::function<double(double)>& f, double target,
                        double lo, double step) {
    // expand the bracket, then bisect; f increasing with f(lo) <= target
    double hi = lo + step;
    int guard = 0;
    while (f(hi) < target) {
        lo = hi;
        step *= 2.0;
        hi += step;
        if (++guard > 200)
            throw std::domain_error("solve_increasing: bracket failed");
    }
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// least-squares fit v ~ a + b * delta^c over a grid of exponents
void fit_power_law(const std::vector<double>& deltas,
                   const std::vector<double>& values, double& a, double& c) {
    double best_err = std::numeric_limits<double>::infinity();
    a = values.back();
    c = 1.0;
    const std::size_t n = deltas.size();
    for (double cc = 0.05; cc <= 2.0; cc += 0.005) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = std::pow(deltas[i], cc);
            sx += x;
            sy += values[i];
            sxx += x * x;
            sxy += x * values[i];
        }
        const double den = n * sxx - sx * sx;
        if (std::abs(den) < 1e-30) continue;
        const double b = (n * sxy - sx * sy) / den;
        const double aa = (sy - b * sx) / n;
        double err = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = aa + b * std::pow(deltas[i], cc) - values[i];
            err += r * r;
        }
        if (err < best_err) {
            best_err = err;
            a = aa;
            c = cc;
        }
    }
}

// area of the delta-floating body of the uniform law on a convex polygon
// (delta is absolute cut-off area). Supporting lines of the corner caps
// concentrate geometrically around the edge normals, so a uniform
// direction grid misses the logarithmic tail of the corner loss; for
// coarse polygons the grid is augmented with geometric fans around each
// edge normal.
double floating_body_area(const Polygon& poly, const Measure& m,
                          double delta_abs, int directions) {
    const double A = poly.area();
    const double c = 1.0 - delta_abs / A;
    std::vector<double> angles;
    for (int i = 0; i < directions; ++i)
        angles.push_back(2.0 * M_PI * i / directions);
    if (poly.size() <= 64) {
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e = poly.vertices()[(i + 1) % n] - poly.vertices()[i];
            const double phi = std::atan2(-e.x, e.y);  // outward normal
            for (double w = 0.25 * M_PI; w > 1e-12; w *= 0.75) {
                // cuts hugging this edge have constraint normals near the
                // inward normal phi + pi; keep both fans for symmetry
                angles.push_back(phi + w);
                angles.push_back(phi - w);
                angles.push_back(phi + M_PI + w);
                angles.push_back(phi + M_PI - w);
            }
        }
    }
    std::vector<Halfplane> hs;
    hs.reserve(angles.size());
    for (double phi : angles) {
        const Vec2 u = dir(phi);
        UniformPolygonalOracle orc(m, u);
        hs.emplace_back(-u, -orc.quantile_weak(c));
    }
    const auto inter = intersect_halfplanes(hs, std::max(1.0, m.scale()));
    if (inter.kind != HalfplaneIntersection::Kind::Bounded)
        throw std::domain_error("floating_body_area: K_delta is empty");
    return inter.polygon.area();
}

struct NelderMeadResult {
    Vec2 point;
    double value = 0.0;
};

NelderMeadResult nelder_mead_2d(const std::function<double(const Vec2&)>& f,
                                const Vec2& start, double step,
                                double tol = 1e-8, int max_iter = 2000) {
    struct V {
        Vec2 x;
        double fx;
    };
    std::array<V, 3> s = {V{start, f(start)},
                          V{start + Vec2{step, 0.0}, 0.0},
                          V{start + Vec2{0.0, step}, 0.0}};
    s[1].fx = f(s[1].x);
    s[2].fx = f(s[2].x);
    for (int it = 0; it < max_iter; ++it) {
        std::sort(s.begin(), s.end(),
                  [](const V& a, const V& b) { return a.fx < b.fx; });
        if ((s[2].x - s[0].x).norm() + (s[1].x - s[0].x).norm() < tol) break;
        const Vec2 cen = (s[0].x + s[1].x) / 2.0;
        const Vec2 xr = cen + (cen - s[2].x);
        const double fr = f(xr);
        if (fr < s[0].fx) {
            const Vec2 xe = cen + 2.0 * (cen - s[2].x);
            const double fe = f(xe);
            s[2] = fe < fr ? V{xe, fe} : V{xr, fr};
        } else if (fr < s[1].fx) {
            s[2] = {xr, fr};
        } else {
            const Vec2 xc = cen + 0.5 * (s[2].x - cen);
            const double fc = f(xc);
            if (fc < s[2].fx) {
                s[2] = {xc, fc};
            } else {
                s[1].x = s[0].x + 0.5 * (s[1].x - s[0].x);
                s[2].x = s[0].x + 0.5 * (s[2].x - s[0].x);
                s[1].fx = f(s[1].x);
                s[2].fx = f(s[2].x);
            }
        }
    }
    std::sort(s.begin(), s.end(),
              [](const V& a, const V& b) { return a.fx < b.fx; });
    return {s[0].x, s[0].fx};
}

}  // namespace

SmoothBody2D::SmoothBody2D(std::function<Vec2(double)> p,
                           std::function<Vec2(double)> v,
                           std::function<Vec2(double)> a)
    : p_(std::move(p)), v_(std::move(v)), a_(std::move(a)) {}

SmoothBody2D SmoothBody2D::disk(double radius) { return ellipse(radius, radius); }

SmoothBody2D SmoothBody2D::ellipse(double a, double b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("ellipse: axes <= 0");
    return SmoothBody2D(
        [a, b](double t) {
            const double th = kTwoPi * t;
            return Vec2{a * std::cos(th), b * std::sin(th)};
        },
        [a, b](double t) {
            const double th = kTwoPi * t;
            return Vec2{-a * std::sin(th) * kTwoPi, b * std::cos(th) * kTwoPi};
        },
        [a, b](double t) {
            const double th = kTwoPi * t;
            return Vec2{-a * std::cos(th), -b * std::sin(th)} *
                   (kTwoPi * kTwoPi);
        });
}

SmoothBody2D SmoothBody2D::perturbed_disk(double amplitude, int frequency) {
    const double A = amplitude;
    const double k = frequency;
    auto r = [A, k](double th) { return 1.0 + A * std::cos(k * th); };
    auto dr = [A, k](double th) { return -A * k * std::sin(k * th); };
    auto ddr = [A, k](double th) { return -A * k * k * std::cos(k * th); };
    return SmoothBody2D(
        [r](double t) {
            const double th = kTwoPi * t;
            return r(th) * Vec2{std::cos(th), std::sin(th)};
        },
        [r, dr](double t) {
            const double th = kTwoPi * t;
            const Vec2 e{std::cos(th), std::sin(th)};
            return (dr(th) * e + r(th) * e.perp()) * kTwoPi;
        },
        [r, dr, ddr](double t) {
            const double th = kTwoPi * t;
            const Vec2 e{std::cos(th), std::sin(th)};
            return (ddr(th) * e + 2.0 * dr(th) * e.perp() - r(th) * e) *
                   (kTwoPi * kTwoPi);
        });
}

double SmoothBody2D::curvature(double t) const {
    const Vec2 v = v_(t);
    const Vec2 a = a_(t);
    const double sp = v.norm();
    const double k = v.cross(a) / (sp * sp * sp);
    return std::abs(k) < 1e-12 ? 0.0 : k;
}

Vec2 SmoothBody2D::outward_normal(double t) const {
    const Vec2 v = unit(v_(t));
    return {v.y, -v.x};
}

double SmoothBody2D::area() const {
    return 0.5 *
           integrate_panels([this](double t) { return p_(t).cross(v_(t)); },
                            0.0, 1.0, 1e-11);
}

double SmoothBody2D::min_curvature(int samples) const {
    double k = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i)
        k = std::min(k, curvature(static_cast<double>(i) / samples));
    return k;
}

Polygon SmoothBody2D::to_polygon(int n) const {
    std::vector<Vec2> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        verts.push_back(p_(static_cast<double>(i) / n));
    return Polygon(std::move(verts));
}

double affine_surface_area(const SmoothBody2D& body) {
    if (body.min_curvature() < -1e-9)
        throw std::domain_error("affine_surface_area: body not convex");
    return integrate_panels(
        [&](double t) {
            return std::cbrt(std::max(0.0, body.curvature(t))) *
                   body.velocity(t).norm();
        },
        0.0, 1.0, 1e-10);
}

FloatingExtrapolation asa_via_floating(const Polygon& body,
                                       std::vector<double> deltas,
                                       int directions) {
    std::sort(deltas.rbegin(), deltas.rend());
    const double A = body.area();
    const Measure m = Measure::uniform_polygon(body);
    FloatingExtrapolation out;
    out.deltas = deltas;
    for (double d : deltas) {
        const double a_d = floating_body_area(body, m, d, directions);
        out.values.push_back((A - a_d) / std::pow(d, 2.0 / 3.0));
    }
    fit_power_law(out.deltas, out.values, out.limit, out.exponent);
    out.implied_asa = out.limit / kFloatLimitFactor;
    return out;
}

FloatingExtrapolation asa_via_floating(const SmoothBody2D& body,
                                       std::vector<double> deltas,
                                       int directions, int facets) {
    return asa_via_floating(body.to_polygon(facets), std::move(deltas),
                            directions);
}

FlagAsymptotic polytope_flag_asymptotic(const Polygon& poly,
                                        std::vector<double> deltas,
                                        int directions) {
    if (poly.degenerate() || !poly.is_convex())
        throw std::invalid_argument("polytope_flag_asymptotic: not convex");
    std::sort(deltas.rbegin(), deltas.rend());
    const double A = poly.area();
    const Measure m = Measure::uniform_polygon(poly);
    FlagAsymptotic out;
    out.deltas = deltas;
    out.flags = 2 * static_cast<int>(poly.size());
    out.predicted_limit = out.flags / 4.0;
    for (double d : deltas) {
        const double a_d = floating_body_area(poly, m, d, directions);
        out.ratios.push_back((A - a_d) / (d * std::log(1.0 / d)));
    }
    return out;
}

double lp_affine_surface_area(const SmoothBody2D& body, double p) {
    if (p == -2.0)
        throw std::invalid_argument("lp_affine_surface_area: p = -d");
    if (body.min_curvature() < -1e-9)
        throw std::domain_error("lp_affine_surface_area: body not convex");
    // the support value <x, N> must stay positive: origin interior
    for (int i = 0; i < 512; ++i) {
        const double t = i / 512.0;
        if (body.point(t).dot(body.outward_normal(t)) <= 0)
            throw std::invalid_argument(
                "lp_affine_surface_area: origin not interior");
    }
    const bool inf_case = std::isinf(p);
    const double e_kappa = inf_case ? 1.0 : p / (2.0 + p);
    const double e_supp = inf_case ? 2.0 : 2.0 * (p - 1.0) / (2.0 + p);
    return integrate_panels(
        [&](double t) {
            const double kappa = std::max(0.0, body.curvature(t));
            const double supp = body.point(t).dot(body.outward_normal(t));
            return std::pow(kappa, e_kappa) * std::pow(supp, -e_supp) *
                   body.velocity(t).norm();
        },
        0.0, 1.0, 1e-10);
}

double affine_isoperimetric_margin(const SmoothBody2D& body) {
    return std::cbrt(body.area() / M_PI) -
           affine_surface_area(body) / (2.0 * M_PI);
}

SantaloResult blaschke_santalo_check(const Polygon& poly) {
    if (poly.degenerate() || !poly.is_convex())
        throw std::invalid_argument("blaschke_santalo_check: not convex");
    auto polar_area = [&](const Vec2& x0) {
        try {
            return polar_body(poly, x0).area();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    const NelderMeadResult opt =
        nelder_mead_2d(polar_area, poly.centroid(), 0.05 * poly.diameter());
    if (!std::isfinite(opt.value))
        throw std::domain_error("blaschke_santalo_check: search diverged");
    SantaloResult res;
    res.santalo_point = opt.point;
    res.product = poly.area() * opt.value;
    res.margin = M_PI * M_PI - res.product;
    return res;
}

namespace {

// cap area above the chord <y, N> = h - height, by Green's theorem on the
// boundary arc plus the closing chord
double smooth_cap_area(const SmoothBody2D& body, double t, const Vec2& N,
                       double h, double height) {
    const double c = h - height;
    auto g = [&](double u) { return body.point(u).dot(N) - c; };
    auto root = [&](double a, double b) {
        // g(a), g(b) have opposite signs
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (a + b);
            (g(mid) > 0 ? a : b) = mid;
        }
        return 0.5 * (a + b);
    };
    if (g(t - 0.5) >= 0 || g(t + 0.5) >= 0)
        throw std::domain_error("smooth_cap_area: cap too large");
    const double u1 = root(t, t - 0.5);
    const double u2 = root(t, t + 0.5);
    const double arc = integrate_panels(
        [&](double u) { return body.point(u).cross(body.velocity(u)); },
        std::min(u1, u2), std::max(u1, u2), 1e-10, 8);
    const double chord = body.point(u2).cross(body.point(u1));
    return 0.5 * (arc + chord);
}

double probe_limit(const std::vector<double>& deltas,
                   const std::function<double(double)>& height_for_area) {
    std::vector<double> ds = deltas;
    std::sort(ds.rbegin(), ds.rend());
    std::vector<double> vals;
    for (double d : ds) {
        const double h = height_for_area(d);
        vals.push_back((32.0 / 9.0) * h * h * h / (d * d));
    }
    if (ds.size() < 3) return vals.back();
    double a, c;
    fit_power_law(ds, vals, a, c);
    return a;
}

}  // namespace

double generalized_curvature_probe(const SmoothBody2D& body, double t,
                                   const std::vector<double>& deltas) {
    const Vec2 N = body.outward_normal(t);
    const double h = body.point(t).dot(N);
    return probe_limit(deltas, [&](double d) {
        return solve_increasing(
            [&](double height) { return smooth_cap_area(body, t, N, h, height); },
            d, 0.0, 1e-6);
    });
}

double generalized_curvature_probe_profile(
    const std::function<double(double)>& f, double lo, double hi,
    const std::vector<double>& deltas) {
    const double dmin =
        *std::min_element(deltas.begin(), deltas.end());
    auto cap_area = [&, dmin](double height) {
        auto g = [&](double x) { return height - f(x); };
        auto root = [&](double a, double b) {
            for (int i = 0; i < 100; ++i) {
                const double mid = 0.5 * (a + b);
                (g(mid) > 0 ? a : b) = mid;
            }
            return 0.5 * (a + b);
        };
        const double x1 = g(lo) > 0 ? lo : root(0.0, lo);
        const double x2 = g(hi) > 0 ? hi : root(0.0, hi);
        const double bound = (x2 - x1) * height;
        if (bound < 1e-3 * dmin) return bound;
        return integrate([&](double x) { return std::max(0.0, g(x)); }, x1, x2,
                         1e-10);
    };
    return probe_limit(deltas, [&](double d) {
        return solve_increasing(cap_area, d, 0.0, 1e-6);
    });
}

double sawtooth_parabola_profile(double x) {
    const double ax = std::abs(x);
    if (ax >= 1.0) return 1.0;
    if (ax < 1e-9) return ax * ax;
    const double n = std::floor(1.0 / ax);
    const double hi = 1.0 / n;
    const double lo = 1.0 / (n + 1.0);
    // chord of x -> x^2 between the interpolation points 1/(n+1) and 1/n
    return lo * lo + (ax - lo) * (lo + hi);
}

namespace {

// effective 1-D integration window: [argmin - reach, argmin + reach] where
// psi exceeds its minimum by ~40 (e^{-40} below machine relevance)
void effective_window_1d(const std::function<double(double)>& psi, double& lo,
                         double& hi) {
    double xbest = 0.0, vbest = psi(0.0);
    for (int i = -1024; i <= 1024; ++i) {
        const double x = i * 0.1;
        const double v = psi(x);
        if (v < vbest) {
            vbest = v;
            xbest = x;
        }
    }
    const double cut = vbest + 40.0;
    double step = 0.1;
    lo = hi = xbest;
    while (psi(lo) < cut && step < 1e9) { lo -= step; step *= 1.25; }
    step = 0.1;
    while (psi(hi) < cut && step < 1e9) { hi += step; step *= 1.25; }
}

double lambda_integrand_1d(const ConvexPotential1D& psi, double lambda,
                           double x) {
    const double dd = std::max(0.0, psi.ddpsi(x));
    const double gauge = 2.0 * psi.psi(x) - x * psi.dpsi(x);
    return std::exp(lambda * gauge) * std::pow(dd, lambda) *
           std::exp(-psi.psi(x));
}

double lambda_integrand_2d(const ConvexPotential2D& psi, double lambda,
                           const Vec2& x) {
    const Mat2Sym h = psi.hess(x);
    const double dd = std::max(0.0, h.det());
    const double gauge = 2.0 * psi.psi(x) - x.dot(psi.grad(x));
    return std::exp(lambda * gauge) * std::pow(dd, lambda) *
           std::exp(-psi.psi(x));
}

double integrate_2d(const std::function<double(const Vec2&)>& f, double lo,
                    double hi) {
    return integrate(
        [&](double x) {
            return integrate([&](double y) { return f({x, y}); }, lo, hi,
                             3e-10);
        },
        lo, hi, 1e-9);
}

void effective_window_2d(const ConvexPotential2D& psi, double& lo,
                         double& hi) {
    const NelderMeadResult mn = nelder_mead_2d(
        [&](const Vec2& x) { return psi.psi(x); }, {0.0, 0.0}, 1.0, 1e-10);
    const double cut = mn.value + 46.0;
    double w = 1.0;
    auto outside = [&](double r) {
        for (int k = 0; k < 8; ++k) {
            const Vec2 x = mn.point + r * dir(2.0 * M_PI * k / 8);
            if (psi.psi(x) < cut) return false;
        }
        return true;
    };
    while (!outside(w) && w < 1e6) w *= 1.3;
    lo = std::min(mn.point.x, mn.point.y) - w;
    hi = std::max(mn.point.x, mn.point.y) + w;
}

}  // namespace

double asa_logconcave(const ConvexPotential1D& psi) {
    double lo, hi;
    effective_window_1d(psi.psi, lo, hi);
    return integrate(
        [&](double x) {
            return std::cbrt(std::max(0.0, psi.ddpsi(x))) *
                   std::exp(-psi.psi(x));
        },
        lo, hi, 1e-10);
}

double asa_logconcave(const ConvexPotential2D& psi) {
    double lo, hi;
    effective_window_2d(psi, lo, hi);
    return integrate_2d(
        [&](const Vec2& x) {
            const Mat2Sym h = psi.hess(x);
            return std::pow(std::max(0.0, h.det()), 0.25) *
                   std::exp(-psi.psi(x));
        },
        lo, hi);
}

double lambda_asa(const ConvexPotential1D& psi, double lambda) {
    double lo, hi;
    effective_window_1d(psi.psi, lo, hi);
    return integrate(
        [&](double x) { return lambda_integrand_1d(psi, lambda, x); }, lo, hi,
        1e-10);
}

double lambda_asa(const ConvexPotential2D& psi, double lambda) {
    double lo, hi;
    effective_window_2d(psi, lo, hi);
    return integrate_2d(
        [&](const Vec2& x) { return lambda_integrand_2d(psi, lambda, x); },
        lo, hi);
}

double FloatingFunction1D::eval(double x) const {
    double v = base(x);
    for (const auto& [s, c] : lines) v = std::max(v, s * x + c);
    return v;
}

FloatingFunction1D floating_function_1d(const ConvexPotential1D& psi,
                                        double delta, double lo, double hi,
                                        int grid) {
    if (!(delta > 0.0))
        throw std::invalid_argument("floating_function_1d: delta <= 0");
    if (!(lo < hi) || grid < 2)
        throw std::invalid_argument("floating_function_1d: bad window");
    FloatingFunction1D out;
    out.base = psi.psi;
    out.delta = delta;
    out.lines.reserve(static_cast<std::size_t>(grid));
    // cut area of the line y = s x + c from the epigraph; h(x) = s x + c -
    // psi(x) is concave, so the wet region is a single interval around the
    // tangency point; a cut still wet one window-width beyond [lo, hi]
    // counts as infinite (lines along affine pieces never float up)
    const double ext = hi - lo;
    auto cut_area = [&](double s, double c, double x0) {
        auto h = [&](double x) { return s * x + c - psi.psi(x); };
        if (h(x0) <= 0.0) return 0.0;
        if (h(lo - ext) > 0.0 || h(hi + ext) > 0.0)
            return std::numeric_limits<double>::infinity();
        auto root = [&](double a, double b) {
            for (int i = 0; i < 80; ++i) {
                const double mid = 0.5 * (a + b);
                (h(mid) > 0 ? a : b) = mid;
            }
            return 0.5 * (a + b);
        };
        const double r1 = root(x0, lo - ext);
        const double r2 = root(x0, hi + ext);
        // box bound on the bump area: far below target means roundoff-sized
        // caps need not be resolved by the adaptive pass
        const double bound = (r2 - r1) * h(x0);
        if (bound < 1e-3 * delta) return bound;
        return integrate([&](double x) { return std::max(0.0, h(x)); }, r1,
                         r2, 1e-9);
    };
    for (int j = 0; j < grid; ++j) {
        const double x0 = lo + (hi - lo) * j / (grid - 1);
        const double s = psi.dpsi(x0);
        const double c0 = psi.psi(x0) - s * x0;  // tangent: cut area 0
        const double c = solve_increasing(
            [&](double cc) { return cut_area(s, cc, x0); }, delta, c0, 1e-6);
        out.lines.emplace_back(s, c);
    }
    return out;
}

}  // namespace hsdepth
