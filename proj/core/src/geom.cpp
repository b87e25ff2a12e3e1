#include "hsdepth/geom.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace hsdepth {

namespace {

double signed_area(const std::vector<Vec2>& v) {
    double s = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        s += a.cross(b);
    }
    return 0.5 * s;
}

}  // namespace

Vec2 unit(const Vec2& v) {
    const double n = v.norm();
    if (n < 1e-300) throw std::invalid_argument("unit: zero-length vector");
    return v / n;
}

Polygon::Polygon(std::vector<Vec2> verts) : verts_(std::move(verts)) {
    for (const Vec2& p : verts_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("Polygon: non-finite vertex");
    }
    if (verts_.size() >= 3 && signed_area(verts_) < 0.0)
        std::reverse(verts_.begin(), verts_.end());
}

Polygon Polygon::rectangle(double x0, double y0, double x1, double y1) {
    return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Polygon Polygon::regular_ngon(int n, double radius, const Vec2& center) {
    if (n < 3) throw std::invalid_argument("regular_ngon: n < 3");
    std::vector<Vec2> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        v.push_back(center + radius * dir(t));
    }
    return Polygon(std::move(v));
}

double Polygon::area() const {
    if (verts_.size() < 3) return 0.0;
    return std::abs(signed_area(verts_));
}

Vec2 Polygon::centroid() const {
    const std::size_t n = verts_.size();
    if (n == 0) throw std::domain_error("centroid: empty polygon");
    if (n == 1) return verts_[0];
    if (n == 2) return (verts_[0] + verts_[1]) / 2.0;
    double a = 0.0;
    Vec2 c{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = verts_[i];
        const Vec2& q = verts_[(i + 1) % n];
        const double w = p.cross(q);
        a += w;
        c = c + (p + q) * w;
    }
    if (std::abs(a) < 1e-300)
        throw std::domain_error("centroid: degenerate (zero-area) polygon");
    return c / (3.0 * a);
}

double Polygon::diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            d = std::max(d, (verts_[i] - verts_[j]).norm());
    return d;
}

double Polygon::perimeter() const {
    const std::size_t n = verts_.size();
    if (n < 2) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += (verts_[(i + 1) % n] - verts_[i]).norm();
    return s;
}

namespace {

// bounding-box diagonal: a 2-approximation of the diameter in linear time,
// good enough as a tolerance scale
double bbox_diagonal(const std::vector<Vec2>& v) {
    if (v.empty()) return 0.0;
    double x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
    for (const Vec2& p : v) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

}  // namespace

bool Polygon::is_convex(double tol) const {
    const std::size_t n = verts_.size();
    if (n < 3) return true;
    const double diag = bbox_diagonal(verts_);
    const double scale2 = diag * diag;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = verts_[(i + 1) % n] - verts_[i];
        const Vec2 e2 = verts_[(i + 2) % n] - verts_[(i + 1) % n];
        if (e1.cross(e2) < -tol * scale2) return false;
    }
    return true;
}

bool Polygon::contains(const Vec2& p, double tol) const {
    const std::size_t n = verts_.size();
    if (n == 0) return false;
    const double scale = std::max(1.0, bbox_diagonal(verts_));
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = verts_[(i + 1) % n] - verts_[i];
        if (e.cross(p - verts_[i]) < -tol * scale * scale) return false;
    }
    return true;
}

Polygon Polygon::translated(const Vec2& t) const {
    std::vector<Vec2> v = verts_;
    for (Vec2& p : v) p = p + t;
    return Polygon(std::move(v));
}

Polygon Polygon::scaled(double s, const Vec2& about) const {
    std::vector<Vec2> v = verts_;
    for (Vec2& p : v) p = about + (p - about) * s;
    return Polygon(std::move(v));
}

Polygon clip_halfplane(const Polygon& poly, const Halfplane& h) {
    const std::vector<Vec2>& in = poly.vertices();
    const std::size_t n = in.size();
    if (n == 0) return Polygon();
    std::vector<Vec2> out;
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = in[i];
        const Vec2& b = in[(i + 1) % n];
        const double da = h.signed_dist(a);
        const double db = h.signed_dist(b);
        if (da <= 0.0) {
            out.push_back(a);
            if (db > 0.0) {
                const double t = da / (da - db);
                out.push_back(a + (b - a) * t);
            }
        } else if (db < 0.0) {
            const double t = da / (da - db);
            out.push_back(a + (b - a) * t);
        }
    }
    // drop consecutive duplicates introduced by vertices on the line
    std::vector<Vec2> dedup;
    for (const Vec2& p : out) {
        if (dedup.empty() || (p - dedup.back()).norm() > 1e-14)
            dedup.push_back(p);
    }
    while (dedup.size() > 1 && (dedup.front() - dedup.back()).norm() <= 1e-14)
        dedup.pop_back();
    return Polygon(std::move(dedup));
}

HalfplaneIntersection intersect_halfplanes(const std::vector<Halfplane>& hs,
                                           double scale_hint) {
    double scale = std::max(1.0, std::abs(scale_hint));
    for (const Halfplane& h : hs) scale = std::max(scale, std::abs(h.offset));
    const double big = 1e6 * scale;
    Polygon box = Polygon::rectangle(-big, -big, big, big);
    Polygon cur = box;
    for (const Halfplane& h : hs) {
        cur = clip_halfplane(cur, h);
        if (cur.size() < 3) return {HalfplaneIntersection::Kind::Empty, {}};
    }
    // if any vertex still sits on the bounding box, the true intersection
    // is unbounded
    for (const Vec2& p : cur.vertices()) {
        if (std::abs(p.x) >= big * (1.0 - 1e-9) ||
            std::abs(p.y) >= big * (1.0 - 1e-9))
            return {HalfplaneIntersection::Kind::Unbounded, {}};
    }
    return {HalfplaneIntersection::Kind::Bounded, cur};
}

Polygon convex_hull(std::vector<Vec2> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points");
    std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Vec2& a, const Vec2& b) {
                                 return a.x == b.x && a.y == b.y;
                             }),
                 points.end());
    const std::size_t n = points.size();
    if (n <= 2) return Polygon(std::move(points));
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && (hull[k - 1] - hull[k - 2])
                                 .cross(points[i] - hull[k - 2]) <= 0.0)
            --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && (hull[k - 1] - hull[k - 2])
                                 .cross(points[i] - hull[k - 2]) <= 0.0)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return Polygon(std::move(hull));
}

Vec2 chord_barycenter(const Polygon& poly, const Halfplane& h) {
    // segments of the boundary line inside poly, found by clipping with a
    // thin slab and reading the cut edges
    const std::vector<Vec2>& v = poly.vertices();
    const std::size_t n = v.size();
    if (n < 3) throw std::domain_error("chord_barycenter: degenerate polygon");
    const Vec2 t = h.normal.perp();  // direction along the line
    // collect crossing parameters s where boundary meets the line; the
    // chord is the union of intervals between sorted crossings
    std::vector<double> cross_s;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const double da = h.signed_dist(a);
        const double db = h.signed_dist(b);
        if ((da < 0.0 && db >= 0.0) || (da >= 0.0 && db < 0.0)) {
            const double w = da / (da - db);
            const Vec2 p = a + (b - a) * w;
            cross_s.push_back(t.dot(p));
        }
    }
    std::sort(cross_s.begin(), cross_s.end());
    if (cross_s.size() < 2)
        throw std::domain_error("chord_barycenter: line misses the polygon");
    double len = 0.0, moment = 0.0;
    for (std::size_t i = 0; i + 1 < cross_s.size(); i += 2) {
        const double a = cross_s[i], b = cross_s[i + 1];
        len += b - a;
        moment += 0.5 * (b * b - a * a);
    }
    const double scale = std::max(1.0, poly.diameter());
    if (len <= 1e-12 * scale)
        throw std::domain_error("chord_barycenter: zero-length chord");
    const double s_bar = moment / len;
    return h.normal * h.offset + t * s_bar;
}

ChordMeasure chord_measure(const Polygon& poly, const Halfplane& h) {
    ChordMeasure cm;
    if (poly.size() < 3) return cm;
    const std::vector<Vec2>& v = poly.vertices();
    const std::size_t n = v.size();
    const Vec2 t = h.normal.perp();
    std::vector<double> cross_s;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const double da = h.signed_dist(a);
        const double db = h.signed_dist(b);
        if ((da < 0.0 && db >= 0.0) || (da >= 0.0 && db < 0.0)) {
            const double w = da / (da - db);
            cross_s.push_back(t.dot(a + (b - a) * w));
        }
    }
    std::sort(cross_s.begin(), cross_s.end());
    double len = 0.0, moment = 0.0;
    for (std::size_t i = 0; i + 1 < cross_s.size(); i += 2) {
        const double a = cross_s[i], b = cross_s[i + 1];
        len += b - a;
        moment += 0.5 * (b * b - a * a);
    }
    cm.length = len;
    if (len > 0.0)
        cm.barycenter = h.normal * h.offset + t * (moment / len);
    return cm;
}

namespace {

double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 < 1e-300) return (p - a).norm();
    double t = (p - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

double one_sided_hausdorff(const Polygon& a, const Polygon& b) {
    // max over vertices of a of distance to b (valid for convex b since the
    // maximum of the convex distance function over a is at a vertex)
    double best = 0.0;
    for (const Vec2& p : a.vertices()) best = std::max(best, distance_to_polygon(b, p));
    return best;
}

}  // namespace

double distance_to_polygon(const Polygon& poly, const Vec2& p) {
    if (poly.empty()) throw std::domain_error("distance_to_polygon: empty");
    if (poly.size() >= 3 && poly.contains(p, 0.0)) return 0.0;
    const std::vector<Vec2>& v = poly.vertices();
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_dist(p, v[i], v[(i + 1) % n]));
    return best;
}

double hausdorff(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) throw std::domain_error("hausdorff: empty polygon");
    return std::max(one_sided_hausdorff(a, b), one_sided_hausdorff(b, a));
}

Polygon convex_intersection(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) return Polygon();
    Polygon cur = a;
    const std::vector<Vec2>& v = b.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n && !cur.empty(); ++i) {
        const Vec2 e = v[(i + 1) % n] - v[i];
        // interior of b is to the left of edge; H^- with inward normal
        const Vec2 nrm = unit(Vec2{e.y, -e.x});  // outward for CCW
        cur = clip_halfplane(cur, Halfplane(nrm, nrm.dot(v[i])));
    }
    return cur;
}

double symdiff_area(const Polygon& a, const Polygon& b) {
    const double inter = convex_intersection(a, b).area();
    return a.area() + b.area() - 2.0 * inter;
}

double support_function(const Polygon& poly, const Vec2& u) {
    if (poly.empty()) throw std::domain_error("support_function: empty polygon");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : poly.vertices()) best = std::max(best, v.dot(u));
    return best;
}

Polygon polar_body(const Polygon& poly, const Vec2& x0) {
    if (poly.size() < 3) throw std::domain_error("polar_body: degenerate polygon");
    if (!poly.contains(x0, -1e-12))
        throw std::invalid_argument("polar_body: x0 not strictly interior");
    std::vector<Halfplane> hs;
    hs.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) {
        const Vec2 w = v - x0;
        const double n = w.norm();
        if (n < 1e-14)
            throw std::invalid_argument("polar_body: x0 coincides with a vertex");
        hs.emplace_back(w / n, 1.0 / n);  // <y, w> <= 1
    }
    HalfplaneIntersection r = intersect_halfplanes(hs);
    if (r.kind != HalfplaneIntersection::Kind::Bounded)
        throw std::domain_error("polar_body: unbounded polar (x0 on boundary?)");
    return r.polygon;
}

Mat2Sym polygon_covariance(const Polygon& poly) {
    if (poly.size() < 3 || poly.area() <= 0.0)
        throw std::domain_error("polygon_covariance: degenerate polygon");
    const Vec2 c = poly.centroid();
    const std::vector<Vec2>& v = poly.vertices();
    const std::size_t n = v.size();
    double sxx = 0, sxy = 0, syy = 0, atot = 0;
    // fan triangulation about the centroid; signed areas handle simple
    // non-convex polygons
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i] - c;
        const Vec2 b = v[(i + 1) % n] - c;
        const double w = 0.5 * a.cross(b);
        atot += w;
        // second moments of a triangle (0, a, b) about 0:
        // \int x_i x_j dA = (w/6) * (a_i a_j + b_i b_j + (a_i b_j + a_j b_i)/2)
        sxx += w / 6.0 * (a.x * a.x + b.x * b.x + a.x * b.x);
        sxy += w / 6.0 * (a.x * a.y + b.x * b.y + 0.5 * (a.x * b.y + a.y * b.x));
        syy += w / 6.0 * (a.y * a.y + b.y * b.y + a.y * b.y);
    }
    Mat2Sym m;
    m.xx = sxx / atot;
    m.xy = sxy / atot;
    m.yy = syy / atot;
    return m;
}

double linear_moment(const Polygon& poly, const Vec2& u) {
    if (poly.size() < 3) return 0.0;
    const double a = poly.area();
    if (a <= 0.0) return 0.0;
    return a * poly.centroid().dot(u);
}

CutProfile::CutProfile(const Polygon& poly, const Vec2& u) {
    if (poly.size() < 3 || !poly.is_convex(1e-9))
        throw std::invalid_argument("CutProfile: needs a convex polygon");
    const Vec2 un = unit(u);
    const Vec2 up = un.perp();
    const std::vector<Vec2>& v = poly.vertices();
    const std::size_t n = v.size();
    std::vector<double> proj(n), lat(n);
    for (std::size_t i = 0; i < n; ++i) {
        proj[i] = un.dot(v[i]);
        lat[i] = up.dot(v[i]);
    }
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (proj[i] < proj[imin]) imin = i;
        if (proj[i] > proj[imax]) imax = i;
    }
    // two monotone chains from imin to imax (CCW and CW traversal)
    auto chain = [&](bool ccw) {
        std::vector<std::size_t> c;
        std::size_t i = imin;
        c.push_back(i);
        while (i != imax) {
            i = ccw ? (i + 1) % n : (i + n - 1) % n;
            c.push_back(i);
        }
        return c;
    };
    const std::vector<std::size_t> ca = chain(true), cb = chain(false);
    auto lat_on_chain = [&](const std::vector<std::size_t>& c, double t) {
        // linear interpolation on the chain at projection t; chains are
        // monotone non-decreasing in proj
        std::size_t lo = 0, hi = c.size() - 1;
        while (hi - lo > 1) {
            const std::size_t m = (lo + hi) / 2;
            if (proj[c[m]] <= t)
                lo = m;
            else
                hi = m;
        }
        const double p0 = proj[c[lo]], p1 = proj[c[hi]];
        if (p1 <= p0) return lat[c[lo]];
        const double w = std::clamp((t - p0) / (p1 - p0), 0.0, 1.0);
        return lat[c[lo]] + w * (lat[c[hi]] - lat[c[lo]]);
    };
    std::vector<double> events = proj;
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    const std::size_t m = events.size();
    t_.resize(m);
    width_.resize(m);
    cum_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        t_[i] = events[i];
        width_[i] = std::abs(lat_on_chain(ca, events[i]) -
                             lat_on_chain(cb, events[i]));
    }
    cum_[0] = 0.0;
    for (std::size_t i = 1; i < m; ++i)
        cum_[i] = cum_[i - 1] +
                  0.5 * (width_[i] + width_[i - 1]) * (t_[i] - t_[i - 1]);
}

double CutProfile::area_below(double t) const {
    if (t <= t_.front()) return 0.0;
    if (t >= t_.back()) return cum_.back();
    const std::size_t hi = static_cast<std::size_t>(
        std::upper_bound(t_.begin(), t_.end(), t) - t_.begin());
    const std::size_t lo = hi - 1;
    const double dt = t_[hi] - t_[lo];
    if (dt <= 0.0) return cum_[lo];
    const double s = (t - t_[lo]) / dt;
    const double w = width_[lo] + s * (width_[hi] - width_[lo]);
    return cum_[lo] + 0.5 * (width_[lo] + w) * (t - t_[lo]);
}

double CutProfile::offset_for_area(double target) const {
    const double total = cum_.back();
    if (target <= 0.0) return t_.front();
    if (target >= total) return t_.back();
    std::size_t lo = 0, hi = cum_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t m2 = (lo + hi) / 2;
        if (cum_[m2] <= target)
            lo = m2;
        else
            hi = m2;
    }
    const double rem = target - cum_[lo];
    const double dt = t_[hi] - t_[lo];
    if (dt <= 0.0 || rem <= 0.0) return t_[lo];
    const double w0 = width_[lo];
    const double dw = (width_[hi] - width_[lo]) / dt;
    // solve w0*x + dw*x^2/2 = rem on [0, dt]
    double x;
    if (std::abs(dw) < 1e-14 * std::max(1.0, w0)) {
        x = w0 > 0.0 ? rem / w0 : dt;
    } else {
        const double disc = w0 * w0 + 2.0 * dw * rem;
        x = (-w0 + std::sqrt(std::max(0.0, disc))) / dw;
    }
    return t_[lo] + std::clamp(x, 0.0, dt);
}

}  // namespace hsdepth
