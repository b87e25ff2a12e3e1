/**
 * @file geom.hpp
 * @brief Planar geometry kernel: polygons, halfplanes, clipping, hulls,
 *        metrics, polar bodies.
 */

#ifndef HSDEPTH_GEOM_HPP
#define HSDEPTH_GEOM_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsdepth {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Unit vector; throws if the input is too short to normalize.
Vec2 unit(const Vec2& v);

/// Unit vector at angle theta (radians).
inline Vec2 dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Closed lower halfplane H^- = { z : <z, normal> <= offset }.
/// The complementary closed halfplane H^+ = { z : <z, normal> >= offset }.
struct Halfplane {
    Vec2 normal;    // unit
    double offset;  // alpha

    Halfplane(const Vec2& n, double a) : normal(unit(n)), offset(a) {}

    double signed_dist(const Vec2& p) const { return normal.dot(p) - offset; }
    bool contains(const Vec2& p, double tol = 0.0) const {
        return signed_dist(p) <= tol;
    }
};

/// Simple polygon with CCW vertex order. Constructors normalize orientation.
/// An empty vertex list represents the empty set; one or two vertices are
/// degenerate (point / segment) and carry zero area.
class Polygon {
  public:
    Polygon() = default;
    explicit Polygon(std::vector<Vec2> verts);

    static Polygon rectangle(double x0, double y0, double x1, double y1);
    static Polygon regular_ngon(int n, double radius = 1.0,
                                const Vec2& center = {0, 0});

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    bool degenerate() const { return verts_.size() < 3; }

    double area() const;
    Vec2 centroid() const;
    double diameter() const;
    double perimeter() const;

    /// True if all consecutive edge cross products are >= -tol * scale^2.
    bool is_convex(double tol = 1e-12) const;

    /// Point-in-polygon for convex polygons, boundary inclusive.
    bool contains(const Vec2& p, double tol = 1e-9) const;

    Polygon translated(const Vec2& t) const;
    Polygon scaled(double s, const Vec2& about = {0, 0}) const;

  private:
    std::vector<Vec2> verts_;
};

/// poly ∩ H^-. Boundary points are kept (closed-halfspace convention).
Polygon clip_halfplane(const Polygon& poly, const Halfplane& h);

/// Intersection of a finite list of halfplanes.
struct HalfplaneIntersection {
    enum class Kind { Empty, Bounded, Unbounded };
    Kind kind = Kind::Empty;
    Polygon polygon;  // valid when kind == Bounded
};
HalfplaneIntersection intersect_halfplanes(const std::vector<Halfplane>& hs,
                                           double scale_hint = 1.0);

/// CCW convex hull, collinear points removed. Hulls with < 3 vertices are
/// returned as degenerate polygons.
Polygon convex_hull(std::vector<Vec2> points);

/// 1-D barycenter of poly ∩ ∂H (the chord of the boundary line inside poly).
/// Throws if the boundary line meets poly in a set of zero length.
Vec2 chord_barycenter(const Polygon& poly, const Halfplane& h);

/// Length and barycenter of poly ∩ ∂H; length 0 when the line misses poly.
struct ChordMeasure {
    double length = 0.0;
    Vec2 barycenter{0, 0};
};
ChordMeasure chord_measure(const Polygon& poly, const Halfplane& h);

/// Hausdorff distance between two non-empty convex polygons.
double hausdorff(const Polygon& a, const Polygon& b);

/// Area of the symmetric difference of two convex polygons.
double symdiff_area(const Polygon& a, const Polygon& b);

/// Intersection of two convex polygons.
Polygon convex_intersection(const Polygon& a, const Polygon& b);

/// h_K(u) = max over vertices of <v, u>.
double support_function(const Polygon& poly, const Vec2& u);

/// Polar body { y : <y, v - x0> <= 1 for all vertices v }.
/// Throws if x0 is not strictly interior.
Polygon polar_body(const Polygon& poly, const Vec2& x0 = {0, 0});

/// Distance from p to the boundary-inclusive polygon (0 if inside).
double distance_to_polygon(const Polygon& poly, const Vec2& p);

/// Exact second moment matrix of the uniform distribution on a simple
/// polygon: entries of E[(X - c)(X - c)^T] with c the centroid.
/// Returned as {cxx, cxy, cyy}.
struct Mat2Sym {
    double xx = 0, xy = 0, yy = 0;
    double det() const { return xx * yy - xy * xy; }
};
Mat2Sym polygon_covariance(const Polygon& poly);

/// Integral of <y, u> over poly (signed); used by centroid-body support.
double linear_moment(const Polygon& poly, const Vec2& u);

/// Cumulative cut-area of a convex polygon along a direction:
/// area(t) = area(poly ∩ { z : <z, u> <= t }), exact and piecewise quadratic
/// with breakpoints at vertex projections. Width is piecewise linear.
class CutProfile {
  public:
    CutProfile(const Polygon& poly, const Vec2& u);

    double total_area() const { return cum_.empty() ? 0.0 : cum_.back(); }
    double t_min() const { return t_.front(); }
    double t_max() const { return t_.back(); }

    /// area(poly ∩ { <z,u> <= t })
    double area_below(double t) const;

    /// smallest t with area_below(t) >= target (target clamped to [0, A])
    double offset_for_area(double target) const;

  private:
    std::vector<double> t_;      // breakpoints, ascending
    std::vector<double> width_;  // chord width at breakpoints
    std::vector<double> cum_;    // cumulative area at breakpoints
};

}  // namespace hsdepth

#endif  // HSDEPTH_GEOM_HPP
