/**
 * @file main.cpp
 * @brief Command-line front end: depth tables, central regions and floating
 *        bodies, medians, symmetry, affine surface areas, flag asymptotics,
 *        polytope approximation experiments, halfspace-probability
 *        reconstruction, max-depth classification, and SVG plots.
 *
 * Exit codes: 0 success, 2 input error, 3 numeric failure.
 */

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "descriptors.hpp"
#include "hsdepth/approx.hpp"
#include "hsdepth/depth.hpp"
#include "hsdepth/regions.hpp"
#include "svg.hpp"
#include "table.hpp"

namespace hsdepth::cli {
namespace {

struct Common {
    std::string measure;
    std::string points;
    std::string out;
    std::string svg;
    std::uint64_t seed = 0;
    int directions = 512;
    double tol = -1.0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->fallthrough();  // lets --config appear after the subcommand
    sub->add_option("--measure", c.measure, "built-in measure descriptor");
    sub->add_option("--points", c.points, "CSV of sample points");
    sub->add_option("--out", c.out, "output CSV path (default stdout)");
    sub->add_option("--svg", c.svg, "SVG output path");
    sub->add_option("--seed", c.seed, "RNG seed for stochastic steps");
    sub->add_option("--directions", c.directions, "direction grid size");
    sub->add_option("--tol", c.tol, "tolerance override");
}

Measure resolve_measure(const Common& c) {
    if (!c.points.empty()) {
        const PointTable t = parse_points_csv(c.points);
        std::vector<VecD> pts;
        pts.reserve(t.rows.size());
        for (const std::vector<double>& row : t.rows) {
            VecD v(static_cast<int>(t.cols()));
            for (std::size_t i = 0; i < t.cols(); ++i)
                v(static_cast<int>(i)) = row[i];
            pts.push_back(std::move(v));
        }
        return Measure::empirical(std::move(pts));
    }
    if (!c.measure.empty()) return make_measure(c.measure);
    throw std::invalid_argument("need --measure or --points");
}

std::vector<VecD> read_points(const std::string& path, int dim) {
    const PointTable t = parse_points_csv(path);
    if (static_cast<int>(t.cols()) != dim)
        throw std::invalid_argument("'" + path + "' has " +
                                    std::to_string(t.cols()) +
                                    " columns, expected " +
                                    std::to_string(dim));
    std::vector<VecD> pts;
    pts.reserve(t.rows.size());
    for (const std::vector<double>& row : t.rows) {
        VecD v(dim);
        for (int i = 0; i < dim; ++i) v(i) = row[i];
        pts.push_back(std::move(v));
    }
    return pts;
}

void deliver(const Common& c, const std::string& csv) {
    if (c.out.empty())
        std::cout << csv;
    else
        write_file(c.out, csv);
}

void deliver_svg(const Common& c, const Scene& scene) {
    if (!c.svg.empty()) write_file(c.svg, emit_svg(scene));
}

ScenePath region_path(const Polygon& poly, const std::string& stroke) {
    ScenePath p;
    p.points = poly.vertices();
    p.stroke = stroke;
    return p;
}

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                           "#9467bd", "#ff7f0e", "#8c564b"};

int cmd_depth(const Common& c, const std::string& query_path) {
    const Measure m = resolve_measure(c);
    std::vector<VecD> queries;
    if (!query_path.empty())
        queries = read_points(query_path, m.dim());
    else if (m.kind() == Measure::Kind::Empirical)
        queries = *m.points();
    else
        throw std::invalid_argument("depth: need --query for this measure");
    std::ostringstream out;
    out << (m.dim() == 1 ? "x,depth,bound" : "x,y,depth,bound") << "\n";
    for (const VecD& q : queries) {
        const DepthResult r = hd(q, m);
        for (int i = 0; i < m.dim(); ++i) out << fmt12(q(i)) << ",";
        out << fmt12(r.value) << "," << fmt12(r.bound) << "\n";
    }
    deliver(c, out.str());
    return 0;
}

int cmd_region(const Common& c, double delta, bool floating) {
    const Measure m = resolve_measure(c);
    const DepthRegion r = floating
                              ? convex_floating_body(m, delta, c.directions)
                              : central_region(m, delta, c.directions);
    std::ostringstream out;
    if (r.dim == 1) {
        out << "lo,hi\n";
        if (!r.empty) out << fmt12(r.lo) << "," << fmt12(r.hi) << "\n";
    } else {
        out << "x,y\n";
        for (const Vec2& v : r.polygon.vertices())
            out << fmt12(v.x) << "," << fmt12(v.y) << "\n";
    }
    deliver(c, out.str());
    std::cerr << "empty=" << (r.empty ? 1 : 0)
              << " vertices=" << (r.dim == 2 ? r.polygon.size() : 0)
              << " bound=" << fmt12(r.bound) << "\n";
    if (!c.svg.empty() && r.dim == 2 && !r.empty) {
        Scene scene;
        scene.paths.push_back(region_path(r.outer, "#d62728"));
        scene.paths.push_back(region_path(r.polygon, "#1f77b4"));
        deliver_svg(c, scene);
    }
    return 0;
}

int cmd_median(const Common& c) {
    const Measure m = resolve_measure(c);
    const MedianResult r = halfspace_median(m, c.directions);
    std::ostringstream out;
    out << "max_depth," << (r.point.size() == 1 ? "x" : "x,y")
        << ",unique,set_diameter\n"
        << fmt12(r.max_depth);
    for (int i = 0; i < r.point.size(); ++i) out << "," << fmt12(r.point(i));
    out << "," << (r.unique ? 1 : 0) << "," << fmt12(r.set_diameter) << "\n";
    deliver(c, out.str());
    return 0;
}

int cmd_symmetry(const Common& c) {
    const Measure m = resolve_measure(c);
    const SymmetryReport r = symmetry_report(m);
    std::ostringstream out;
    out << "central,angular,halfspace,"
        << (r.center.size() == 1 ? "center_x" : "center_x,center_y")
        << ",max_depth\n"
        << (r.central ? 1 : 0) << "," << (r.angular ? 1 : 0) << ","
        << (r.halfspace ? 1 : 0);
    for (int i = 0; i < r.center.size(); ++i) out << "," << fmt12(r.center(i));
    out << "," << fmt12(r.max_depth) << "\n";
    deliver(c, out.str());
    return 0;
}

int cmd_winternitz(const Common& c) {
    const Measure m = resolve_measure(c);
    std::ostringstream out;
    out << "winternitz\n" << fmt12(winternitz(m, c.directions)) << "\n";
    deliver(c, out.str());
    return 0;
}

std::string extrapolation_csv(const FloatingExtrapolation& fe) {
    std::ostringstream out;
    out << "delta,scaled_deficit,limit,exponent,implied_asa\n";
    for (std::size_t i = 0; i < fe.deltas.size(); ++i)
        out << fmt12(fe.deltas[i]) << "," << fmt12(fe.values[i]) << ","
            << fmt12(fe.limit) << "," << fmt12(fe.exponent) << ","
            << fmt12(fe.implied_asa) << "\n";
    return out.str();
}

int cmd_asa(const Common& c, const std::string& body_desc,
            std::vector<double> deltas, bool via_floating, int facets) {
    const Body body = make_body(body_desc);
    if (!via_floating && std::holds_alternative<SmoothBody2D>(body)) {
        std::ostringstream out;
        out << "asa\n"
            << fmt12(affine_surface_area(std::get<SmoothBody2D>(body)))
            << "\n";
        deliver(c, out.str());
        return 0;
    }
    if (deltas.empty())
        throw std::invalid_argument("asa: floating route needs --delta");
    const int dirs = c.directions > 512 ? c.directions : 4096;
    const FloatingExtrapolation fe =
        std::holds_alternative<Polygon>(body)
            ? asa_via_floating(std::get<Polygon>(body), deltas, dirs)
            : asa_via_floating(std::get<SmoothBody2D>(body), deltas, dirs,
                               facets);
    deliver(c, extrapolation_csv(fe));
    std::cerr << "limit=" << fmt12(fe.limit)
              << " implied_asa=" << fmt12(fe.implied_asa) << "\n";
    return 0;
}

int cmd_lp_asa(const Common& c, const std::string& body_desc, double p) {
    const Body body = make_body(body_desc);
    if (!std::holds_alternative<SmoothBody2D>(body))
        throw std::invalid_argument("lp-asa: needs a smooth body");
    std::ostringstream out;
    out << "p,value\n"
        << fmt12(p) << ","
        << fmt12(lp_affine_surface_area(std::get<SmoothBody2D>(body), p))
        << "\n";
    deliver(c, out.str());
    return 0;
}

int cmd_flags(const Common& c, const std::string& body_desc,
              std::vector<double> deltas) {
    const Body body = make_body(body_desc);
    if (!std::holds_alternative<Polygon>(body))
        throw std::invalid_argument("flags: needs a polygon body");
    if (deltas.empty()) throw std::invalid_argument("flags: needs --delta");
    const int dirs = c.directions > 512 ? c.directions : 8192;
    const FlagAsymptotic fa =
        polytope_flag_asymptotic(std::get<Polygon>(body), deltas, dirs);
    std::ostringstream out;
    out << "delta,ratio,flags,predicted_limit\n";
    for (std::size_t i = 0; i < fa.deltas.size(); ++i)
        out << fmt12(fa.deltas[i]) << "," << fmt12(fa.ratios[i]) << ","
            << fa.flags << "," << fmt12(fa.predicted_limit) << "\n";
    deliver(c, out.str());
    return 0;
}

std::string deficit_csv(const std::vector<ApproxRun>& runs) {
    std::vector<double> ns, means;
    for (const ApproxRun& r : runs) {
        ns.push_back(r.n);
        means.push_back(r.deficit_mean);
    }
    const double slope = runs.size() >= 2 ? log_log_slope(ns, means) : 0.0;
    std::ostringstream out;
    out << "N,deficit_mean,deficit_se,slope_est\n";
    for (const ApproxRun& r : runs)
        out << r.n << "," << fmt12(r.deficit_mean) << ","
            << fmt12(r.deficit_se) << "," << fmt12(slope) << "\n";
    return out.str();
}

Scene loglog_scene(const std::vector<ApproxRun>& runs) {
    Scene scene;
    ScenePath p;
    p.closed = false;
    for (const ApproxRun& r : runs)
        if (r.deficit_mean > 0.0)
            p.points.push_back(
                {std::log(static_cast<double>(r.n)), std::log(r.deficit_mean)});
    ScenePoints marks;
    marks.points = p.points;
    scene.paths.push_back(std::move(p));
    scene.markers.push_back(std::move(marks));
    return scene;
}

int cmd_approx(const Common& c, const std::string& body_desc,
               const std::string& mode, std::vector<int> ns, int trials,
               double delta) {
    const Body body = make_body(body_desc);
    if (mode == "greedy") {
        if (!std::holds_alternative<Polygon>(body))
            throw std::invalid_argument("approx: greedy needs a polygon body");
        const Polygon& poly = std::get<Polygon>(body);
        const FloatingApprox fa = floating_body_algorithm(poly, delta);
        std::ostringstream out;
        out << "x,y\n";
        for (const Vec2& v : fa.polygon.vertices())
            out << fmt12(v.x) << "," << fmt12(v.y) << "\n";
        deliver(c, out.str());
        std::cerr << "vertices=" << fa.polygon.size()
                  << " containment=" << (fa.containment_verified ? 1 : 0)
                  << " deficit=" << fmt12(poly.area() - fa.polygon.area())
                  << "\n";
        if (!c.svg.empty()) {
            Scene scene;
            scene.paths.push_back(region_path(poly, "#d62728"));
            scene.paths.push_back(region_path(fa.polygon, "#1f77b4"));
            deliver_svg(c, scene);
        }
        return 0;
    }
    if (ns.empty()) throw std::invalid_argument("approx: needs --n");
    std::vector<ApproxRun> runs;
    for (int n : ns) {
        if (mode == "interior") {
            if (!std::holds_alternative<Polygon>(body))
                throw std::invalid_argument(
                    "approx: interior needs a polygon body");
            runs.push_back(random_polytope_deficit(std::get<Polygon>(body), n,
                                                   trials, c.seed));
        } else if (mode == "boundary-uniform" || mode == "boundary-affine") {
            if (!std::holds_alternative<SmoothBody2D>(body))
                throw std::invalid_argument(
                    "approx: boundary modes need a smooth body");
            const BoundaryDensity d = mode == "boundary-uniform"
                                          ? BoundaryDensity::Uniform
                                          : BoundaryDensity::AffineSurface;
            runs.push_back(random_boundary_polytope(
                std::get<SmoothBody2D>(body), d, n, trials, c.seed));
        } else {
            throw std::invalid_argument("approx: unknown mode '" + mode + "'");
        }
    }
    deliver(c, deficit_csv(runs));
    if (!c.svg.empty()) deliver_svg(c, loglog_scene(runs));
    return 0;
}

int cmd_reconstruct(const Common& c, int n_halfspaces) {
    const Measure m = resolve_measure(c);
    if (m.dim() != 2)
        throw std::invalid_argument("reconstruct: planar measures only");
    const MedianResult med = halfspace_median(m, c.directions);
    const Vec2 center = to_vec2(med.point);
    const auto depth = [&m](const Vec2& x) {
        return hd(to_vecd(x), m).value;
    };
    Rng rng(c.seed);
    std::ostringstream out;
    out << "nx,ny,offset,truth,reconstructed,abs_error\n";
    double max_err = 0.0;
    for (int i = 0; i < n_halfspaces; ++i) {
        const Vec2 u = dir(2.0 * M_PI * rng.uniform());
        const double p = 0.05 + 0.9 * rng.uniform();
        const double offset = m.projection_quantile(to_vecd(u), p);
        const Halfplane h{u, offset};
        const double truth = m.halfspace_prob2d(h);
        const double rec =
            reconstruct_halfspace_prob(h, depth, center, 10.0 * m.scale());
        const double err = std::abs(rec - truth);
        max_err = std::max(max_err, err);
        out << fmt12(u.x) << "," << fmt12(u.y) << "," << fmt12(offset) << ","
            << fmt12(truth) << "," << fmt12(rec) << "," << fmt12(err) << "\n";
    }
    deliver(c, out.str());
    std::cerr << "max_error=" << fmt12(max_err) << "\n";
    return 0;
}

int cmd_classify(const Common& c, const std::string& a_path,
                 const std::string& b_path, const std::string& q_path) {
    Common ca;
    ca.points = a_path;
    Common cb;
    cb.points = b_path;
    const Measure ma = resolve_measure(ca);
    const Measure mb = resolve_measure(cb);
    if (ma.dim() != mb.dim())
        throw std::invalid_argument("classify: training dimensions differ");
    const std::vector<VecD> queries = read_points(q_path, ma.dim());
    std::ostringstream out;
    out << (ma.dim() == 1 ? "x,label" : "x,y,label") << "\n";
    for (const VecD& q : queries) {
        const DepthLabel label = classify_max_depth(q, ma, mb);
        for (int i = 0; i < ma.dim(); ++i) out << fmt12(q(i)) << ",";
        out << (label == DepthLabel::First
                    ? "a"
                    : label == DepthLabel::Second ? "b" : "unclassified")
            << "\n";
    }
    deliver(c, out.str());
    return 0;
}

int cmd_plot(const Common& c, std::vector<double> deltas, bool with_dupin) {
    if (c.svg.empty()) throw std::invalid_argument("plot: needs --svg");
    const Measure m = resolve_measure(c);
    if (m.dim() != 2)
        throw std::invalid_argument("plot: planar measures only");
    Scene scene;
    std::sort(deltas.begin(), deltas.end());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const DepthRegion r = central_region(m, deltas[i], c.directions);
        if (!r.empty)
            scene.paths.push_back(
                region_path(r.polygon, kPalette[i % 6]));
        if (with_dupin) {
            ScenePath dp;
            dp.points = dupin_curve(m, deltas[i], c.directions);
            dp.stroke = "#7f7f7f";
            scene.paths.push_back(std::move(dp));
        }
    }
    if (m.kind() == Measure::Kind::Empirical) {
        ScenePoints marks;
        for (const VecD& p : *m.points()) marks.points.push_back(to_vec2(p));
        scene.markers.push_back(std::move(marks));
    }
    write_file(c.svg, emit_svg(scene));
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"halfspace depth, central regions, floating bodies, and "
                 "affine surface areas"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key/value config with sections; "
                                   "command-line flags win");

    Common c;
    std::string query, body_desc = "disk", mode = "interior";
    std::string train_a, train_b, query_file;
    std::vector<double> deltas;
    std::vector<int> ns;
    double delta = 0.1, p = 1.0, lambda = 0.0;
    int trials = 100, facets = 4096, n_halfspaces = 64;
    bool floating = false, via_floating = false, with_dupin = false;
    (void)lambda;

    CLI::App* depth_cmd = app.add_subcommand("depth", "point depth table");
    add_common(depth_cmd, c);
    depth_cmd->add_option("--query", query, "CSV of evaluation points");

    CLI::App* region_cmd =
        app.add_subcommand("region", "depth central region vertices");
    add_common(region_cmd, c);
    region_cmd->add_option("--delta", delta, "depth level")->required();
    region_cmd->add_flag("--floating", floating,
                         "weak-cut floating body instead of D_delta");

    CLI::App* median_cmd = app.add_subcommand("median", "halfspace median");
    add_common(median_cmd, c);

    CLI::App* symmetry_cmd =
        app.add_subcommand("symmetry", "symmetry report");
    add_common(symmetry_cmd, c);

    CLI::App* winternitz_cmd =
        app.add_subcommand("winternitz", "Winternitz measure of symmetry");
    add_common(winternitz_cmd, c);

    CLI::App* asa_cmd =
        app.add_subcommand("asa", "affine surface area of a body");
    add_common(asa_cmd, c);
    asa_cmd->add_option("--body", body_desc, "body descriptor");
    asa_cmd->add_option("--delta", deltas, "floating-body cut areas");
    asa_cmd->add_flag("--via-floating", via_floating,
                      "extrapolate from floating-body deficits");
    asa_cmd->add_option("--facets", facets, "polygonization of smooth bodies");

    CLI::App* lp_cmd = app.add_subcommand("lp-asa", "L_p affine surface area");
    add_common(lp_cmd, c);
    lp_cmd->add_option("--body", body_desc, "body descriptor");
    lp_cmd->add_option("--p", p, "exponent (inf allowed, -2 rejected)")
        ->required();

    CLI::App* flags_cmd =
        app.add_subcommand("flags", "polytope flag-number asymptotics");
    add_common(flags_cmd, c);
    flags_cmd->add_option("--body", body_desc, "polygon body descriptor");
    flags_cmd->add_option("--delta", deltas, "cut areas")->required();

    CLI::App* approx_cmd =
        app.add_subcommand("approx", "polytope approximation experiments");
    add_common(approx_cmd, c);
    approx_cmd->add_option("--body", body_desc, "body descriptor");
    approx_cmd->add_option("--mode", mode,
                           "greedy | interior | boundary-uniform | "
                           "boundary-affine");
    approx_cmd->add_option("--n", ns, "vertex / sample counts");
    approx_cmd->add_option("--trials", trials, "Monte Carlo trials");
    approx_cmd->add_option("--delta", delta, "greedy cut area");

    CLI::App* rec_cmd = app.add_subcommand(
        "reconstruct", "halfspace probabilities from the depth function");
    add_common(rec_cmd, c);
    rec_cmd->add_option("--n", n_halfspaces, "number of random halfspaces");

    CLI::App* cls_cmd =
        app.add_subcommand("classify", "max-depth two-sample classification");
    add_common(cls_cmd, c);
    cls_cmd->add_option("--train-a", train_a, "first training CSV")
        ->required();
    cls_cmd->add_option("--train-b", train_b, "second training CSV")
        ->required();
    cls_cmd->add_option("--query", query_file, "query CSV")->required();

    CLI::App* plot_cmd =
        app.add_subcommand("plot", "SVG of nested regions over data");
    add_common(plot_cmd, c);
    plot_cmd->add_option("--delta", deltas, "depth levels")->required();
    plot_cmd->add_flag("--dupin", with_dupin, "overlay Dupin curves");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    int rc = 0;
    if (app.got_subcommand(depth_cmd)) rc = cmd_depth(c, query);
    else if (app.got_subcommand(region_cmd)) rc = cmd_region(c, delta, floating);
    else if (app.got_subcommand(median_cmd)) rc = cmd_median(c);
    else if (app.got_subcommand(symmetry_cmd)) rc = cmd_symmetry(c);
    else if (app.got_subcommand(winternitz_cmd)) rc = cmd_winternitz(c);
    else if (app.got_subcommand(asa_cmd))
        rc = cmd_asa(c, body_desc, deltas, via_floating, facets);
    else if (app.got_subcommand(lp_cmd)) rc = cmd_lp_asa(c, body_desc, p);
    else if (app.got_subcommand(flags_cmd)) rc = cmd_flags(c, body_desc, deltas);
    else if (app.got_subcommand(approx_cmd))
        rc = cmd_approx(c, body_desc, mode, ns, trials, delta);
    else if (app.got_subcommand(rec_cmd)) rc = cmd_reconstruct(c, n_halfspaces);
    else if (app.got_subcommand(cls_cmd))
        rc = cmd_classify(c, train_a, train_b, query_file);
    else if (app.got_subcommand(plot_cmd)) rc = cmd_plot(c, deltas, with_dupin);

    // durable record of the resolved run next to the primary output
    const std::string anchor = !c.out.empty() ? c.out : c.svg;
    if (rc == 0 && !anchor.empty())
        write_file(anchor + ".config", app.config_to_str(true, true));
    return rc;
}

}  // namespace
}  // namespace hsdepth::cli

int main(int argc, char** argv) {
    try {
        return hsdepth::cli::dispatch(argc, argv);
    } catch (const hsdepth::cli::CsvError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}
