/**
 * @file descriptors.cpp
 * @brief Parsing of "name(arg,...)" measure and body descriptors into
 *        library objects.
 */

#include "descriptors.hpp"

#include <cmath>
#include <stdexcept>

namespace hsdepth::cli {

namespace {

struct Descriptor {
    std::string name;
    std::vector<double> args;
};

Descriptor parse_descriptor(const std::string& s) {
    const std::size_t open = s.find('(');
    if (open == std::string::npos) return {s, {}};
    if (s.back() != ')')
        throw std::invalid_argument("descriptor: unbalanced '(' in '" + s + "'");
    Descriptor d;
    d.name = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(body.substr(pos), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("descriptor: bad number in '" + s + "'");
        }
        d.args.push_back(v);
        pos += used;
        if (pos < body.size()) {
            if (body[pos] != ',')
                throw std::invalid_argument("descriptor: expected ',' in '" +
                                            s + "'");
            ++pos;
        }
    }
    return d;
}

int int_arg(const Descriptor& d, std::size_t i) {
    const double v = d.args[i];
    if (v != std::floor(v))
        throw std::invalid_argument("descriptor: '" + d.name +
                                    "' needs an integer argument");
    return static_cast<int>(v);
}

}  // namespace

Measure make_measure(const std::string& descriptor) {
    const Descriptor d = parse_descriptor(descriptor);
    if (d.name == "square" && d.args.empty()) return Measure::unit_square();
    if (d.name == "triangle" && d.args.empty())
        return Measure::uniform_polygon(
            Polygon({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}));
    if (d.name == "disk") {
        if (d.args.empty()) return Measure::uniform_ball(2);
        if (d.args.size() == 1) return Measure::uniform_ball(int_arg(d, 0));
    }
    if (d.name == "gaussian") {
        if (d.args.empty()) return Measure::standard_gaussian(2);
        if (d.args.size() == 1)
            return Measure::standard_gaussian(int_arg(d, 0));
        if (d.args.size() == 5) {
            VecD mu(2);
            mu << d.args[0], d.args[1];
            MatD sigma(2, 2);
            sigma << d.args[2], d.args[3], d.args[3], d.args[4];
            return Measure::gaussian(mu, sigma);
        }
    }
    if (d.name == "cauchy-1sym" && d.args.empty())
        return Measure::alpha_symmetric(1.0, {MarginalCDF::Kind::Cauchy, 1},
                                        2);
    if (d.name == "tancer" && d.args.empty())
        return Measure::uniform_polygonal(PolygonalRegion::uniform_union(
            {Polygon::rectangle(-1.0, 0.0, 1.0, 2.0),
             Polygon::rectangle(-2.0, -4.0, 2.0, 0.0)}));
    if (d.name == "fig-difference" && d.args.empty())
        return Measure::piecewise_uniform_1d(
            {{-2.0, 0.0, 0.25}, {1.0, 5.0, 0.75}});
    throw std::invalid_argument("unknown measure descriptor '" + descriptor +
                                "'");
}

Body make_body(const std::string& descriptor) {
    const Descriptor d = parse_descriptor(descriptor);
    if (d.name == "disk" && d.args.empty()) return SmoothBody2D::disk();
    if (d.name == "ellipse" && d.args.size() == 2)
        return SmoothBody2D::ellipse(d.args[0], d.args[1]);
    if (d.name == "perturbed-disk" && d.args.size() == 2)
        return SmoothBody2D::perturbed_disk(d.args[0], int_arg(d, 1));
    if (d.name == "square" && d.args.empty())
        return Polygon::rectangle(0.0, 0.0, 1.0, 1.0);
    if (d.name == "ngon" && (d.args.size() == 1 || d.args.size() == 2))
        return Polygon::regular_ngon(int_arg(d, 0),
                                     d.args.size() == 2 ? d.args[1] : 1.0);
    throw std::invalid_argument("unknown body descriptor '" + descriptor + "'");
}

}  // namespace hsdepth::cli
