#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "tlat/pl_curve.hpp"
#include "tlat/qubit.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// Presentational SVG renderings (curves and Bloch-plane cones).  Fixed unit
/// viewBox, no text, no styling hooks; correctness of the pictures is not
/// asserted anywhere beyond well-formedness.

namespace detail {

inline const char* svg_palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    return colors[i % 5];
}

inline std::string svg_open() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" "
           "width=\"480\" height=\"480\">\n"
           "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\" "
           "stroke=\"#888888\" stroke-width=\"0.004\"/>\n";
}

}  // namespace detail

/// Curves drawn into the unit square, y flipped so larger values sit higher.
inline std::string curve_svg(const std::vector<PLCurve>& curves) {
    std::ostringstream svg;
    svg << detail::svg_open();
    for (std::size_t k = 0; k < curves.size(); ++k) {
        svg << "<polyline fill=\"none\" stroke=\"" << detail::svg_palette(k)
            << "\" stroke-width=\"0.008\" points=\"";
        bool first = true;
        for (const CurvePoint& pt : curves[k].points()) {
            if (!first) svg << ' ';
            first = false;
            svg << to_double(pt.x) << ',' << 1.0 - to_double(pt.y);
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

/// The xz section of the Bloch ball with the reachable-set disks of one
/// state: the outer ball, the cone circles, the state and the reference.
inline std::string cone_svg(const QubitState& s, const QubitGibbs& g) {
    auto u = [](double x) { return (x + 1.0) / 2.0; };
    auto v = [](double z) { return (1.0 - z) / 2.0; };
    QubitCone cone = future_cone(s, g);
    std::ostringstream svg;
    svg << detail::svg_open();
    svg << "<circle cx=\"0.5\" cy=\"0.5\" r=\"0.5\" fill=\"none\" stroke=\"#333333\" "
           "stroke-width=\"0.006\"/>\n";
    auto disk = [&](double radius, double center, const char* color) {
        svg << "<circle cx=\"0.5\" cy=\"" << v(center) << "\" r=\"" << radius / 2.0
            << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"" << color
            << "\" stroke-width=\"0.006\"/>\n";
    };
    disk(cone.radius_a, cone.center_a, detail::svg_palette(0));
    if (cone.ground) {
        double reach = std::sqrt(std::max(0.0, 1.0 - cone.min_z * cone.min_z));
        svg << "<line x1=\"" << u(-reach) << "\" y1=\"" << v(cone.min_z) << "\" x2=\""
            << u(reach) << "\" y2=\"" << v(cone.min_z) << "\" stroke=\""
            << detail::svg_palette(1) << "\" stroke-width=\"0.006\"/>\n";
    } else {
        disk(cone.radius_b, cone.center_b, detail::svg_palette(1));
    }
    double planar = std::hypot(s.x, s.y);
    svg << "<circle cx=\"" << u(planar) << "\" cy=\"" << v(s.z)
        << "\" r=\"0.012\" fill=\"#000000\"/>\n";
    svg << "<circle cx=\"0.5\" cy=\"" << v(g.zeta())
        << "\" r=\"0.009\" fill=\"#d62728\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tlat
