#pragma once

/**
 * @file svg.hpp
 * @brief Static SVG line plot of a density curve with the support edge marked.
 *
 * Self-contained emission, no rendering dependencies; coordinates are
 * formatted at fixed precision so a rerun reproduces the file byte for byte.
 */

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuss {

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string svg_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace detail

inline void write_density_svg(std::ostream& os, const std::vector<double>& xs,
                              const std::vector<double>& density, double edge,
                              const std::string& title) {
    if (xs.size() != density.size() || xs.size() < 2)
        throw std::invalid_argument("write_density_svg: need matching columns, at least 2 points");
    const double W = 720, H = 440, L = 64, R = 30, T = 44, B = 52;
    const double x_max = std::max(edge * 1.04, *std::max_element(xs.begin(), xs.end()));
    const double y_max = 1.05 * std::max(1e-12, *std::max_element(density.begin(), density.end()));
    auto px = [&](double x) { return L + (W - L - R) * x / x_max; };
    auto py = [&](double y) { return H - B - (H - T - B) * y / y_max; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
          "text-anchor=\"middle\">"
       << title << "</text>\n";

    // axes
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_max * i / 4.0, yv = y_max * i / 4.0;
        os << "<line x1=\"" << detail::svg_num(px(xv)) << "\" y1=\"" << H - B << "\" x2=\""
           << detail::svg_num(px(xv)) << "\" y2=\"" << H - B + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << detail::svg_num(px(xv)) << "\" y=\"" << H - B + 20
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
           << detail::svg_label(xv) << "</text>\n";
        os << "<line x1=\"" << L - 5 << "\" y1=\"" << detail::svg_num(py(yv)) << "\" x2=\"" << L
           << "\" y2=\"" << detail::svg_num(py(yv)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << L - 8 << "\" y=\"" << detail::svg_num(py(yv) + 4)
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
           << detail::svg_label(yv) << "</text>\n";
    }

    // density curve
    os << "<path fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i == 0 ? "M" : " L") << detail::svg_num(px(xs[i])) << ","
           << detail::svg_num(py(density[i]));
    os << "\"/>\n";

    // support edge marker
    os << "<line x1=\"" << detail::svg_num(px(edge)) << "\" y1=\"" << T << "\" x2=\""
       << detail::svg_num(px(edge)) << "\" y2=\"" << H - B
       << "\" stroke=\"#c23b22\" stroke-dasharray=\"6 4\"/>\n";
    os << "<text x=\"" << detail::svg_num(px(edge) - 6) << "\" y=\"" << T + 14
       << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c23b22\" "
          "text-anchor=\"end\">support edge = "
       << detail::svg_label(edge) << "</text>\n";
    os << "</svg>\n";
}

}  // namespace fuss
