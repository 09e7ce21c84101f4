#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "gelfand/asymptotics.hpp"
#include "gelfand/diagram.hpp"

namespace gelfand {

namespace detail {

inline std::string svg_points(const ContinuousDiagram& d, double smin, double smax, double step,
                              double x0, double xs, double y0, double ys) {
    std::ostringstream os;
    char buf[64];
    auto emit = [&](double s, double v) {
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x0 + xs * s, y0 - ys * v);
        os << buf;
    };
    if (!d.breakpoints().empty()) {
        emit(smin, d(smin));
        for (std::size_t i = 0; i < d.breakpoints().size(); ++i) emit(d.breakpoints()[i], d.values()[i]);
        emit(smax, d(smax));
    } else {
        for (double s = smin; s <= smax + 1e-12; s += step) emit(s, d(s));
    }
    return os.str();
}

}  // namespace detail

/// Rescaled-profile overlay: lambda* as a polyline, the LSKV curve, and the predicted
/// mean deviation band Omega + (2/sqrt(n)) (1/2 - 2 sin(theta)/pi).
inline void write_profile_overlay_svg(std::ostream& os, const ContinuousDiagram& lambda_star,
                                      long long n, const std::string& provenance) {
    const double smin = -3.0, smax = 3.0;
    const double width = 720.0, height = 420.0;
    const double xs = width / (smax - smin), x0 = -smin * xs;
    const double ys = 120.0, y0 = height - 24.0;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    if (!provenance.empty()) {
        std::string safe = provenance;
        for (auto& ch : safe) {
            if (ch == '-' || ch == '<' || ch == '>') ch = ' ';
        }
        os << "<!-- " << safe << " -->\n";
    }
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // |s| reference
    char buf[160];
    std::snprintf(buf, sizeof(buf), "<polyline points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f\" fill=\"none\" stroke=\"#cccccc\"/>\n",
                  x0 + xs * smin, y0 - ys * (-smin), x0, y0, x0 + xs * smax, y0 - ys * smax);
    os << buf;
    // mean deviation band around Omega
    std::ostringstream band;
    char pt[64];
    for (double theta = std::numbers::pi; theta >= -1e-9; theta -= std::numbers::pi / 240.0) {
        const double s = 2.0 * std::cos(theta);
        const double v = lskv_profile(s) + (2.0 / std::sqrt(static_cast<double>(n))) * limit_process_mean(std::max(0.0, theta));
        std::snprintf(pt, sizeof(pt), "%.2f,%.2f ", x0 + xs * s, y0 - ys * v);
        band << pt;
    }
    os << "<polyline points=\"" << band.str()
       << "\" fill=\"none\" stroke=\"#2a9d8f\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
    os << "<polyline points=\""
       << detail::svg_points(ContinuousDiagram::lskv(), smin, smax, 0.01, x0, xs, y0, ys)
       << "\" fill=\"none\" stroke=\"#e63946\" stroke-width=\"1.5\"/>\n";
    os << "<polyline points=\"" << detail::svg_points(lambda_star, smin, smax, 0.01, x0, xs, y0, ys)
       << "\" fill=\"none\" stroke=\"#1d3557\" stroke-width=\"1\"/>\n";
    os << "<text x=\"12\" y=\"20\" font-family=\"monospace\" font-size=\"13\">rescaled profile (n=" << n
       << ") vs LSKV curve</text>\n";
    os << "</svg>\n";
}

}  // namespace gelfand
