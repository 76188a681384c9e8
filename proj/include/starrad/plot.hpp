#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "starrad/classes.hpp"
#include "starrad/extremal.hpp"
#include "starrad/regions.hpp"

namespace starrad::plot {

struct PlotRequest {
    std::optional<TargetRegion> region;
    std::optional<ClassId> cls;
    std::optional<double> r;  // required together with cls
};

namespace detail {

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

struct Frame {
    double x0, y0, span;
    static constexpr double kSize = 800.0;
    static constexpr double kPad = 60.0;

    [[nodiscard]] double px(double x) const { return kPad + (x - x0) / span * (kSize - 2 * kPad); }
    [[nodiscard]] double py(double y) const { return kSize - kPad - (y - y0) / span * (kSize - 2 * kPad); }
    [[nodiscard]] double scale() const { return (kSize - 2 * kPad) / span; }
};

inline std::string path(const Frame& fr, const std::vector<Complex>& pts) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += i == 0 ? "M" : " L";
        d += num(fr.px(pts[i].real())) + "," + num(fr.py(pts[i].imag()));
    }
    return d;
}

}  // namespace detail

/// Axis-annotated 800x800 SVG of a region boundary, an image disk and the extremal's s_f(|z| = r).
[[nodiscard]] inline std::string render_svg(const PlotRequest& req) {
    if (req.cls && !req.r) throw PreconditionError("plot: a class needs --r");
    if (req.r && !(*req.r > 0.0 && *req.r < 1.0)) throw PreconditionError("plot: r must lie in (0, 1)");
    if (!req.region && !req.cls) throw PreconditionError("plot: nothing to draw; give a region and/or a class");

    constexpr int kCurvePoints = 720;
    std::vector<Complex> outline;
    std::vector<Complex> image;
    std::optional<Disk> disk;
    if (req.region) outline = region_outline(*req.region, kCurvePoints);
    if (req.cls) {
        disk = image_disk(*req.cls, *req.r);
        const auto id = extremal_for(*req.cls);
        for (int j = 0; j <= kCurvePoints; ++j)
            image.push_back(eval_sf(id, std::polar(*req.r, 2.0 * std::numbers::pi * j / kCurvePoints)));
    }

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    auto grow = [&](Complex p) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    };
    for (auto p : outline) grow(p);
    for (auto p : image) grow(p);
    if (disk) {
        grow(disk->center + Complex{disk->radius, disk->radius});
        grow(disk->center - Complex{disk->radius, disk->radius});
    }
    grow({0.0, 0.0});
    const double span = std::max(xmax - xmin, ymax - ymin) * 1.1;
    const detail::Frame fr{0.5 * (xmin + xmax) - span / 2, 0.5 * (ymin + ymax) - span / 2, span};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // axes through the origin with ticks at 0.5 spacing
    const double ox = fr.px(0.0), oy = fr.py(0.0);
    svg << "<g stroke=\"#888\" stroke-width=\"1\">\n";
    svg << "<line x1=\"0\" y1=\"" << detail::num(oy) << "\" x2=\"800\" y2=\"" << detail::num(oy) << "\"/>\n";
    svg << "<line x1=\"" << detail::num(ox) << "\" y1=\"0\" x2=\"" << detail::num(ox) << "\" y2=\"800\"/>\n";
    svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n";
    const double step = 0.5;
    for (double t = std::ceil(fr.x0 / step) * step; t <= fr.x0 + span; t += step) {
        if (std::abs(t) < 1e-12) continue;
        svg << "<text x=\"" << detail::num(fr.px(t)) << "\" y=\"" << detail::num(oy + 14) << "\">" << detail::num(t)
            << "</text>\n";
    }
    for (double t = std::ceil(fr.y0 / step) * step; t <= fr.y0 + span; t += step) {
        if (std::abs(t) < 1e-12) continue;
        svg << "<text x=\"" << detail::num(ox + 4) << "\" y=\"" << detail::num(fr.py(t)) << "\">" << detail::num(t)
            << "i</text>\n";
    }
    svg << "<text x=\"770\" y=\"" << detail::num(oy - 6) << "\">Re</text>\n";
    svg << "<text x=\"" << detail::num(ox + 6) << "\" y=\"14\">Im</text>\n</g>\n";

    if (!outline.empty()) {
        svg << "<path id=\"region\" d=\"" << detail::path(fr, outline) << "\" fill=\"none\" stroke=\"#1f77b4\" "
            << "stroke-width=\"2\"/>\n";
    }
    if (disk) {
        svg << "<circle id=\"image-disk\" cx=\"" << detail::num(fr.px(disk->center.real())) << "\" cy=\""
            << detail::num(fr.py(disk->center.imag())) << "\" r=\"" << detail::num(disk->radius * fr.scale())
            << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
        svg << "<path id=\"extremal-image\" d=\"" << detail::path(fr, image)
            << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace starrad::plot
