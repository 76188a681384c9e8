#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starrad/classes.hpp"
#include "starrad/extremal.hpp"
#include "starrad/poly.hpp"
#include "starrad/regions.hpp"

namespace starrad {

struct RadiusQuery {
    ClassId cls;
    TargetRegion region;

    /// Every pair is sharp except the lemniscate radius of F2, which is only a lower bound.
    [[nodiscard]] bool sharp() const noexcept {
        return !(cls == ClassId::F2 && region.kind == RegionKind::Lemniscate);
    }
};

struct RadiusResult {
    RadiusQuery query;
    Threshold threshold;
    double radius = 0.0;
    Polynomial equation;
    double residual = 0.0;  // |tau - envelope(radius)|
    Complex contact;        // -radius for left thresholds, +radius on the right
    bool sharp = true;
    std::optional<std::string> warning;
};

inline constexpr double kCertificateTol = 1e-9;

/// Clears the denominator of h(R) = tau (left) or H(R) = tau (right).
[[nodiscard]] inline Polynomial radius_equation(const RadiusQuery& q) {
    const auto [side, tau] = threshold(q.region);
    if (side == Side::Left) return lower_numerator(q.cls) - tau * lower_denominator();
    return upper_numerator(q.cls) - tau * upper_denominator();
}

/// Value of the extremal's s_f at the contact point that must equal tau.
[[nodiscard]] inline double contact_value(ClassId c, Side side, Complex contact) {
    const Complex s = eval_sf(extremal_for(c), contact);
    return side == Side::Left ? s.real() : std::abs(s);
}

[[nodiscard]] inline RadiusResult solve_radius(const RadiusQuery& q, double tol = kDefaultRootTol) {
    if (q.region.kind == RegionKind::HalfPlane && !(q.region.alpha >= 0.0 && q.region.alpha < 1.0))
        throw PreconditionError("half-plane order alpha must lie in [0, 1)");

    RadiusResult out;
    out.query = q;
    out.threshold = threshold(q.region);
    out.equation = radius_equation(q);
    out.radius = smallest_positive_root(out.equation, 1.0, tol);
    out.sharp = q.sharp();

    const auto [side, tau] = out.threshold;
    if (side == Side::Left) {
        out.residual = std::abs(tau - h(q.cls, out.radius));
        out.contact = {-out.radius, 0.0};
    } else {
        out.residual = std::abs(tau - H(q.cls, out.radius));
        out.contact = {out.radius, 0.0};
    }

    if (out.sharp) {
        const double gap = std::abs(contact_value(q.cls, side, out.contact) - tau);
        if (gap > kCertificateTol)
            throw std::logic_error("sharpness certificate failed for " + std::string(class_token(q.cls)) + "/" +
                                   std::string(region_token(q.region.kind)));
    } else {
        out.warning = "radius is a lower bound only; no extremal function is known to attain it for class " +
                      std::string(class_token(q.cls));
    }
    return out;
}

/// All radii of the three classes: eight targets each, order alpha = 0 for the half-plane.
[[nodiscard]] inline std::vector<RadiusResult> radius_table(double tol = kDefaultRootTol) {
    std::vector<RadiusResult> rows;
    rows.reserve(kAllClasses.size() * kAllRegionKinds.size());
    for (auto c : kAllClasses)
        for (auto kind : kAllRegionKinds) rows.push_back(solve_radius({c, TargetRegion::of(kind)}, tol));
    return rows;
}

}  // namespace starrad
