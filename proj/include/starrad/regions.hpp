#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starrad/caratheodory.hpp"
#include "starrad/errors.hpp"

namespace starrad {

enum class RegionKind { HalfPlane, Lemniscate, Parabola, Exponential, Sine, Lune, Rational, Cardioid };

inline constexpr std::array<RegionKind, 8> kAllRegionKinds = {
    RegionKind::HalfPlane, RegionKind::Lemniscate, RegionKind::Parabola, RegionKind::Exponential,
    RegionKind::Sine,      RegionKind::Lune,       RegionKind::Rational, RegionKind::Cardioid};

/// The constant k = sqrt(2) + 1 of the rational target.
inline constexpr double kRationalK = std::numbers::sqrt2 + 1.0;

/// Width of the band around a region boundary that counts as "on the boundary".
inline constexpr double kBoundaryBand = 1e-9;

/// Target region of a starlikeness property. Only HalfPlane reads `alpha`.
struct TargetRegion {
    RegionKind kind = RegionKind::HalfPlane;
    double alpha = 0.0;

    static TargetRegion half_plane(double alpha) {
        if (!(alpha >= 0.0 && alpha < 1.0)) throw PreconditionError("half-plane order alpha must lie in [0, 1)");
        return {RegionKind::HalfPlane, alpha};
    }
    static constexpr TargetRegion of(RegionKind kind) noexcept { return {kind, 0.0}; }

    friend bool operator==(const TargetRegion&, const TargetRegion&) = default;
};

[[nodiscard]] constexpr std::string_view region_token(RegionKind kind) noexcept {
    switch (kind) {
        case RegionKind::HalfPlane: return "halfplane";
        case RegionKind::Lemniscate: return "lemniscate";
        case RegionKind::Parabola: return "parabola";
        case RegionKind::Exponential: return "exponential";
        case RegionKind::Sine: return "sine";
        case RegionKind::Lune: return "lune";
        case RegionKind::Rational: return "rational";
        case RegionKind::Cardioid: return "cardioid";
    }
    return "?";
}

[[nodiscard]] inline std::optional<RegionKind> parse_region_kind(std::string_view token) noexcept {
    for (auto kind : kAllRegionKinds)
        if (region_token(kind) == token) return kind;
    return std::nullopt;
}

// Boundary-generating maps of the unit disk.

/// sqrt(1 + z): lemniscate of Bernoulli, right loop.
[[nodiscard]] inline Complex phi_lemniscate(Complex z) { return std::sqrt(1.0 + z); }
[[nodiscard]] inline Complex phi_exponential(Complex z) { return std::exp(z); }
[[nodiscard]] inline Complex phi_cardioid(Complex z) { return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z; }
[[nodiscard]] inline Complex phi_sine(Complex z) { return 1.0 + std::sin(z); }
[[nodiscard]] inline Complex phi_lune(Complex z) { return z + std::sqrt(1.0 + z * z); }
[[nodiscard]] inline Complex phi_rational(Complex z) {
    constexpr double k = kRationalK;
    return 1.0 + (z * k + z * z) / (k * k - k * z);
}

enum class Side { Left, Right };

/// Boundary value the radius equation solves against.
///
/// Left: h(R) = tau, contact at z = -R. Right: H(R) = tau, contact at z = +R.
struct Threshold {
    Side side;
    double tau;
};

[[nodiscard]] inline Threshold threshold(const TargetRegion& region) noexcept {
    using std::numbers::sqrt2;
    switch (region.kind) {
        case RegionKind::HalfPlane: return {Side::Left, region.alpha};
        case RegionKind::Lemniscate: return {Side::Right, sqrt2};
        case RegionKind::Parabola: return {Side::Left, 0.5};
        case RegionKind::Exponential: return {Side::Left, 1.0 / std::numbers::e};
        case RegionKind::Sine: return {Side::Left, 1.0 - std::sin(1.0)};
        case RegionKind::Lune: return {Side::Left, sqrt2 - 1.0};
        case RegionKind::Rational: return {Side::Left, 2.0 * (sqrt2 - 1.0)};
        case RegionKind::Cardioid: return {Side::Left, 1.0 / 3.0};
    }
    return {Side::Left, 0.0};
}

/// Closed loop phi(e^{it}), t in [0, 2 pi]; points.front() == points.back().
struct BoundaryPolyline {
    std::vector<Complex> points;
};

[[nodiscard]] inline bool has_polyline_boundary(RegionKind kind) noexcept {
    return kind == RegionKind::Sine || kind == RegionKind::Cardioid || kind == RegionKind::Rational;
}

[[nodiscard]] inline BoundaryPolyline boundary_polyline(const TargetRegion& region, int n) {
    if (n < 64) throw PreconditionError("boundary_polyline: n must be at least 64");
    Complex (*phi)(Complex) = nullptr;
    switch (region.kind) {
        case RegionKind::Sine: phi = phi_sine; break;
        case RegionKind::Cardioid: phi = phi_cardioid; break;
        case RegionKind::Rational: phi = phi_rational; break;
        default:
            throw UnsupportedRegion("boundary_polyline: region '" + std::string(region_token(region.kind)) +
                                    "' has a closed-form predicate");
    }
    BoundaryPolyline out;
    out.points.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        out.points.push_back(phi(std::polar(1.0, t)));
    }
    out.points.push_back(out.points.front());
    return out;
}

namespace detail {

inline constexpr int kMembershipPolylinePoints = 4096;

/// Winding number of a closed loop about w; nonzero means inside.
[[nodiscard]] inline int winding_number(const std::vector<Complex>& loop, Complex w) noexcept {
    auto is_left = [](Complex a, Complex b, Complex p) {
        return (b.real() - a.real()) * (p.imag() - a.imag()) - (p.real() - a.real()) * (b.imag() - a.imag());
    };
    int wn = 0;
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
        const Complex a = loop[i];
        const Complex b = loop[i + 1];
        if (a.imag() <= w.imag()) {
            if (b.imag() > w.imag() && is_left(a, b, w) > 0.0) ++wn;
        } else if (b.imag() <= w.imag() && is_left(a, b, w) < 0.0) {
            --wn;
        }
    }
    return wn;
}

[[nodiscard]] inline double distance_to_loop(const std::vector<Complex>& loop, Complex w) noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
        const Complex a = loop[i];
        const Complex d = loop[i + 1] - a;
        const double len2 = std::norm(d);
        double t = len2 > 0.0 ? ((w.real() - a.real()) * d.real() + (w.imag() - a.imag()) * d.imag()) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, std::norm(w - (a + t * d)));
    }
    return std::sqrt(best);
}

/// Polyline plus the cheap accept/reject data membership queries use.
struct PolylineIndex {
    BoundaryPolyline line;
    double inscribed = 0.0;  // distance from the interior point 1 to the loop
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;

    explicit PolylineIndex(const TargetRegion& region)
        : line(boundary_polyline(region, kMembershipPolylinePoints)) {
        inscribed = distance_to_loop(line.points, Complex{1.0, 0.0});
        x_min = y_min = std::numeric_limits<double>::infinity();
        x_max = y_max = -std::numeric_limits<double>::infinity();
        for (auto p : line.points) {
            x_min = std::min(x_min, p.real());
            x_max = std::max(x_max, p.real());
            y_min = std::min(y_min, p.imag());
            y_max = std::max(y_max, p.imag());
        }
    }
};

[[nodiscard]] inline const PolylineIndex& polyline_index(RegionKind kind) {
    static const PolylineIndex sine(TargetRegion::of(RegionKind::Sine));
    static const PolylineIndex cardioid(TargetRegion::of(RegionKind::Cardioid));
    static const PolylineIndex rational(TargetRegion::of(RegionKind::Rational));
    switch (kind) {
        case RegionKind::Sine: return sine;
        case RegionKind::Cardioid: return cardioid;
        case RegionKind::Rational: return rational;
        default: throw UnsupportedRegion("no membership polyline for this region");
    }
}

}  // namespace detail

enum class Location { Inside, Boundary, Outside };

/**
 * Where w sits relative to the open region.
 *
 * Points within kBoundaryBand of the boundary (measured on the defining
 * inequality, or as Euclidean distance for polyline regions) classify as
 * Boundary. Every region lives in the right half-plane, so Re w <= 0 is
 * Outside for all but the half-plane itself.
 */
[[nodiscard]] inline Location classify(const TargetRegion& region, Complex w) {
    auto by_margin = [](double g) {
        if (g > kBoundaryBand) return Location::Inside;
        if (g < -kBoundaryBand) return Location::Outside;
        return Location::Boundary;
    };
    if (region.kind == RegionKind::Exponential && w == Complex{}) throw DomainError("log is undefined at w = 0");
    if (region.kind == RegionKind::HalfPlane) return by_margin(w.real() - region.alpha);
    if (w.real() <= 0.0) return Location::Outside;

    switch (region.kind) {
        case RegionKind::Lemniscate: return by_margin(1.0 - std::abs(w * w - 1.0));
        case RegionKind::Parabola: return by_margin(w.real() - std::abs(w - 1.0));
        case RegionKind::Exponential: return by_margin(1.0 - std::abs(std::log(w)));
        case RegionKind::Lune: return by_margin(2.0 * std::abs(w) - std::abs(w * w - 1.0));
        case RegionKind::Sine:
        case RegionKind::Cardioid:
        case RegionKind::Rational: {
            const auto& idx = detail::polyline_index(region.kind);
            if (std::abs(w - 1.0) < idx.inscribed - kBoundaryBand) return Location::Inside;
            if (w.real() < idx.x_min - kBoundaryBand || w.real() > idx.x_max + kBoundaryBand ||
                w.imag() < idx.y_min - kBoundaryBand || w.imag() > idx.y_max + kBoundaryBand)
                return Location::Outside;
            if (detail::distance_to_loop(idx.line.points, w) <= kBoundaryBand) return Location::Boundary;
            return detail::winding_number(idx.line.points, w) != 0 ? Location::Inside : Location::Outside;
        }
        case RegionKind::HalfPlane: break;
    }
    return Location::Outside;
}

/// Strict membership in the open region; boundary points are not members.
[[nodiscard]] inline bool contains(const TargetRegion& region, Complex w) {
    return classify(region, w) == Location::Inside;
}

/// Real centers a for which a disk-containment lemma is stated.
struct ValidityInterval {
    double lo;
    bool lo_closed;
    double hi;
    bool hi_closed;

    [[nodiscard]] bool contains(double a) const noexcept {
        const bool above = lo_closed ? a >= lo : a > lo;
        const bool below = hi_closed ? a <= hi : a < hi;
        return above && below;
    }
};

[[nodiscard]] inline ValidityInterval disk_lemma_interval(const TargetRegion& region) noexcept {
    using std::numbers::e;
    using std::numbers::sqrt2;
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (region.kind) {
        case RegionKind::HalfPlane: return {region.alpha, false, inf, false};
        case RegionKind::Lemniscate: return {2.0 * sqrt2 / 3.0, true, sqrt2, false};
        case RegionKind::Parabola: return {0.5, false, 1.5, false};
        case RegionKind::Exponential: return {1.0 / e, false, (e + 1.0 / e) / 2.0, true};
        case RegionKind::Sine: return {1.0 - std::sin(1.0), false, 1.0 + std::sin(1.0), false};
        case RegionKind::Lune: return {sqrt2 - 1.0, false, sqrt2 + 1.0, false};
        case RegionKind::Rational: return {2.0 * (sqrt2 - 1.0), false, sqrt2, true};
        case RegionKind::Cardioid: return {1.0 / 3.0, false, 5.0 / 3.0, false};
    }
    return {0.0, false, 0.0, false};
}

/// Largest radius of a disk centered at real a that the lemma places inside the region.
[[nodiscard]] inline double disk_lemma_radius(const TargetRegion& region, double a) noexcept {
    using std::numbers::sqrt2;
    switch (region.kind) {
        case RegionKind::HalfPlane: return a - region.alpha;
        case RegionKind::Lemniscate: return sqrt2 - a;
        case RegionKind::Parabola: return a - 0.5;
        case RegionKind::Exponential: return a - 1.0 / std::numbers::e;
        case RegionKind::Sine: return std::sin(1.0) - std::abs(a - 1.0);
        case RegionKind::Lune: return 1.0 - std::abs(sqrt2 - a);
        case RegionKind::Rational: return a - 2.0 * (sqrt2 - 1.0);
        case RegionKind::Cardioid: return a - 1.0 / 3.0;
    }
    return 0.0;
}

/// True iff the disk |w - a| < rho is covered by the region's containment lemma.
[[nodiscard]] inline bool disk_fits(const TargetRegion& region, double a, double rho) noexcept {
    return disk_lemma_interval(region).contains(a) && rho < disk_lemma_radius(region, a);
}

/**
 * Drawable outline of any region, for plotting.
 *
 * Closed loops for the bounded regions; the parabola and half-plane are
 * unbounded and come back as open curves clipped to |Im w| <= extent.
 */
[[nodiscard]] inline std::vector<Complex> region_outline(const TargetRegion& region, int n, double extent = 3.0) {
    if (has_polyline_boundary(region.kind)) return boundary_polyline(region, n).points;
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double s = static_cast<double>(j) / static_cast<double>(n);
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * s);
        switch (region.kind) {
            case RegionKind::HalfPlane: out.emplace_back(region.alpha, extent * (2.0 * s - 1.0)); break;
            case RegionKind::Parabola: {
                const double v = extent * (2.0 * s - 1.0);
                out.emplace_back((1.0 + v * v) / 2.0, v);
                break;
            }
            case RegionKind::Lemniscate: out.push_back(phi_lemniscate(z)); break;
            case RegionKind::Exponential: out.push_back(phi_exponential(z)); break;
            case RegionKind::Lune: out.push_back(phi_lune(z)); break;
            default: break;
        }
    }
    return out;
}

}  // namespace starrad
