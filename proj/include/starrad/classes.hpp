#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "starrad/caratheodory.hpp"
#include "starrad/errors.hpp"
#include "starrad/poly.hpp"

namespace starrad {

/// The three function classes built on the starlike function z + z^2/2.
///
/// F1: Re(f/g) > 0 and Re(g/(z + z^2/2)) > 0 for some g.
/// F2: |f/g - 1| < 1 and Re(g/(z + z^2/2)) > 0 for some g.
/// F3: Re(f/(z + z^2/2)) > 0.
enum class ClassId { F1, F2, F3 };

inline constexpr std::array<ClassId, 3> kAllClasses = {ClassId::F1, ClassId::F2, ClassId::F3};

[[nodiscard]] constexpr std::string_view class_token(ClassId c) noexcept {
    switch (c) {
        case ClassId::F1: return "f1";
        case ClassId::F2: return "f2";
        case ClassId::F3: return "f3";
    }
    return "?";
}

[[nodiscard]] inline std::optional<ClassId> parse_class(std::string_view token) noexcept {
    for (auto c : kAllClasses)
        if (class_token(c) == token) return c;
    return std::nullopt;
}

/// A Caratheodory factor of a class member: order alpha, entering s_f with `sign`.
struct FactorShape {
    double alpha;
    int sign;
};

/// F1 = p1 p2 (z + z^2/2); F2 = (p2 / p1)(z + z^2/2) with p1 of order 1/2; F3 = p (z + z^2/2).
[[nodiscard]] inline std::span<const FactorShape> factor_shapes(ClassId c) noexcept {
    static constexpr std::array<FactorShape, 2> f1{{{0.0, +1}, {0.0, +1}}};
    static constexpr std::array<FactorShape, 2> f2{{{0.5, -1}, {0.0, +1}}};
    static constexpr std::array<FactorShape, 1> f3{{{0.0, +1}}};
    switch (c) {
        case ClassId::F1: return f1;
        case ClassId::F2: return f2;
        case ClassId::F3: return f3;
    }
    return {};
}

namespace detail {
inline void check_unit_radius(double r, const char* what) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError(std::string(what) + ": r must lie in [0, 1)");
}
}  // namespace detail

/// Center of the disk holding zf'/f over |z| <= r; the same for every class.
[[nodiscard]] inline double center(double r) {
    detail::check_unit_radius(r, "center");
    return (4.0 - 2.0 * r * r) / (4.0 - r * r);
}

[[nodiscard]] inline double halo_radius(ClassId c, double r) {
    detail::check_unit_radius(r, "halo_radius");
    const double d = (1.0 - r * r) * (4.0 - r * r);
    switch (c) {
        case ClassId::F1: return 6.0 * r * (3.0 - r * r) / d;
        case ClassId::F2: return r * (14.0 + 4.0 * r - 5.0 * r * r - r * r * r) / d;
        case ClassId::F3: return 2.0 * r * (5.0 - 2.0 * r * r) / d;
    }
    return 0.0;
}

/// Numerator of h over the common denominator (2 - r)(1 - r^2).
[[nodiscard]] inline Polynomial lower_numerator(ClassId c) {
    switch (c) {
        case ClassId::F1: return {2.0, -10.0, 2.0, 2.0};
        case ClassId::F2: return {2.0, -8.0, -1.0, 3.0};
        case ClassId::F3: return {2.0, -6.0, 0.0, 2.0};
    }
    return {};
}

/// Numerator of H over the common denominator (2 + r)(1 - r^2).
///
/// For F2 this is (center + halo) with the shared factor (2 - r) cancelled.
[[nodiscard]] inline Polynomial upper_numerator(ClassId c) {
    switch (c) {
        case ClassId::F1: return {2.0, 10.0, 2.0, -2.0};
        case ClassId::F2: return {2.0, 8.0, 3.0, -1.0};
        case ClassId::F3: return {2.0, 6.0, 0.0, -2.0};
    }
    return {};
}

/// (2 - r)(1 - r^2)
[[nodiscard]] inline Polynomial lower_denominator() { return {2.0, -1.0, -2.0, 1.0}; }
/// (2 + r)(1 - r^2)
[[nodiscard]] inline Polynomial upper_denominator() { return {2.0, 1.0, -2.0, -1.0}; }

/// Lower envelope of Re(zf'/f) over |z| <= r, i.e. center - halo.
[[nodiscard]] inline double h(ClassId c, double r) {
    detail::check_unit_radius(r, "h");
    return lower_numerator(c)(r) / lower_denominator()(r);
}

/// Right-hand extreme of the image disk, center + halo.
[[nodiscard]] inline double H(ClassId c, double r) {
    detail::check_unit_radius(r, "H");
    return upper_numerator(c)(r) / upper_denominator()(r);
}

[[nodiscard]] inline Disk image_disk(ClassId c, double r) { return {Complex{center(r), 0.0}, halo_radius(c, r)}; }

}  // namespace starrad
