#pragma once

#include <complex>

#include "starrad/caratheodory.hpp"
#include "starrad/classes.hpp"
#include "starrad/errors.hpp"

namespace starrad {

/// Extremal member of each class; E_i belongs to F_i.
enum class ExtremalId { E1, E2, E3 };

[[nodiscard]] constexpr ExtremalId extremal_for(ClassId c) noexcept {
    switch (c) {
        case ClassId::F1: return ExtremalId::E1;
        case ClassId::F2: return ExtremalId::E2;
        case ClassId::F3: return ExtremalId::E3;
    }
    return ExtremalId::E1;
}

namespace detail {
inline void check_not_one(Complex z, const char* what) {
    if (z == Complex{1.0, 0.0}) throw PoleError(std::string(what) + ": pole at z = 1");
}
}  // namespace detail

/// f1 = (1+z)^2 (z + z^2/2) / (1-z)^2, f2 = (1+z)^2 (z + z^2/2) / (1-z), f3 = (1+z)(z + z^2/2) / (1-z).
[[nodiscard]] inline Complex eval_f(ExtremalId id, Complex z) {
    detail::check_not_one(z, "eval_f");
    const Complex base = z + z * z / 2.0;
    const Complex up = 1.0 + z;
    const Complex down = 1.0 - z;
    switch (id) {
        case ExtremalId::E1: return up * up * base / (down * down);
        case ExtremalId::E2: return up * up * base / down;
        case ExtremalId::E3: return up * base / down;
    }
    return {};
}

[[nodiscard]] inline Complex eval_fprime(ExtremalId id, Complex z) {
    detail::check_not_one(z, "eval_fprime");
    const Complex z2 = z * z;
    const Complex z3 = z2 * z;
    const Complex down = 1.0 - z;
    switch (id) {
        case ExtremalId::E1: return (1.0 + z) * (1.0 + 5.0 * z + z2 - z3) / (down * down * down);
        case ExtremalId::E2: return (1.0 + z) * (2.0 + 8.0 * z - z2 - 3.0 * z3) / (2.0 * down * down);
        case ExtremalId::E3: return (1.0 + 3.0 * z - z3) / (down * down);
    }
    return {};
}

/// s_f = z f'(z) / f(z), with the removable singularity at 0 filled in as 1.
[[nodiscard]] inline Complex eval_sf(ExtremalId id, Complex z) {
    if (z == Complex{1.0, 0.0} || z == Complex{-1.0, 0.0}) throw PoleError("eval_sf: pole at z = +-1");
    if (z == Complex{}) return {1.0, 0.0};
    const Complex z2 = z * z;
    const Complex z3 = z2 * z;
    const Complex den = (2.0 + z) * (1.0 - z2);
    switch (id) {
        case ExtremalId::E1: return 2.0 * (1.0 + 5.0 * z + z2 - z3) / den;
        case ExtremalId::E2: return (2.0 + 8.0 * z - z2 - 3.0 * z3) / den;
        case ExtremalId::E3: return 2.0 * (1.0 + 3.0 * z - z3) / den;
    }
    return {};
}

}  // namespace starrad
