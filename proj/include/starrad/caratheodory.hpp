#pragma once

#include <complex>

#include "starrad/errors.hpp"

namespace starrad {

using Complex = std::complex<double>;

struct Disk {
    Complex center;
    double radius = 0.0;

    [[nodiscard]] bool contains(Complex w) const noexcept { return std::abs(w - center) < radius; }
};

/**
 * Sharp bound on |z p'(z)/p(z)| over |z| = r for p(0) = 1, Re p > alpha:
 *
 *     2 (1 - alpha) r / ((1 - r) (1 + (1 - 2 alpha) r))
 */
[[nodiscard]] inline double log_deriv_bound(double alpha, double r) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("log_deriv_bound: alpha must lie in [0, 1)");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("log_deriv_bound: r must lie in [0, 1)");
    return 2.0 * (1.0 - alpha) * r / ((1.0 - r) * (1.0 + (1.0 - 2.0 * alpha) * r));
}

/// Image of the closed disk |z| <= r under w(z) = (z + 1)/(z + 2).
[[nodiscard]] inline Disk mobius_image_disk(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("mobius_image_disk: r must lie in [0, 1]");
    const double d = 4.0 - r * r;
    return {Complex{(2.0 - r * r) / d, 0.0}, r / d};
}

}  // namespace starrad
