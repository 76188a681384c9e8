#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starrad/errors.hpp"

namespace starrad {

/// Real polynomial with ascending coefficients: coeffs()[k] multiplies x^k.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> c) : coeffs_(c) { trim(); }
    explicit Polynomial(std::vector<double> c) : coeffs_(std::move(c)) { trim(); }

    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; the zero polynomial reports -1.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k, zero past the degree.
    [[nodiscard]] double operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    [[nodiscard]] double operator()(double x) const noexcept {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

    friend Polynomial operator*(double s, const Polynomial& p) {
        std::vector<double> out(p.coeffs_);
        for (auto& c : out) c *= s;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    }

    std::vector<double> coeffs_;
};

/// Horner evaluation.
[[nodiscard]] inline double eval(const Polynomial& p, double x) noexcept { return p(x); }

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr double kRootScanStep = 1e-3;

/**
 * Smallest root of p on the open interval (0, hi).
 *
 * Scans a uniform grid of step 1e-3 for the first sign change, then bisects
 * the bracketing cell until it is narrower than tol. A root sitting exactly
 * at 0 is not positive and is skipped. Assumes the smallest root is simple
 * and separated from the next root by more than one grid step.
 */
[[nodiscard]] inline double smallest_positive_root(const Polynomial& p, double hi = 1.0,
                                                   double tol = kDefaultRootTol) {
    if (!(hi > 0.0 && hi <= 1.0)) throw PreconditionError("smallest_positive_root: hi must lie in (0, 1]");
    if (!(tol > 0.0)) throw PreconditionError("smallest_positive_root: tol must be positive");

    const auto steps = static_cast<std::size_t>(std::ceil(hi / kRootScanStep));
    double left = 0.0;
    double f_left = p(0.0);
    for (std::size_t i = 1; i <= steps; ++i) {
        const double right = std::min(hi, static_cast<double>(i) * kRootScanStep);
        const double f_right = p(right);
        if (f_right == 0.0 && right < hi) return right;
        if (f_left != 0.0 && (f_left < 0.0) != (f_right < 0.0) && f_right != 0.0) {
            double a = left;
            double b = right;
            double fa = f_left;
            while (b - a >= tol) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                const double fm = p(mid);
                if (fm == 0.0) return mid;
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        // a zero at the left end (only possible at x = 0) carries no sign
        if (f_right != 0.0) f_left = f_right;
        left = right;
    }
    throw NoRootInInterval("no sign change of the polynomial on (0, " + std::to_string(hi) + ")");
}

}  // namespace starrad
