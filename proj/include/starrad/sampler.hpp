#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "starrad/caratheodory.hpp"
#include "starrad/classes.hpp"
#include "starrad/errors.hpp"
#include "starrad/extremal.hpp"
#include "starrad/regions.hpp"

namespace starrad {

/// Seeded source of uniforms; the bit stream of mt19937_64 is fixed by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

/**
 * Finite Herglotz representation of a Caratheodory function of order alpha:
 *
 *     p(z) = alpha + (1 - alpha) * sum_k w_k (1 + eta_k z) / (1 - eta_k z)
 *
 * with w on the simplex and |eta_k| = 1. Then p(0) = 1 and Re p > alpha on the disk.
 */
struct HerglotzSpec {
    std::vector<double> weights;
    std::vector<Complex> kernels;
    double alpha = 0.0;

    static HerglotzSpec single(Complex kernel, double alpha) { return {{1.0}, {kernel}, alpha}; }

    void validate() const {
        if (weights.empty() || weights.size() != kernels.size())
            throw PreconditionError("HerglotzSpec: weights and kernels must be non-empty and of equal length");
        if (!(alpha >= 0.0 && alpha < 1.0)) throw PreconditionError("HerglotzSpec: alpha must lie in [0, 1)");
        double total = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0)) throw PreconditionError("HerglotzSpec: weights must be non-negative");
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-12) throw PreconditionError("HerglotzSpec: weights must sum to 1");
        for (auto eta : kernels)
            if (std::abs(std::abs(eta) - 1.0) > 1e-12) throw PreconditionError("HerglotzSpec: kernels must be unimodular");
    }
};

[[nodiscard]] inline Complex sample_p(const HerglotzSpec& spec, Complex z) {
    Complex acc{};
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        const Complex ez = spec.kernels[k] * z;
        acc += spec.weights[k] * (1.0 + ez) / (1.0 - ez);
    }
    return spec.alpha + (1.0 - spec.alpha) * acc;
}

[[nodiscard]] inline Complex sample_p_prime(const HerglotzSpec& spec, Complex z) {
    Complex acc{};
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        const Complex d = 1.0 - spec.kernels[k] * z;
        acc += spec.weights[k] * 2.0 * spec.kernels[k] / (d * d);
    }
    return (1.0 - spec.alpha) * acc;
}

/// z p'(z) / p(z)
[[nodiscard]] inline Complex sample_log_derivative(const HerglotzSpec& spec, Complex z) {
    return z * sample_p_prime(spec, z) / sample_p(spec, z);
}

/// Kernel count uniform in {1..5}, flat simplex weights, kernels uniform on the circle.
[[nodiscard]] inline HerglotzSpec random_spec(double alpha, Rng& rng) {
    const int n = rng.uniform_int(1, 5);
    HerglotzSpec spec;
    spec.alpha = alpha;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        const double e = -std::log1p(-rng.uniform());
        spec.weights.push_back(e);
        total += e;
        spec.kernels.push_back(std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform()));
    }
    for (auto& w : spec.weights) w /= total;
    return spec;
}

/// A member of F1, F2 or F3 assembled from its Caratheodory factors.
///
/// Factor order follows factor_shapes(): F1 {p1, p2}, F2 {p1 of order 1/2, p2}, F3 {p}.
class ClassMember {
public:
    ClassMember(ClassId cls, std::vector<HerglotzSpec> specs) : cls_(cls), specs_(std::move(specs)) {
        const auto shapes = factor_shapes(cls_);
        if (specs_.size() != shapes.size())
            throw SpecMismatch("class " + std::string(class_token(cls_)) + " needs " + std::to_string(shapes.size()) +
                               " Herglotz spec(s), got " + std::to_string(specs_.size()));
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            if (specs_[j].alpha != shapes[j].alpha)
                throw SpecMismatch("class " + std::string(class_token(cls_)) + ": factor " + std::to_string(j) +
                                   " must have order " + std::to_string(shapes[j].alpha));
            specs_[j].validate();
        }
    }

    [[nodiscard]] ClassId cls() const noexcept { return cls_; }
    [[nodiscard]] const std::vector<HerglotzSpec>& specs() const noexcept { return specs_; }

    [[nodiscard]] Complex f(Complex z) const {
        Complex out = z + z * z / 2.0;
        const auto shapes = factor_shapes(cls_);
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            const Complex p = sample_p(specs_[j], z);
            out = shapes[j].sign > 0 ? out * p : out / p;
        }
        return out;
    }

    /// zf'/f from the log-derivative sum of the factors plus 2(z+1)/(z+2).
    [[nodiscard]] Complex sf(Complex z) const {
        Complex out = 2.0 * (z + 1.0) / (z + 2.0);
        const auto shapes = factor_shapes(cls_);
        for (std::size_t j = 0; j < shapes.size(); ++j)
            out += static_cast<double>(shapes[j].sign) * sample_log_derivative(specs_[j], z);
        return out;
    }

    /// The companion g of the class definition (F1, F2) or z + z^2/2 itself (F3).
    [[nodiscard]] Complex g(Complex z) const {
        const Complex base = z + z * z / 2.0;
        return cls_ == ClassId::F3 ? base : base * sample_p(specs_.back(), z);
    }

private:
    ClassId cls_;
    std::vector<HerglotzSpec> specs_;
};

[[nodiscard]] inline ClassMember make_member(ClassId cls, std::vector<HerglotzSpec> specs) {
    return ClassMember(cls, std::move(specs));
}

[[nodiscard]] inline ClassMember random_member(ClassId cls, Rng& rng) {
    std::vector<HerglotzSpec> specs;
    for (const auto& shape : factor_shapes(cls)) specs.push_back(random_spec(shape.alpha, rng));
    return ClassMember(cls, std::move(specs));
}

/// The member equal to the class's extremal function f_i.
[[nodiscard]] inline ClassMember extremal_member(ClassId cls) {
    const Complex plus{1.0, 0.0};
    switch (cls) {
        case ClassId::F1: return ClassMember(cls, {HerglotzSpec::single(plus, 0.0), HerglotzSpec::single(plus, 0.0)});
        // p1 = 1/(1+z) is the order-1/2 kernel at eta = -1
        case ClassId::F2: return ClassMember(cls, {HerglotzSpec::single(-plus, 0.5), HerglotzSpec::single(plus, 0.0)});
        case ClassId::F3: return ClassMember(cls, {HerglotzSpec::single(plus, 0.0)});
    }
    throw SpecMismatch("unknown class");
}

struct VerifyOptions {
    int n_samples = 500;
    int n_grid = 256;
    double margin = 0.01;
    std::uint64_t seed = 0;
};

struct Violation {
    enum class Kind { Membership, Halo };
    Kind kind;
    std::size_t member;
    std::size_t grid_index;
    Complex z;
    Complex value;

    friend bool operator<(const Violation& a, const Violation& b) {
        return std::tie(a.member, a.grid_index, a.kind) < std::tie(b.member, b.grid_index, b.kind);
    }
};

struct VerificationReport {
    ClassId cls;
    TargetRegion region;
    double radius;
    VerifyOptions options;
    std::vector<Violation> violations;
    double max_halo_excess = -std::numeric_limits<double>::infinity();
    Complex extremal_probe;
    Complex extremal_value;
    bool extremal_outside = false;

    [[nodiscard]] bool passed() const noexcept { return violations.empty() && extremal_outside; }
};

inline constexpr double kHaloTol = 1e-9;

/**
 * Monte-Carlo check of a claimed radius R.
 *
 * Member 0 is the extremal function, the rest are random. Each is evaluated
 * on n_grid points of |z| = (1 - margin) R, where s_f must lie in the region
 * and in the class's image disk. The extremal is then probed at the contact
 * point pushed out to (1 + margin) R, where s_f must leave the closed region.
 */
[[nodiscard]] inline VerificationReport verify_radius(ClassId cls, const TargetRegion& region, double R,
                                                      const VerifyOptions& opt) {
    if (!(R > 0.0 && R < 1.0)) throw PreconditionError("verify_radius: R must lie in (0, 1)");
    if (!(opt.margin > 0.0 && opt.margin < 1.0)) throw PreconditionError("verify_radius: margin must lie in (0, 1)");
    if (opt.n_samples < 1) throw PreconditionError("verify_radius: n_samples must be at least 1");
    if (opt.n_grid < 64) throw PreconditionError("verify_radius: n_grid must be at least 64");
    if (!((1.0 + opt.margin) * R < 1.0)) throw PreconditionError("verify_radius: (1 + margin) R must stay below 1");

    VerificationReport report;
    report.cls = cls;
    report.region = region;
    report.radius = R;
    report.options = opt;
    const double r = (1.0 - opt.margin) * R;
    const double c = center(r);
    const double halo = halo_radius(cls, r);

    std::vector<Complex> grid;
    grid.reserve(static_cast<std::size_t>(opt.n_grid));
    for (int j = 0; j < opt.n_grid; ++j)
        grid.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / opt.n_grid));

    Rng rng(opt.seed);
    for (int m = 0; m < opt.n_samples; ++m) {
        const ClassMember member = m == 0 ? extremal_member(cls) : random_member(cls, rng);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const Complex s = member.sf(grid[j]);
            const auto idx = static_cast<std::size_t>(m);
            if (!contains(region, s)) report.violations.push_back({Violation::Kind::Membership, idx, j, grid[j], s});
            const double excess = std::abs(s - c) - halo;
            report.max_halo_excess = std::max(report.max_halo_excess, excess);
            if (excess > kHaloTol) report.violations.push_back({Violation::Kind::Halo, idx, j, grid[j], s});
        }
    }
    std::sort(report.violations.begin(), report.violations.end());

    const double probe = (1.0 + opt.margin) * R;
    report.extremal_probe = threshold(region).side == Side::Left ? Complex{-probe, 0.0} : Complex{probe, 0.0};
    report.extremal_value = eval_sf(extremal_for(cls), report.extremal_probe);
    report.extremal_outside = classify(region, report.extremal_value) == Location::Outside;
    return report;
}

}  // namespace starrad
