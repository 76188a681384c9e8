// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "starrad/starrad.hpp"

using namespace starrad;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string note) {
        pass = false;
        notes.push_back(std::move(note));
    }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::string label(const RadiusResult& r) {
    return std::string(class_token(r.query.cls)) + "/" + std::string(region_token(r.query.region.kind));
}

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= time_limit_s) out.fail(fmt("runtime %.3f s exceeds %.0f s", secs, time_limit_s));
    std::printf("[%s] %d. %s (%.3f s)\n", out.pass ? "PASS" : "FAIL", id, name, secs);
    for (const auto& n : out.notes) std::printf("       %s\n", n.c_str());
    failures += out.pass ? 0 : 1;
}

std::map<std::string, double> load_reference() {
    std::map<std::string, double> ref;
    std::ifstream in(STARRAD_REFERENCE_CSV);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cls, region, value;
        std::getline(ss, cls, ',');
        std::getline(ss, region, ',');
        std::getline(ss, value, ',');
        ref[cls + "/" + region] = std::stod(value);
    }
    return ref;
}

std::vector<RadiusResult> sharp_rows() {
    std::vector<RadiusResult> rows;
    for (auto& r : radius_table())
        if (r.sharp) rows.push_back(r);
    return rows;
}

}  // namespace

int main() {
    const auto sharp = sharp_rows();
    constexpr std::uint64_t kSeed = 20240601;

    criterion(1, "radius regression against printed values (5e-5)", 1.0, [] {
        Outcome o;
        const auto ref = load_reference();
        if (ref.size() != 23) o.fail("reference table has " + std::to_string(ref.size()) + " rows, expected 23");
        const auto table = radius_table();
        for (const auto& [key, printed] : ref) {
            bool found = false;
            for (const auto& r : table) {
                if (label(r) != key) continue;
                found = true;
                const double diff = std::abs(r.radius - printed);
                if (diff > 5e-5) o.fail(key + fmt(": computed %.6f, printed %.6f, |diff| = %.2e", r.radius, printed, diff));
            }
            if (!found) o.fail(key + ": missing from table");
        }
        return o;
    });

    criterion(2, "image-disk algebraic identities (1e-12)", 1.0, [] {
        Outcome o;
        double worst = 0.0;
        for (auto c : kAllClasses)
            for (int i = 0; i < 1000; ++i) {
                const double r = 0.95 * i / 999.0;
                const double ctr = center(r), halo = halo_radius(c, r);
                double composed = 2.0 * mobius_image_disk(r).radius;
                for (const auto& f : factor_shapes(c)) composed += log_deriv_bound(f.alpha, r);
                worst = std::max({worst, std::abs(ctr - halo - h(c, r)), std::abs(ctr + halo - H(c, r)),
                                  std::abs(halo - composed)});
            }
        if (worst > 1e-12) o.fail(fmt("worst discrepancy %.3e", worst));
        return o;
    });

    criterion(3, "sharpness certificates at the contact point (1e-9)", 1.0, [&] {
        Outcome o;
        if (sharp.size() != 23) o.fail("expected 23 sharp entries, got " + std::to_string(sharp.size()));
        for (const auto& r : sharp) {
            const Complex s = eval_sf(extremal_for(r.query.cls), r.contact);
            const double v = r.threshold.side == Side::Left ? s.real() : std::abs(s);
            if (std::abs(v - r.threshold.tau) > 1e-9) o.fail(label(r) + fmt(": |value - tau| = %.3e", std::abs(v - r.threshold.tau)));
            if (contains(r.query.region, s)) o.fail(label(r) + ": contact value reported inside the open region");
        }
        return o;
    });

    criterion(4, "Monte-Carlo corroboration (500 members x 256 points, margin 0.01)", 60.0, [&] {
        Outcome o;
        for (const auto& r : sharp) {
            const auto rep = verify_radius(r.query.cls, r.query.region, r.radius, {500, 256, 0.01, kSeed});
            std::size_t membership = 0;
            for (const auto& v : rep.violations) membership += v.kind == Violation::Kind::Membership;
            if (membership) o.fail(label(r) + ": " + std::to_string(membership) + " membership violations");
            if (rep.max_halo_excess > 1e-9) o.fail(label(r) + fmt(": halo excess %.3e", rep.max_halo_excess));
        }
        return o;
    });

    criterion(5, "extremal leaves the closed region at 1.01 x contact", 1.0, [&] {
        Outcome o;
        for (const auto& r : sharp) {
            const Complex probe = 1.01 * r.contact;
            const Complex s = eval_sf(extremal_for(r.query.cls), probe);
            if (classify(r.query.region, s) != Location::Outside) o.fail(label(r) + ": probe value not outside");
        }
        return o;
    });

    criterion(6, "monotone envelopes and radii decreasing in threshold", 1.0, [] {
        Outcome o;
        for (auto c : kAllClasses) {
            for (int i = 0; i < 999; ++i) {
                const double r0 = 0.95 * i / 999.0, r1 = 0.95 * (i + 1) / 999.0;
                if (!(h(c, r1) < h(c, r0))) o.fail(std::string(class_token(c)) + fmt(": h not decreasing at %.4f", r0));
                if (!(H(c, r1) > H(c, r0))) o.fail(std::string(class_token(c)) + fmt(": H not increasing at %.4f", r0));
            }
            std::vector<std::pair<double, double>> pts;
            for (auto k : kAllRegionKinds) {
                if (k == RegionKind::Lemniscate) continue;
                const auto region = TargetRegion::of(k);
                pts.emplace_back(threshold(region).tau, solve_radius({c, region}).radius);
            }
            std::sort(pts.begin(), pts.end());
            for (std::size_t i = 1; i < pts.size(); ++i)
                if (!(pts[i].second < pts[i - 1].second))
                    o.fail(std::string(class_token(c)) + fmt(": radius not decreasing between tau %.4f and %.4f",
                                                             pts[i - 1].first, pts[i].first));
        }
        return o;
    });

    criterion(7, "extremal derivative vanishes at -R_S (1e-8)", 1.0, [] {
        Outcome o;
        for (auto c : kAllClasses) {
            const double R = solve_radius({c, TargetRegion::half_plane(0.0)}).radius;
            const double d = std::abs(eval_fprime(extremal_for(c), -R));
            if (d > 1e-8) o.fail(std::string(class_token(c)) + fmt(": |f'(-R)| = %.3e", d));
        }
        return o;
    });

    criterion(8, "log-derivative sum matches finite-difference zf'/f (1e-6)", 1.0, [] {
        Outcome o;
        Rng rng(kSeed);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto c = kAllClasses[static_cast<std::size_t>(i % 3)];
            const auto member = random_member(c, rng);
            Complex z;
            do {
                z = std::polar(0.5 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
            } while (std::abs(z) < 1e-3);
            const Complex fd = z * testing::central_diff([&](Complex w) { return member.f(w); }, z) / member.f(z);
            worst = std::max(worst, std::abs(fd - member.sf(z)));
        }
        if (worst > 1e-6) o.fail(fmt("worst discrepancy %.3e", worst));
        return o;
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
