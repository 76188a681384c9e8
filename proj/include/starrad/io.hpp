#pragma once

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "starrad/radius.hpp"
#include "starrad/sampler.hpp"

namespace starrad::io {

/// Printed numbers carry 12 significant digits.
[[nodiscard]] inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// x rounded to 12 significant digits, so JSON dumps the same digits as fmt().
[[nodiscard]] inline double round12(double x) { return std::stod(fmt(x)); }

[[nodiscard]] inline nlohmann::ordered_json to_json(const RadiusResult& r) {
    nlohmann::ordered_json j;
    j["class"] = class_token(r.query.cls);
    j["region"] = region_token(r.query.region.kind);
    if (r.query.region.kind == RegionKind::HalfPlane) j["alpha"] = round12(r.query.region.alpha);
    j["tau"] = round12(r.threshold.tau);
    j["radius"] = round12(r.radius);
    auto coeffs = nlohmann::ordered_json::array();
    for (double c : r.equation.coeffs()) coeffs.push_back(round12(c));
    j["coeffs"] = coeffs;
    j["residual"] = round12(r.residual);
    j["sharp"] = r.sharp;
    j["contact_re"] = round12(r.contact.real());
    j["contact_im"] = round12(r.contact.imag());
    if (r.warning) j["warning"] = *r.warning;
    return j;
}

[[nodiscard]] inline nlohmann::ordered_json to_json(const std::vector<RadiusResult>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

inline constexpr const char* kCsvHeader = "class,region,tau,radius,sharp,c3,c2,c1,c0,residual";

inline void write_csv(std::ostream& os, const std::vector<RadiusResult>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << class_token(r.query.cls) << ',' << region_token(r.query.region.kind) << ',' << fmt(r.threshold.tau) << ','
           << fmt(r.radius) << ',' << (r.sharp ? "true" : "false");
        for (int k = 3; k >= 0; --k) os << ',' << fmt(r.equation[static_cast<std::size_t>(k)]);
        os << ',' << fmt(r.residual) << '\n';
    }
}

inline void write_table(std::ostream& os, const std::vector<RadiusResult>& rows) {
    auto poly_text = [](const Polynomial& p) {
        std::string s;
        for (int k = 3; k >= 0; --k) {
            if (!s.empty()) s += ' ';
            s += fmt(p[static_cast<std::size_t>(k)]);
        }
        return '[' + s + ']';
    };
    os << std::left << std::setw(6) << "class" << std::setw(13) << "region" << std::setw(16) << "tau"
       << std::setw(16) << "radius" << std::setw(7) << "sharp" << std::setw(66) << "equation [c3 c2 c1 c0]"
       << "residual\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(6) << class_token(r.query.cls) << std::setw(13) << region_token(r.query.region.kind)
           << std::setw(16) << fmt(r.threshold.tau) << std::setw(16) << fmt(r.radius) << std::setw(7)
           << (r.sharp ? "yes" : "no") << std::setw(66) << poly_text(r.equation) + "  " << fmt(r.residual) << '\n';
    }
}

[[nodiscard]] inline const char* violation_kind(Violation::Kind k) noexcept {
    return k == Violation::Kind::Membership ? "membership" : "halo";
}

[[nodiscard]] inline nlohmann::ordered_json to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json q;
    q["class"] = class_token(rep.cls);
    q["region"] = region_token(rep.region.kind);
    if (rep.region.kind == RegionKind::HalfPlane) q["alpha"] = round12(rep.region.alpha);
    q["radius"] = round12(rep.radius);
    j["query"] = q;
    j["n_samples"] = rep.options.n_samples;
    j["n_grid"] = rep.options.n_grid;
    j["margin"] = round12(rep.options.margin);
    j["seed"] = rep.options.seed;
    auto vs = nlohmann::ordered_json::array();
    for (const auto& v : rep.violations) {
        vs.push_back({{"kind", violation_kind(v.kind)},
                      {"member", v.member},
                      {"grid_index", v.grid_index},
                      {"z_re", round12(v.z.real())},
                      {"z_im", round12(v.z.imag())},
                      {"value_re", round12(v.value.real())},
                      {"value_im", round12(v.value.imag())}});
    }
    j["violations"] = vs;
    j["max_halo_excess"] = round12(rep.max_halo_excess);
    j["extremal_probe_re"] = round12(rep.extremal_probe.real());
    j["extremal_value_re"] = round12(rep.extremal_value.real());
    j["extremal_value_im"] = round12(rep.extremal_value.imag());
    j["extremal_outside"] = rep.extremal_outside;
    return j;
}

}  // namespace starrad::io
