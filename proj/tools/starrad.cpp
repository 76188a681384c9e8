// starrad: radii of starlikeness for the classes F1, F2, F3.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "starrad/io.hpp"
#include "starrad/plot.hpp"
#include "starrad/starrad.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitNoRoot = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

starrad::ClassId class_arg(const std::string& token) {
    if (auto c = starrad::parse_class(token)) return *c;
    throw UsageError("unknown class '" + token + "' (expected f1, f2 or f3)");
}

starrad::TargetRegion region_arg(const std::string& token, std::optional<double> alpha) {
    const auto kind = starrad::parse_region_kind(token);
    if (!kind) throw UsageError("unknown region '" + token + "'");
    if (*kind == starrad::RegionKind::HalfPlane) {
        if (!alpha) throw UsageError("region 'halfplane' requires --alpha");
        if (!(*alpha >= 0.0 && *alpha < 1.0)) throw UsageError("--alpha must lie in [0, 1)");
        return starrad::TargetRegion::half_plane(*alpha);
    }
    if (alpha) throw UsageError("--alpha is only valid with region 'halfplane'");
    return starrad::TargetRegion::of(*kind);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("STARRAD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("STARRAD_SEED must be an unsigned integer");
        }
    }
    return 0;
}

void print_results(const std::vector<starrad::RadiusResult>& rows, const std::string& format, bool single) {
    if (format == "json") {
        std::cout << (single ? starrad::io::to_json(rows.front()) : starrad::io::to_json(rows)).dump(2) << '\n';
    } else if (format == "csv") {
        starrad::io::write_csv(std::cout, rows);
    } else {
        starrad::io::write_table(std::cout, rows);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp radii of starlikeness for the function classes F1, F2 and F3"};
    app.require_subcommand(1);

    std::string cls_token, region_token, format = "table", out_path;
    std::optional<double> alpha, r_plot, radius_override;
    double tol = starrad::kDefaultRootTol;
    starrad::VerifyOptions vopt;
    std::optional<std::uint64_t> seed;

    const auto formats = CLI::IsMember({"json", "csv", "table"});

    auto* radius = app.add_subcommand("radius", "Solve one radius");
    radius->add_option("--class", cls_token, "f1, f2 or f3")->required();
    radius->add_option("--region", region_token, "halfplane, lemniscate, parabola, exponential, sine, lune, rational, cardioid")
        ->required();
    radius->add_option("--alpha", alpha, "Order of starlikeness (halfplane only)");
    radius->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);
    radius->add_option("--format", format, "json, csv or table")->check(formats);

    auto* table = app.add_subcommand("table", "All radii of the three classes");
    table->add_option("--format", format, "json, csv or table")->check(formats);
    table->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Monte-Carlo check of a radius");
    verify->add_option("--class", cls_token, "f1, f2 or f3")->required();
    verify->add_option("--region", region_token, "Target region")->required();
    verify->add_option("--alpha", alpha, "Order of starlikeness (halfplane only)");
    verify->add_option("--radius", radius_override, "Radius to check (default: the solved radius)");
    verify->add_option("--samples", vopt.n_samples, "Number of class members")->capture_default_str();
    verify->add_option("--grid", vopt.n_grid, "Points on the circle |z| = (1 - margin) R")->capture_default_str();
    verify->add_option("--margin", vopt.margin, "Relative margin in (0, 1)")->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed (default: $STARRAD_SEED or 0)");

    auto* plot = app.add_subcommand("plot", "SVG of a region, an image disk and the extremal image");
    plot->add_option("--region", region_token, "Target region");
    plot->add_option("--alpha", alpha, "Order of starlikeness (halfplane only)");
    plot->add_option("--class", cls_token, "f1, f2 or f3");
    plot->add_option("--r", r_plot, "Radius of the disk |z| < r");
    plot->add_option("-o,--out", out_path, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*radius) {
            const starrad::RadiusQuery q{class_arg(cls_token), region_arg(region_token, alpha)};
            const auto result = starrad::solve_radius(q, tol);
            if (result.warning) std::cerr << "warning: " << *result.warning << '\n';
            print_results({result}, format, true);
        } else if (*table) {
            print_results(starrad::radius_table(tol), format, false);
        } else if (*verify) {
            const auto cls = class_arg(cls_token);
            const auto region = region_arg(region_token, alpha);
            if (!(vopt.margin > 0.0 && vopt.margin < 1.0)) throw UsageError("--margin must lie in (0, 1)");
            if (vopt.n_samples < 1) throw UsageError("--samples must be at least 1");
            if (vopt.n_grid < 64) throw UsageError("--grid must be at least 64");
            vopt.seed = seed ? *seed : default_seed();
            const double R = radius_override ? *radius_override : starrad::solve_radius({cls, region}).radius;
            const auto report = starrad::verify_radius(cls, region, R, vopt);
            std::cout << starrad::io::to_json(report).dump(2) << '\n';
            return report.passed() ? 0 : kExitVerifyFailed;
        } else if (*plot) {
            starrad::plot::PlotRequest req;
            if (!region_token.empty()) req.region = region_arg(region_token, alpha);
            else if (alpha) throw UsageError("--alpha needs --region halfplane");
            if (!cls_token.empty()) req.cls = class_arg(cls_token);
            req.r = r_plot;
            if (r_plot && !(*r_plot > 0.0 && *r_plot < 1.0)) throw UsageError("--r must lie in (0, 1)");
            if (req.cls && !req.r) throw UsageError("--class needs --r");
            if (!req.region && !req.cls) throw UsageError("plot needs --region and/or --class with --r");
            const std::string svg = starrad::plot::render_svg(req);
            std::ofstream out(out_path, std::ios::binary);
            if (!out || !(out << svg) || !out.flush()) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return kExitIo;
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const starrad::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const starrad::NoRootInInterval& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoRoot;
    }
    return 0;
}
