#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(STARRAD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) { return std::string(STARRAD_TEST_TMP) + "/" + name; }

}  // namespace

TEST(Cli, RadiusParabola) {
    const auto r = run("radius --class f1 --region parabola --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["radius"].get<double>(), 0.1092, 1e-4);
    EXPECT_TRUE(j["sharp"].get<bool>());
}

TEST(Cli, RadiusF2LemniscateWarns) {
    const auto r = run("radius --class f2 --region lemniscate --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["sharp"].get<bool>());
    EXPECT_TRUE(j.contains("warning"));
}

TEST(Cli, RadiusHalfPlane) {
    const auto r = run("radius --class f3 --region halfplane --alpha 0 --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(nlohmann::json::parse(r.out)["radius"].get<double>(), 0.347296, 1e-6);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("radius --class f3 --region halfplane").code, 64);
    EXPECT_EQ(run("radius --class f3 --region parabola --alpha 0.5").code, 64);
    EXPECT_EQ(run("radius --class f4 --region parabola").code, 64);
    EXPECT_EQ(run("radius --class f1 --region nephroid").code, 64);
    EXPECT_EQ(run("radius --class f1 --region halfplane --alpha 1").code, 64);
    EXPECT_EQ(run("verify --class f1 --region halfplane --alpha 0 --margin 1.5").code, 64);
    EXPECT_EQ(run("plot --r 1.5 -o " + tmp("bad.svg")).code, 64);
    EXPECT_EQ(run("").code, 64);
}

TEST(Cli, TableJsonRoundTrip) {
    const auto t = run("table --format json");
    ASSERT_EQ(t.code, 0);
    const auto rows = nlohmann::json::parse(t.out);
    ASSERT_EQ(rows.size(), 24u);
    for (const auto& row : rows) {
        std::string args = "radius --format json --class " + row["class"].get<std::string>() + " --region " +
                           row["region"].get<std::string>();
        if (row.contains("alpha")) args += " --alpha " + std::to_string(row["alpha"].get<double>());
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << args;
        EXPECT_NEAR(nlohmann::json::parse(r.out)["radius"].get<double>(), row["radius"].get<double>(), 1e-12);
    }
}

TEST(Cli, TableCsvRowsAndValues) {
    const auto t = run("table --format csv");
    ASSERT_EQ(t.code, 0);
    std::istringstream is(t.out);
    std::string line;
    int rows = -1;
    bool saw_f2_rational = false, saw_f1_sine = false;
    while (std::getline(is, line)) {
        ++rows;
        if (line.rfind("f2,rational,", 0) == 0) {
            saw_f2_rational = true;
            std::stringstream ss(line);
            std::string cell;
            for (int i = 0; i < 4; ++i) std::getline(ss, cell, ',');
            EXPECT_NEAR(std::stod(cell), 0.0481, 1e-4);
        }
        if (line.rfind("f1,sine,", 0) == 0) {
            saw_f1_sine = true;
            std::stringstream ss(line);
            std::string cell;
            for (int i = 0; i < 4; ++i) std::getline(ss, cell, ',');
            EXPECT_NEAR(std::stod(cell), 0.17969, 1e-4);
        }
    }
    EXPECT_EQ(rows, 24);
    EXPECT_TRUE(saw_f2_rational);
    EXPECT_TRUE(saw_f1_sine);
}

TEST(Cli, DeterministicOutput) {
    const std::string args = "verify --class f3 --region sine --samples 50 --grid 64 --seed 7";
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("table").out, run("table").out);
}

TEST(Cli, VerifyPasses) {
    EXPECT_EQ(run("verify --class f1 --region halfplane --alpha 0 --seed 7").code, 0);
    EXPECT_EQ(run("verify --class f3 --region lemniscate --seed 7").code, 0);
}

TEST(Cli, VerifyFailsOnOverstatedRadius) {
    const auto r = run("verify --class f1 --region parabola --radius 0.12 --samples 20 --seed 7");
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(nlohmann::json::parse(r.out)["violations"].empty());
}

TEST(Cli, VerifySeedFromEnvironment) {
    const std::string args = "verify --class f2 --region cardioid --samples 30 --grid 64";
    const auto env = run(args + " --seed 5");
    const std::string cmd = "STARRAD_SEED=5 " + std::string(STARRAD_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    EXPECT_EQ(out, env.out);
    EXPECT_EQ(nlohmann::json::parse(out)["seed"].get<int>(), 5);
}

TEST(Cli, PlotWritesSvg) {
    const std::string path = tmp("lemniscate.svg");
    ASSERT_EQ(run("plot --region lemniscate --class f1 --r 0.09 -o " + path).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("<svg"), std::string::npos);
    EXPECT_NE(ss.str().find("image-disk"), std::string::npos);

    ASSERT_EQ(run("plot --region cardioid -o " + tmp("c.svg")).code, 0);
    ASSERT_EQ(run("plot --region cardioid -o " + tmp("c2.svg")).code, 0);
    std::ifstream c1(tmp("c.svg")), c2(tmp("c2.svg"));
    std::stringstream s1, s2;
    s1 << c1.rdbuf();
    s2 << c2.rdbuf();
    EXPECT_EQ(s1.str(), s2.str());
}

TEST(Cli, PlotIoError) { EXPECT_EQ(run("plot --region cardioid -o /nonexistent-dir/x.svg").code, 74); }
