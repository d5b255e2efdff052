#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fracwave/cli.hpp"

using fracwave::cli::Coupling;
using fracwave::cli::help_request;
using fracwave::cli::parse_config;
using fracwave::cli::run;
using fracwave::cli::RunConfig;
using fracwave::cli::RunMode;
using fracwave::cli::usage_error;

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    Csv csv;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            csv.header = cells;
            first = false;
        } else if (!cells.empty()) {
            csv.rows.push_back(cells);
        }
    }
    return csv;
}

double cell_value(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// unique-ish scratch names so parallel test invocations cannot collide
std::string scratch(const char* tag) {
    return std::string("cli_test_") + tag + ".tmp.csv";
}

}  // namespace

TEST_CASE("parse_config accepts the canonical invocation") {
    RunConfig c = parse_config({"--mode", "time", "--orders", "0.25,0.5,0.75,1.0", "--coupled",
                                "--range", "10", "--samples", "1001", "--out", "fig1.csv"});
    CHECK(c.mode == RunMode::time);
    REQUIRE(c.orders.size() == 4);
    CHECK(c.orders[0] == 0.25);
    CHECK(c.orders[3] == 1.0);
    CHECK(c.coupling == Coupling::coupled);
    CHECK(c.range_max == 10.0);
    CHECK(c.samples == 1001);
    CHECK(c.output_path == "fig1.csv");
    CHECK_FALSE(c.plot);
}

TEST_CASE("parse_config defaults are the figure preset") {
    RunConfig c = parse_config({});
    CHECK(c.mode == RunMode::time);
    REQUIRE(c.orders.size() == 4);
    CHECK(c.orders == std::vector<double>{0.25, 0.5, 0.75, 1.0});
    CHECK(c.coupling == Coupling::coupled);
    CHECK(c.range_max == 10.0);
    CHECK(c.samples == 1001);
    CHECK(c.output_path == "fracwave_out.csv");
    CHECK(c.grids == std::vector<int>{256, 512, 1024, 2048});
}

TEST_CASE("parse_config rejections") {
    CHECK_THROWS_AS(parse_config({"--orders", "1.5"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--orders", "0"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--orders", ""}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "time", "--free"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "space", "--free"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "time", "--free", "--sigma-x", "0.5"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--sigma", "0.5"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--sigma-x", "0.5"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--coupled", "--free"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "verify", "--free", "--sigma", "0.5"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "nope"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--bogus"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--samples", "1"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--samples", "abc"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--range", "-2"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--omega0", "0"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--free", "--sigma", "1.5"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "verify", "--grids", "128,256"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "verify", "--grids", "256,128,512"}), usage_error);
    CHECK_THROWS_AS(parse_config({"--mode", "verify", "--grids", "16,128,256"}), usage_error);
}

TEST_CASE("help carries the flag inventory") {
    try {
        parse_config({"--help"});
        FAIL("--help must raise help_request");
    } catch (const help_request& h) {
        CHECK(h.text.find("--mode") != std::string::npos);
        CHECK(h.text.find("--orders") != std::string::npos);
        CHECK(h.text.find("--grids") != std::string::npos);
    }
}

TEST_CASE("two-sample run pins u(0) = 1") {
    RunConfig c;
    c.samples = 2;
    c.range_max = 1.0;
    c.output_path = scratch("two_sample");
    REQUIRE(run(c) == 0);
    Csv csv = read_csv(c.output_path);
    REQUIRE(csv.header.size() == 5);
    CHECK(csv.header[0] == "s");
    CHECK(csv.header[1] == "u_gamma_0.25");
    CHECK(csv.header[4] == "u_gamma_1");
    REQUIRE(csv.rows.size() == 2);
    for (std::size_t j = 1; j < 5; ++j) CHECK(cell_value(csv.rows[0][j]) == 1.0);
    CHECK(cell_value(csv.rows[0][0]) == 0.0);
    CHECK(cell_value(csv.rows[1][0]) == 1.0);
    std::remove(c.output_path.c_str());
}

TEST_CASE("classical column equals the cosine") {
    RunConfig c;
    c.orders = {1.0};
    c.samples = 101;
    c.output_path = scratch("cosine");
    REQUIRE(run(c) == 0);
    Csv csv = read_csv(c.output_path);
    REQUIRE(csv.rows.size() == 101);
    for (const auto& row : csv.rows) {
        double s = cell_value(row[0]);
        CHECK(std::fabs(cell_value(row[1]) - std::cos(s)) <= 1e-10);
    }
    std::remove(c.output_path.c_str());
}

TEST_CASE("half-order column equals the exponential") {
    RunConfig c;
    c.orders = {0.5};
    c.samples = 101;
    c.output_path = scratch("exp");
    REQUIRE(run(c) == 0);
    Csv csv = read_csv(c.output_path);
    for (const auto& row : csv.rows) {
        double s = cell_value(row[0]);
        double expected = std::exp(-s / std::sqrt(2.0));
        CHECK(cell_value(row[1]) == doctest::Approx(expected).epsilon(1e-12));
    }
    std::remove(c.output_path.c_str());
}

TEST_CASE("free mode evaluates the dimensional solution") {
    RunConfig c;
    c.orders = {0.5};
    c.coupling = Coupling::free_sigma;
    c.sigma = 0.6;
    c.samples = 51;
    c.range_max = 5.0;
    c.output_path = scratch("free");
    REQUIRE(run(c) == 0);
    Csv csv = read_csv(c.output_path);
    for (const auto& row : csv.rows) {
        double s = cell_value(row[0]);
        // omega0 = 1, sigma = 0.6: omega^2 = 0.6 and t = s
        CHECK(cell_value(row[1]) == doctest::Approx(std::exp(-0.6 * s)).epsilon(1e-12));
    }
    std::remove(c.output_path.c_str());
}

TEST_CASE("space mode header and columns") {
    RunConfig c;
    c.mode = RunMode::space;
    c.orders = {1.0, 0.25};
    c.samples = 11;
    c.output_path = scratch("space");
    REQUIRE(run(c) == 0);
    Csv csv = read_csv(c.output_path);
    REQUIRE(csv.header.size() == 3);
    // columns come out sorted by order
    CHECK(csv.header[1] == "u_delta_0.25");
    CHECK(csv.header[2] == "u_delta_1");
    std::remove(c.output_path.c_str());
}

TEST_CASE("byte determinism and exact round-trip") {
    RunConfig a;
    a.orders = {0.25, 0.75};
    a.samples = 64;
    a.output_path = scratch("det_a");
    RunConfig b = a;
    b.output_path = scratch("det_b");
    REQUIRE(run(a) == 0);
    REQUIRE(run(b) == 0);
    std::string bytes_a = slurp(a.output_path);
    std::string bytes_b = slurp(b.output_path);
    CHECK(bytes_a.size() > 0);
    // identical configs must emit identical bytes (modulo the path)
    CHECK(bytes_a == bytes_b);

    // every cell re-parses to the value that produced it
    Csv csv = read_csv(a.output_path);
    for (const auto& row : csv.rows) {
        for (const auto& cell : row) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", cell_value(cell));
            CHECK(cell == buf);
        }
    }
    std::remove(a.output_path.c_str());
    std::remove(b.output_path.c_str());
}

TEST_CASE("verify mode emits a refinement table") {
    RunConfig c;
    c.mode = RunMode::verify;
    c.orders = {1.0};
    c.grids = {64, 128, 256};
    c.output_path = scratch("verify");
    REQUIRE(run(c) == 0);
    Csv csv = read_csv(c.output_path);
    REQUIRE(csv.header.size() == 5);
    CHECK(csv.header[0] == "order");
    CHECK(csv.header[1] == "grid");
    CHECK(csv.header[2] == "dt");
    CHECK(csv.header[3] == "residual_inf");
    CHECK(csv.header[4] == "empirical_order");
    REQUIRE(csv.rows.size() == 3);
    double r0 = cell_value(csv.rows[0][3]);
    double r1 = cell_value(csv.rows[1][3]);
    double r2 = cell_value(csv.rows[2][3]);
    CHECK(r1 < r0);
    CHECK(r2 < r1);
    double slope = cell_value(csv.rows[0][4]);
    CHECK(slope >= 1.6);
    CHECK(slope <= 2.4);
    std::remove(c.output_path.c_str());
}

TEST_CASE("plot emits an SVG overlay") {
    RunConfig c;
    c.orders = {0.25, 1.0};
    c.samples = 51;
    c.plot = true;
    c.output_path = scratch("plot");
    REQUIRE(run(c) == 0);
    std::string svg_path = c.output_path.substr(0, c.output_path.size() - 4) + ".svg";
    std::string svg = slurp(svg_path);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("gamma = 0.25") != std::string::npos);
    CHECK(svg.find("gamma = 1") != std::string::npos);
    std::size_t first = svg.find("<polyline");
    REQUIRE(first != std::string::npos);
    CHECK(svg.find("<polyline", first + 1) != std::string::npos);
    std::remove(c.output_path.c_str());
    std::remove(svg_path.c_str());
}

TEST_CASE("unwritable output path fails cleanly") {
    RunConfig c;
    c.samples = 2;
    c.output_path = "/nonexistent_dir_for_cli_test/out.csv";
    CHECK(run(c) == 1);
}
