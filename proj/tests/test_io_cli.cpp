#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "catomo/analysis.hpp"
#include "catomo/cli.hpp"
#include "catomo/grid_io.hpp"
#include "catomo/tomogram.hpp"

using namespace catomo;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("catomo_test_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_binary(const std::string& args, const fs::path& stdout_path) {
    const std::string command =
        std::string(CATOMO_BIN) + " " + args + " >" + stdout_path.string() + " 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("grid CSV: exact round trip preserves the classification verdict") {
    const tomo::CatSource src(10.0, 0.2, 0);
    const auto grid = tomo::conditional_tomogram(src, {2.0, src.delta + kPi / 2},
                                                 phase_axis(64), linspace(-8.0, 8.0, 161));
    std::stringstream stream;
    io::write_grid_csv(grid, stream);

    std::string header;
    std::getline(stream, header);
    CHECK(header == "# theta1, x1, omega");
    stream.seekg(0);

    const auto loaded = io::read_grid_csv(stream);
    REQUIRE(loaded.theta_axis.size() == grid.theta_axis.size());
    REQUIRE(loaded.x_axis.size() == grid.x_axis.size());
    CHECK((loaded.theta_axis - grid.theta_axis).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded.x_axis - grid.x_axis).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded.values - grid.values).cwiseAbs().maxCoeff() == 0.0);

    const auto before = analysis::classify_strands(analysis::find_ridges(grid));
    const auto after = analysis::classify_strands(analysis::find_ridges(loaded));
    CHECK(before.label == after.label);
    CHECK(before.fraction_double == after.fraction_double);
}

TEST_CASE("grid CSV: malformed input is rejected") {
    std::stringstream bad("# theta1, x1, omega\n1.0,2.0\n");
    CHECK_THROWS_AS(io::read_grid_csv(bad), std::runtime_error);
    std::stringstream empty("# theta1, x1, omega\n");
    CHECK_THROWS_AS(io::read_grid_csv(empty), std::runtime_error);
}

TEST_CASE("grid PGM: header, size and value scaling") {
    const tomo::CatSource src(10.0, 0.2, 0);
    const auto grid = tomo::conditional_tomogram(src, {2.0, src.delta + kPi / 2},
                                                 phase_axis(32), linspace(-8.0, 8.0, 81));
    std::stringstream stream;
    io::write_grid_pgm(grid, stream);
    const std::string data = stream.str();
    const std::string header = "P5\n32 81\n255\n";
    REQUIRE(data.substr(0, header.size()) == header);
    CHECK(data.size() == header.size() + 32 * 81);
    unsigned char max_byte = 0;
    for (std::size_t i = header.size(); i < data.size(); ++i) {
        max_byte = std::max(max_byte, static_cast<unsigned char>(data[i]));
    }
    CHECK(max_byte == 255);
}

TEST_CASE("cli run: identical configs produce byte-identical files") {
    cli::RunConfig config;
    config.subcommand = cli::Command::conditional;
    config.x2 = 2.0;
    config.theta2 = 0.2 + kPi / 2;
    config.theta1_steps = 64;
    config.x1_steps = 161;

    const fs::path first = temp_path("det_a.csv");
    const fs::path second = temp_path("det_b.csv");
    config.out_path = first.string();
    REQUIRE(cli::run(config) == 0);
    config.out_path = second.string();
    REQUIRE(cli::run(config) == 0);
    CHECK(slurp(first) == slurp(second));
    CHECK(!slurp(first).empty());
    fs::remove(first);
    fs::remove(second);
}

TEST_CASE("cli run: configuration and conditioning failures use distinct exit codes") {
    cli::RunConfig config;
    config.subcommand = cli::Command::conditional;
    config.out_path = temp_path("unused.csv").string();
    CHECK(cli::run(config) == 2);  // missing --x2/--theta2

    config.x2 = 2.0;
    config.theta2 = 1.0;
    config.x1_min = 3.0;
    config.x1_max = -3.0;
    CHECK(cli::run(config) == 2);

    config.x1_min = -8.0;
    config.x1_max = 8.0;
    config.x2 = 40.0;  // quadrature far outside the state's support
    CHECK(cli::run(config) == 3);

    cli::RunConfig tomogram;
    tomogram.subcommand = cli::Command::tomogram;
    tomogram.out_path.clear();
    CHECK(cli::run(tomogram) == 2);  // grid output requires --out
    fs::remove(temp_path("unused.csv"));
}

TEST_CASE("cli run: entropy output is one ebit for a large cat") {
    cli::RunConfig config;
    config.subcommand = cli::Command::entropy;
    config.alpha_sq = 10.0;
    config.h = 0;
    const fs::path out = temp_path("entropy.txt");
    config.out_path = out.string();
    REQUIRE(cli::run(config) == 0);
    const std::string text = slurp(out);
    REQUIRE(text.rfind("entropy_bits=", 0) == 0);
    const double entropy = std::strtod(text.c_str() + 13, nullptr);
    CHECK(std::abs(entropy - 1.0) < 1e-3);
    fs::remove(out);
}

TEST_CASE("cli run: qcurve CSV peaks at the equal-weight phases") {
    cli::RunConfig config;
    config.subcommand = cli::Command::qcurve;
    config.x2 = 2.0;
    const fs::path out = temp_path("qcurve.csv");
    config.out_path = out.string();
    REQUIRE(cli::run(config) == 0);

    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# phi, q");
    double best_phi = -1.0, best_q = -1.0;
    int rows = 0;
    while (std::getline(in, line)) {
        double phi = 0.0, q = 0.0;
        char comma = 0;
        std::istringstream row(line);
        REQUIRE((row >> phi >> comma >> q));
        if (q > best_q) {
            best_q = q;
            best_phi = phi;
        }
        ++rows;
    }
    CHECK(rows == 129);  // k * 2*pi/128 for k = 0..128
    CHECK(best_q > 0.0);
    const bool at_peak = std::abs(best_phi - kPi / 2) < 1e-12 ||
                         std::abs(best_phi - 3 * kPi / 2) < 1e-12;
    CHECK(at_peak);
    fs::remove(out);
}

TEST_CASE("cli binary: usage errors exit 2, reference conditional run classifies double") {
    const fs::path log = temp_path("cli.log");
    CHECK(run_binary("--bogus-flag", log) == 2);
    CHECK(run_binary("conditional --alpha-sq 10", log) == 2);  // missing required options
    CHECK(run_binary("", log) == 2);                           // subcommand required

    const fs::path csv = temp_path("fig2b.csv");
    const int status = run_binary(
        "conditional --alpha-sq 10 --delta 0.2 --h 0 --x2 2.0 --theta2 1.7708 --out " +
            csv.string(),
        log);
    CHECK(status == 0);
    CHECK(slurp(log).find("label=double") != std::string::npos);

    std::ifstream in(csv);
    const auto grid = io::read_grid_csv(in);
    CHECK(analysis::classify_strands(analysis::find_ridges(grid)).label ==
          analysis::StrandLabel::Double);

    const fs::path pgm = temp_path("fig2b.pgm");
    CHECK(run_binary("conditional --alpha-sq 10 --delta 0.2 --h 0 --x2 2.0 --theta2 1.7708 "
                     "--format pgm --out " +
                         pgm.string(),
                     log) == 0);
    CHECK(slurp(pgm).rfind("P5\n128 321\n255\n", 0) == 0);

    const fs::path single_csv = temp_path("single.csv");
    CHECK(run_binary("tomogram --alpha-sq 10 --delta 0.2 --out " + single_csv.string(), log) ==
          0);
    std::ifstream single_in(single_csv);
    CHECK(analysis::classify_strands(analysis::find_ridges(io::read_grid_csv(single_in))).label ==
          analysis::StrandLabel::Single);

    CHECK(run_binary("entropy --alpha-sq 10 --h 0", log) == 0);
    CHECK(slurp(log).rfind("entropy_bits=", 0) == 0);

    for (const auto& path : {log, csv, pgm, single_csv}) fs::remove(path);
}

TEST_CASE("cli binary: validate passes and reports key=value lines" *
          doctest::timeout(120)) {
    const fs::path log = temp_path("validate.log");
    CHECK(run_binary("validate", log) == 0);
    const std::string text = slurp(log);
    CHECK(text.find("oracle_max_abs_diff.h0.alpha_sq10=") != std::string::npos);
    CHECK(text.find("conditional_norm_error.h1") != std::string::npos);
    CHECK(text.find("validate=PASS") != std::string::npos);
    fs::remove(log);
}
