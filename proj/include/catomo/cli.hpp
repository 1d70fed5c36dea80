#pragma once

#include <optional>
#include <string>

namespace catomo::cli {

enum class Command { tomogram, conditional, qcurve, entropy, validate };
enum class Format { csv, pgm };

/// Everything one invocation needs. Exit codes: 0 success, 2 invalid
/// configuration, 3 degenerate conditioning, 1 failed validation.
struct RunConfig {
    Command subcommand = Command::tomogram;
    double alpha_sq = 10.0;
    double delta = 0.2;
    int h = 0;
    std::optional<double> x2;
    std::optional<double> theta2;
    int theta1_steps = 128;
    double x1_min = -8.0;
    double x1_max = 8.0;
    int x1_steps = 321;
    int dim = 0;  // Fock cutoff for oracle-backed commands; 0 = automatic
    std::string out_path;
    Format format = Format::csv;
};

int run(const RunConfig& config);

/// Full command-line entry point: parses argv, dispatches to run().
int main_with_args(int argc, char** argv);

}  // namespace catomo::cli
