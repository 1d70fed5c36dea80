#include "catomo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "catomo/analysis.hpp"
#include "catomo/errors.hpp"
#include "catomo/fock.hpp"
#include "catomo/grid_io.hpp"
#include "catomo/tomogram.hpp"

namespace catomo::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

constexpr double kOracleTolerance = 1e-7;
constexpr double kNormalizationTolerance = 1e-6;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitUsage;
}

int write_output(const RunConfig& config, const tomo::TomogramGrid& grid) {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) return usage_error("cannot open output file: " + config.out_path);
    if (config.format == Format::pgm) {
        io::write_grid_pgm(grid, out);
    } else {
        io::write_grid_csv(grid, out);
    }
    return out.good() ? kExitOk : kExitFailure;
}

fock::TruncationSpec oracle_spec(const RunConfig& config) {
    fock::TruncationSpec spec = fock::default_truncation(config.alpha_sq);
    if (config.dim > 0) spec.dim = config.dim;
    return spec;
}

fock::TwoModeFock build_output_state(const RunConfig& config) {
    const fock::TruncationSpec spec = oracle_spec(config);
    const tomo::CatSource src(config.alpha_sq, config.delta, config.h);
    const fock::FockVector cat = fock::make_cat(src.alpha(), src.h, spec);
    const fock::FockVector vacuum = fock::make_coherent(Complex(0.0, 0.0), spec);
    return fock::apply_beam_splitter(fock::product_state(cat, vacuum));
}

int run_tomogram(const RunConfig& config) {
    if (config.out_path.empty()) return usage_error("tomogram requires --out");
    const tomo::CatSource src(config.alpha_sq, config.delta, config.h);
    const RealVector thetas = phase_axis(config.theta1_steps);
    const RealVector xs = linspace(config.x1_min, config.x1_max, config.x1_steps);
    tomo::TomogramGrid grid{thetas, xs, RealMatrix(xs.size(), thetas.size()),
                            src, std::nullopt, false};
    const double beta_mag = std::sqrt(src.beta_sq());
    for (Eigen::Index j = 0; j < thetas.size(); ++j) {
        for (Eigen::Index i = 0; i < xs.size(); ++i) {
            grid.values(i, j) =
                tomo::coherent_mode_tomogram(beta_mag, src.delta, {xs[i], thetas[j]});
        }
    }
    return write_output(config, grid);
}

int run_conditional(const RunConfig& config) {
    if (config.out_path.empty()) return usage_error("conditional requires --out");
    if (!config.x2 || !config.theta2) return usage_error("conditional requires --x2 and --theta2");
    const tomo::CatSource src(config.alpha_sq, config.delta, config.h);
    const tomo::TomogramGrid grid = tomo::conditional_tomogram(
        src, tomo::QuadraturePoint(*config.x2, *config.theta2),
        phase_axis(config.theta1_steps), linspace(config.x1_min, config.x1_max, config.x1_steps));
    const int status = write_output(config, grid);
    if (status != kExitOk) return status;
    std::cout << analysis::classify_strands(analysis::find_ridges(grid));
    return kExitOk;
}

int run_qcurve(const RunConfig& config) {
    if (config.out_path.empty()) return usage_error("qcurve requires --out");
    if (!config.x2) return usage_error("qcurve requires --x2");
    const tomo::CatSource src(config.alpha_sq, config.delta, config.h);
    std::vector<double> phis(config.theta1_steps + 1);
    for (int k = 0; k <= config.theta1_steps; ++k) phis[k] = k * (kTwoPi / config.theta1_steps);
    const std::vector<analysis::QPoint> curve = analysis::q_curve(src, *config.x2, phis);
    std::size_t degenerate = 0;
    for (const analysis::QPoint& point : curve) degenerate += point.degenerate ? 1 : 0;
    if (degenerate > 0) {
        std::cerr << "warning: " << degenerate << " phase(s) had degenerate conditioning\n";
    }
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) return usage_error("cannot open output file: " + config.out_path);
    io::write_qcurve_csv(curve, out);
    return out.good() ? kExitOk : kExitFailure;
}

int run_entropy(const RunConfig& config) {
    const double entropy = fock::entanglement_entropy(build_output_state(config));
    std::ostringstream text;
    text << "entropy_bits=" << io::fmt17(entropy) << '\n';
    if (config.out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(config.out_path, std::ios::binary);
        if (!out) return usage_error("cannot open output file: " + config.out_path);
        out << text.str();
    }
    return kExitOk;
}

int run_validate(const RunConfig& config) {
    std::ostringstream report;
    bool pass = true;

    for (int h : {0, 1}) {
        for (double alpha_sq : {0.5, 2.0, 10.0}) {
            analysis::OracleSweep sweep = analysis::OracleSweep::standard();
            if (config.dim > 0) sweep.dim = config.dim;
            const tomo::CatSource src(alpha_sq, config.delta, h);
            const analysis::OracleReport oracle = analysis::compare_with_oracle(src, sweep);
            report << "oracle_max_abs_diff.h" << h << ".alpha_sq" << alpha_sq << '='
                   << io::fmt17(oracle.max_abs_diff) << '\n';
            pass = pass && oracle.max_abs_diff < kOracleTolerance;
        }
    }

    const RealVector audit_axis = linspace(-14.0, 14.0, 561);
    const RealVector audit_thetas = phase_axis(64);
    const double x2 = config.x2.value_or(2.0);
    for (int h : {0, 1}) {
        const tomo::CatSource src(10.0, config.delta, h);
        for (double offset : {0.3, kPi / 2.0}) {
            const tomo::TomogramGrid grid = tomo::conditional_tomogram(
                src, tomo::QuadraturePoint(x2, src.delta + offset), audit_thetas, audit_axis);
            const analysis::NormalizationReport norm = analysis::audit_normalization(grid);
            report << "conditional_norm_error.h" << h << ".offset" << offset << '='
                   << io::fmt17(norm.max_column_error) << '\n';
            pass = pass && norm.max_column_error < kNormalizationTolerance;
        }

        // Joint probability over both quadratures at a fixed phase pair.
        double joint = 0.0;
        const tomo::QuadraturePoint probe(0.0, 0.7);
        RealVector inner(audit_axis.size());
        RealVector outer(audit_axis.size());
        for (Eigen::Index i = 0; i < audit_axis.size(); ++i) {
            for (Eigen::Index j = 0; j < audit_axis.size(); ++j) {
                inner[j] = tomo::two_mode_tomogram(src, {audit_axis[i], 0.7},
                                                   {audit_axis[j], 2.3});
            }
            outer[i] = trapezoid(audit_axis, inner);
        }
        joint = trapezoid(audit_axis, outer);
        report << "joint_integral.h" << h << '=' << io::fmt17(joint) << '\n';
        pass = pass && std::abs(1.0 - joint) < kNormalizationTolerance;
    }

    report << "validate=" << (pass ? "PASS" : "FAIL") << '\n';
    if (config.out_path.empty()) {
        std::cout << report.str();
    } else {
        std::ofstream out(config.out_path, std::ios::binary);
        if (!out) return usage_error("cannot open output file: " + config.out_path);
        out << report.str();
    }
    return pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(const RunConfig& config) {
    if (!(config.alpha_sq >= 0.0)) return usage_error("--alpha-sq must be >= 0");
    if (config.h != 0 && config.h != 1) return usage_error("--h must be 0 or 1");
    if (!(config.x1_min < config.x1_max)) return usage_error("--x1-min must be < --x1-max");
    if (config.x1_steps < 2) return usage_error("--x1-steps must be >= 2");
    if (config.theta1_steps < 1) return usage_error("--theta1-steps must be >= 1");
    if (config.dim < 0) return usage_error("--dim must be >= 0");

    try {
        switch (config.subcommand) {
            case Command::tomogram: return run_tomogram(config);
            case Command::conditional: return run_conditional(config);
            case Command::qcurve: return run_qcurve(config);
            case Command::entropy: return run_entropy(config);
            case Command::validate: return run_validate(config);
        }
    } catch (const DegenerateProjection& e) {
        std::cerr << "error: degenerate conditioning: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const TruncationTooSmall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

int main_with_args(int argc, char** argv) {
    CLI::App app{"Optical tomograms of two-mode entangled coherent states"};
    app.require_subcommand(1);
    // The parity flag is spelled --h, so keep only the long help spelling.
    app.set_help_flag("--help", "Print help");

    RunConfig config;
    std::string format = "csv";

    const auto add_source = [&config](CLI::App* sub) {
        sub->set_help_flag("--help", "Print help");
        sub->add_option("--alpha-sq", config.alpha_sq, "Input-state |alpha|^2");
        sub->add_option("--delta", config.delta, "Phase of alpha, radians");
        sub->add_option("--h", config.h, "Input-state parity: 0 even, 1 odd");
    };
    const auto add_grid_axes = [&config, &format](CLI::App* sub) {
        sub->add_option("--theta1-steps", config.theta1_steps, "Local-oscillator phase samples");
        sub->add_option("--x1-min", config.x1_min, "Quadrature axis minimum");
        sub->add_option("--x1-max", config.x1_max, "Quadrature axis maximum");
        sub->add_option("--x1-steps", config.x1_steps, "Quadrature axis samples");
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "pgm"}));
    };
    const auto add_out = [&config](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--out", config.out_path, "Output file path");
        if (required) opt->required();
    };

    CLI::App* tomogram = app.add_subcommand(
        "tomogram", "Single-mode tomogram of the separable (coherent-input) output");
    add_source(tomogram);
    add_grid_axes(tomogram);
    add_out(tomogram, true);

    CLI::App* conditional = app.add_subcommand(
        "conditional", "Mode-c tomogram conditioned on a quadrature measurement in mode d");
    add_source(conditional);
    add_grid_axes(conditional);
    add_out(conditional, true);
    conditional->add_option("--x2", config.x2, "Measured quadrature value in mode d")->required();
    conditional->add_option("--theta2", config.theta2, "Mode-d local-oscillator phase, radians")
        ->required();

    CLI::App* qcurve = app.add_subcommand(
        "qcurve", "Mandel Q of the conditional state versus relative phase |delta - theta2|");
    add_source(qcurve);
    qcurve->add_option("--x2", config.x2, "Measured quadrature value in mode d")->required();
    qcurve->add_option("--theta1-steps", config.theta1_steps,
                       "Number of phase steps across [0, 2*pi]");
    add_out(qcurve, true);

    CLI::App* entropy =
        app.add_subcommand("entropy", "Entanglement entropy of the beam splitter output, in bits");
    add_source(entropy);
    entropy->add_option("--dim", config.dim, "Fock cutoff (0 = automatic)");
    add_out(entropy, false);

    CLI::App* validate = app.add_subcommand(
        "validate", "Cross-check closed forms against Fock-space numerics and normalization");
    validate->set_help_flag("--help", "Print help");
    validate->add_option("--delta", config.delta, "Phase of alpha, radians");
    validate->add_option("--x2", config.x2, "Conditioning quadrature for normalization audits");
    validate->add_option("--dim", config.dim, "Fock cutoff (0 = automatic)");
    add_out(validate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    config.format = (format == "pgm") ? Format::pgm : Format::csv;
    if (app.got_subcommand(tomogram)) config.subcommand = Command::tomogram;
    if (app.got_subcommand(conditional)) config.subcommand = Command::conditional;
    if (app.got_subcommand(qcurve)) config.subcommand = Command::qcurve;
    if (app.got_subcommand(entropy)) config.subcommand = Command::entropy;
    if (app.got_subcommand(validate)) config.subcommand = Command::validate;
    return run(config);
}

}  // namespace catomo::cli
