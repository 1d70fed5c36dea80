#include "catomo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "catomo/fock.hpp"

namespace catomo::analysis {

RidgeSet find_ridges(const tomo::TomogramGrid& grid, double ridge_threshold, double merge_dx) {
    if (!(ridge_threshold > 0.0 && ridge_threshold < 1.0)) {
        throw std::invalid_argument("find_ridges: threshold must be in (0, 1)");
    }
    const Eigen::Index nx = grid.x_axis.size();
    const Eigen::Index nt = grid.theta_axis.size();
    if (nx < 2 || nt < 1) throw EmptyGrid("find_ridges: grid has no usable points");

    RidgeSet result;
    result.thetas.resize(nt);
    result.per_theta.resize(nt);
    for (Eigen::Index j = 0; j < nt; ++j) {
        result.thetas[j] = grid.theta_axis[j];
        const auto column = grid.values.col(j);
        const double column_max = column.maxCoeff();
        if (!(column_max > 0.0)) {
            throw EmptyGrid("find_ridges: column at theta=" + std::to_string(grid.theta_axis[j]) +
                            " is identically zero");
        }

        // Strict local maxima, grid boundaries included.
        std::vector<Ridge> maxima;
        for (Eigen::Index i = 0; i < nx; ++i) {
            const bool left_ok = (i == 0) || column[i] > column[i - 1];
            const bool right_ok = (i == nx - 1) || column[i] > column[i + 1];
            if (left_ok && right_ok) maxima.push_back({grid.x_axis[i], column[i]});
        }

        // Merge chains of maxima closer than merge_dx, keeping the highest,
        // then apply the height threshold.
        std::vector<Ridge> merged;
        for (const Ridge& m : maxima) {
            if (!merged.empty() && m.x - merged.back().x < merge_dx) {
                if (m.height > merged.back().height) merged.back() = m;
            } else {
                merged.push_back(m);
            }
        }
        std::vector<Ridge>& ridges = result.per_theta[j];
        for (const Ridge& m : merged) {
            if (m.height >= ridge_threshold * column_max) ridges.push_back(m);
        }
    }
    return result;
}

StrandVerdict classify_strands(const RidgeSet& ridges) {
    if (ridges.per_theta.empty()) throw std::invalid_argument("classify_strands: empty ridge set");

    std::map<std::size_t, int> count_histogram;
    std::size_t columns_with_two = 0;
    for (const auto& column : ridges.per_theta) {
        ++count_histogram[column.size()];
        if (column.size() >= 2) ++columns_with_two;
    }
    std::size_t mode_count = 0;
    int best = -1;
    for (const auto& [count, occurrences] : count_histogram) {
        if (occurrences > best || (occurrences == best && count > mode_count)) {
            best = occurrences;
            mode_count = count;
        }
    }

    StrandVerdict verdict;
    verdict.fraction_double =
        static_cast<double>(columns_with_two) / static_cast<double>(ridges.per_theta.size());
    verdict.label = verdict.fraction_double >= 0.25 ? StrandLabel::Double : StrandLabel::Single;
    for (std::size_t j = 0; j < ridges.per_theta.size(); ++j) {
        if (ridges.per_theta[j].size() < mode_count) verdict.crossing_thetas.push_back(ridges.thetas[j]);
    }
    return verdict;
}

NormalizationReport audit_normalization(const tomo::TomogramGrid& grid) {
    if (grid.x_axis.size() < 2 || grid.theta_axis.size() < 1) {
        throw EmptyGrid("audit_normalization: grid has no usable points");
    }
    double worst = 0.0;
    for (Eigen::Index j = 0; j < grid.theta_axis.size(); ++j) {
        const double integral = trapezoid(grid.x_axis, grid.values.col(j));
        worst = std::max(worst, std::abs(1.0 - integral));
    }
    return NormalizationReport{worst};
}

OracleSweep OracleSweep::standard() {
    OracleSweep sweep;
    sweep.x_axis = linspace(-6.0, 6.0, 21);
    sweep.thetas = {0.0, 0.7, kPi / 2.0, 2.3, kPi};
    return sweep;
}

OracleReport compare_with_oracle(const tomo::CatSource& src, const OracleSweep& sweep) {
    fock::TruncationSpec spec = fock::default_truncation(src.alpha_sq);
    if (sweep.dim > 0) spec.dim = sweep.dim;
    spec.tail_tol = sweep.tail_tol;

    const fock::FockVector cat = fock::make_cat(src.alpha(), src.h, spec);
    const fock::FockVector vacuum = fock::make_coherent(Complex(0.0, 0.0), spec);
    const fock::TwoModeFock state = fock::apply_beam_splitter(fock::product_state(cat, vacuum));

    const Eigen::Index nx = sweep.x_axis.size();
    OracleReport report{-1.0, 0.0, 0.0, 0.0, 0.0};
    for (double theta1 : sweep.thetas) {
        const ComplexMatrix q1 = fock::quadrature_rows(spec.dim, sweep.x_axis, theta1);
        for (double theta2 : sweep.thetas) {
            const ComplexMatrix q2 = fock::quadrature_rows(spec.dim, sweep.x_axis, theta2);
            const ComplexMatrix amplitudes = q1.transpose() * state * q2;
            for (Eigen::Index i = 0; i < nx; ++i) {
                for (Eigen::Index j = 0; j < nx; ++j) {
                    const double oracle = std::norm(amplitudes(i, j));
                    const double analytic = tomo::two_mode_tomogram(
                        src, tomo::QuadraturePoint(sweep.x_axis[i], theta1),
                        tomo::QuadraturePoint(sweep.x_axis[j], theta2));
                    const double diff = std::abs(oracle - analytic);
                    if (diff > report.max_abs_diff) {
                        report = OracleReport{diff, sweep.x_axis[i], theta1, sweep.x_axis[j],
                                              theta2};
                    }
                }
            }
        }
    }
    return report;
}

std::vector<QPoint> q_curve(const tomo::CatSource& src, double x2,
                            const std::vector<double>& phis) {
    std::vector<QPoint> curve;
    curve.reserve(phis.size());
    for (double phi : phis) {
        QPoint point{phi, 0.0, false};
        try {
            const tomo::ConditionalState conditional =
                tomo::conditional_coefficients(src, tomo::QuadraturePoint(x2, src.delta - phi));
            point.q = tomo::conditional_mandel_q(conditional);
        } catch (const DegenerateProjection&) {
            point.degenerate = true;
        } catch (const ZeroMeanPhotons&) {
            point.degenerate = true;
        }
        curve.push_back(point);
    }
    return curve;
}

std::ostream& operator<<(std::ostream& os, const NormalizationReport& report) {
    return os << "max_column_error=" << report.max_column_error << '\n';
}

std::ostream& operator<<(std::ostream& os, const OracleReport& report) {
    os << "max_abs_diff=" << report.max_abs_diff << '\n';
    os << "argmax_x1=" << report.x1 << '\n';
    os << "argmax_theta1=" << report.theta1 << '\n';
    os << "argmax_x2=" << report.x2 << '\n';
    os << "argmax_theta2=" << report.theta2 << '\n';
    return os;
}

std::ostream& operator<<(std::ostream& os, const StrandVerdict& verdict) {
    os << "label=" << (verdict.label == StrandLabel::Double ? "double" : "single") << '\n';
    os << "fraction_double=" << verdict.fraction_double << '\n';
    os << "crossing_count=" << verdict.crossing_thetas.size() << '\n';
    return os;
}

}  // namespace catomo::analysis
