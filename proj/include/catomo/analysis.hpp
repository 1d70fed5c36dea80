#pragma once

#include <iosfwd>
#include <vector>

#include "catomo/tomogram.hpp"
#include "catomo/types.hpp"

namespace catomo::analysis {

// Turns tomogram grids into verdicts: ridge extraction, single/double strand
// classification, normalization audits and analytic-vs-Fock comparisons.

struct Ridge {
    double x;
    double height;
};

/// Ridges per theta column, aligned with the source grid's theta axis.
struct RidgeSet {
    std::vector<double> thetas;
    std::vector<std::vector<Ridge>> per_theta;
};

enum class StrandLabel { Single, Double };

struct StrandVerdict {
    StrandLabel label;
    double fraction_double;               // fraction of columns carrying >= 2 ridges
    std::vector<double> crossing_thetas;  // columns with fewer ridges than the grid mode
};

inline constexpr double kRidgeThreshold = 0.05;
inline constexpr double kMergeDx = 0.5;

/// Per column: strict local maxima, merged when closer than merge_dx, then
/// kept if height >= ridge_threshold * column max. Throws EmptyGrid on an
/// empty grid or an identically zero column.
RidgeSet find_ridges(const tomo::TomogramGrid& grid, double ridge_threshold = kRidgeThreshold,
                     double merge_dx = kMergeDx);

/// Double when at least 25% of columns carry two or more ridges.
StrandVerdict classify_strands(const RidgeSet& ridges);

struct NormalizationReport {
    double max_column_error;  // max over columns of |1 - trapezoid integral|
};

NormalizationReport audit_normalization(const tomo::TomogramGrid& grid);

/// Grid of quadrature values and local-oscillator phases swept when checking
/// the closed form against the Fock-space contraction.
struct OracleSweep {
    RealVector x_axis;           // shared by both modes
    std::vector<double> thetas;  // shared by both modes
    int dim = 0;                 // Fock cutoff; 0 = default_truncation(alpha_sq)
    double tail_tol = 1e-10;

    static OracleSweep standard();  // 21 points on [-6, 6]; thetas {0, 0.7, pi/2, 2.3, pi}
};

struct OracleReport {
    double max_abs_diff;
    double x1, theta1, x2, theta2;  // where the worst discrepancy occurred
};

/// Evaluate the analytic two-mode tomogram and the independent Fock-space
/// pipeline (cat x vacuum -> beam splitter -> double quadrature contraction)
/// pointwise over the sweep; report the worst absolute discrepancy.
OracleReport compare_with_oracle(const tomo::CatSource& src,
                                 const OracleSweep& sweep = OracleSweep::standard());

struct QPoint {
    double phi;  // relative phase |delta - theta2|
    double q;
    bool degenerate = false;  // conditioning failed at this phase; q is meaningless
};

/// Mandel Q of the conditional mode-c state at each relative phase, with the
/// quadrature measurement fixed at X_theta2 = x2.
std::vector<QPoint> q_curve(const tomo::CatSource& src, double x2,
                            const std::vector<double>& phis);

std::ostream& operator<<(std::ostream& os, const NormalizationReport& report);
std::ostream& operator<<(std::ostream& os, const OracleReport& report);
std::ostream& operator<<(std::ostream& os, const StrandVerdict& verdict);

}  // namespace catomo::analysis
