#pragma once

#include <optional>

#include "catomo/errors.hpp"
#include "catomo/types.hpp"

namespace catomo::tomo {

// Closed-form optical tomograms of the two-mode state produced by splitting an
// even/odd coherent state on a 50/50 beam splitter with vacuum in the idle port:
//
//   |Phi_h> = N_h [ |beta>|beta> + e^{i pi h} |-beta>|-beta> ],  beta = alpha/sqrt(2).
//
// All formulas use the quadrature convention of catomo::fock (vacuum variance
// 1/2), under which a coherent state's tomogram is the unit-variance Gaussian
// ridge (1/sqrt(pi)) exp[-(X - sqrt(2)|beta| cos(delta-theta))^2].
//
// Pure functions over immutable values; grid points are independent and may be
// evaluated in parallel.

/// Input-state knobs: |alpha|^2, the phase delta of alpha, and the parity h.
struct CatSource {
    CatSource(double alpha_sq, double delta, int h);

    double alpha_sq;  // |alpha|^2 >= 0
    double delta;     // stored reduced into [0, 2*pi)
    int h;            // 0 even, 1 odd

    Complex alpha() const;
    Complex beta() const;                 // alpha / sqrt(2)
    double beta_sq() const { return 0.5 * alpha_sq; }
    /// Normalization N_h = [2(1 + (-1)^h e^{-2|alpha|^2})]^{-1/2}.
    double norm_const() const;
};

/// A homodyne outcome: quadrature value X at local-oscillator phase theta.
struct QuadraturePoint {
    QuadraturePoint(double x_, double theta_) : x(x_), theta(reduce_phase(theta_)) {}
    double x;
    double theta;  // reduced into [0, 2*pi)
};

/// Sampled tomogram omega(X, theta) with its generating parameters.
struct TomogramGrid {
    RealVector theta_axis;  // strictly increasing
    RealVector x_axis;      // strictly increasing, uniform
    RealMatrix values;      // values(i, j) = omega(x_axis[i], theta_axis[j]) >= 0
    CatSource source;
    std::optional<QuadraturePoint> conditioning;
    bool column_normalized = false;  // each theta column integrates to 1
};

/// Conditional state on mode c after measuring X_theta2 on mode d:
/// proportional to c_plus |beta> + c_minus |-beta>.
struct ConditionalState {
    Complex c_plus;
    Complex c_minus;
    Complex beta;
    double norm;  // sqrt(|c+|^2 + |c-|^2 + 2 Re[conj(c+) c-] e^{-2|beta|^2})
};

/// Single-component kernel eta_r = exp(-|b|^2/2 - X^2/2 + sqrt(2) b_r X e^{-i theta}
/// - b_r^2 e^{-2 i theta}/2) with b_r = beta e^{i pi r}.
Complex eta_r(const CatSource& src, int r, const QuadraturePoint& p);

/// Joint tomogram omega_h(X1,theta1; X2,theta2) =
/// (N_h^2/pi) |sum_r e^{-i pi r h} eta_r(p1) eta_r(p2)|^2.
double two_mode_tomogram(const CatSource& src, const QuadraturePoint& p1,
                         const QuadraturePoint& p2);

/// Coherent-state tomogram: (1/sqrt(pi)) exp[-(X - sqrt(2) beta_mag cos(delta-theta))^2].
double coherent_mode_tomogram(double beta_mag, double delta, const QuadraturePoint& p);

/// Tomogram of the separable output |beta>|beta>: the product of the two
/// single-mode factors.
double separable_tomogram(double beta_mag, double delta, const QuadraturePoint& p1,
                          const QuadraturePoint& p2);

/// Quadrature amplitude <x,theta|b> of a coherent state |b> (equals
/// pi^{-1/4} eta_r with b = beta_r).
Complex coherent_quadrature_amp(Complex b, const QuadraturePoint& p);

/// Superposition coefficients of the mode-c state conditioned on measuring p2
/// in mode d. Throws DegenerateProjection if the norm underflows (< 1e-150).
ConditionalState conditional_coefficients(const CatSource& src, const QuadraturePoint& p2);

/// Quadrature density |<x,theta|phi>|^2 of a ConditionalState.
double conditional_density(const ConditionalState& state, const QuadraturePoint& p);

/// Grid of omega_h(X1,theta1; X2,theta2) over the given axes, each theta1
/// column normalized to unit trapezoid integral (the conditional density of
/// mode c per local-oscillator phase).
TomogramGrid conditional_tomogram(const CatSource& src, const QuadraturePoint& p2,
                                  const RealVector& theta1_axis, const RealVector& x1_axis);

/// Closed-form Mandel Q of c+|beta> + c-|-beta>, via a|+-beta> = +-beta|+-beta>:
/// Q = |beta|^4/<n> - <n>.
double conditional_mandel_q(const ConditionalState& state);

}  // namespace catomo::tomo
