#include "catomo/tomogram.hpp"

#include <cmath>
#include <string>

namespace catomo::tomo {

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(kPi);
const double kQuarticRootPi = std::pow(kPi, -0.25);

Complex kernel(Complex b, double beta_sq, double x, double theta) {
    const Complex phase = std::polar(1.0, -theta);
    const Complex phase2 = std::polar(1.0, -2.0 * theta);
    const Complex br = b;
    return std::exp(Complex(-0.5 * beta_sq - 0.5 * x * x, 0.0) +
                    std::sqrt(2.0) * br * x * phase - 0.5 * br * br * phase2);
}

}  // namespace

CatSource::CatSource(double alpha_sq_, double delta_, int h_)
    : alpha_sq(alpha_sq_), delta(reduce_phase(delta_)), h(h_) {
    if (alpha_sq < 0.0) throw std::invalid_argument("CatSource: alpha_sq must be >= 0");
    if (h != 0 && h != 1) throw std::invalid_argument("CatSource: h must be 0 or 1");
}

Complex CatSource::alpha() const { return std::polar(std::sqrt(alpha_sq), delta); }

Complex CatSource::beta() const { return std::polar(std::sqrt(0.5 * alpha_sq), delta); }

double CatSource::norm_const() const {
    const double sign = (h == 0) ? 1.0 : -1.0;
    const double denom = 2.0 * (1.0 + sign * std::exp(-2.0 * alpha_sq));
    if (!(denom > 0.0)) throw std::domain_error("CatSource: odd cat undefined at alpha_sq = 0");
    return 1.0 / std::sqrt(denom);
}

Complex eta_r(const CatSource& src, int r, const QuadraturePoint& p) {
    if (r != 0 && r != 1) throw std::invalid_argument("eta_r: r must be 0 or 1");
    const Complex b = (r == 0) ? src.beta() : -src.beta();
    return kernel(b, src.beta_sq(), p.x, p.theta);
}

double two_mode_tomogram(const CatSource& src, const QuadraturePoint& p1,
                         const QuadraturePoint& p2) {
    const double sign = (src.h == 0) ? 1.0 : -1.0;
    const Complex amp = eta_r(src, 0, p1) * eta_r(src, 0, p2) +
                        sign * eta_r(src, 1, p1) * eta_r(src, 1, p2);
    const double norm_const = src.norm_const();
    return norm_const * norm_const / kPi * std::norm(amp);
}

double coherent_mode_tomogram(double beta_mag, double delta, const QuadraturePoint& p) {
    const double d = p.x - std::sqrt(2.0) * beta_mag * std::cos(delta - p.theta);
    return kInvSqrtPi * std::exp(-d * d);
}

double separable_tomogram(double beta_mag, double delta, const QuadraturePoint& p1,
                          const QuadraturePoint& p2) {
    return coherent_mode_tomogram(beta_mag, delta, p1) *
           coherent_mode_tomogram(beta_mag, delta, p2);
}

Complex coherent_quadrature_amp(Complex b, const QuadraturePoint& p) {
    return kQuarticRootPi * kernel(b, std::norm(b), p.x, p.theta);
}

ConditionalState conditional_coefficients(const CatSource& src, const QuadraturePoint& p2) {
    const Complex beta = src.beta();
    const double sign = (src.h == 0) ? 1.0 : -1.0;
    ConditionalState state;
    state.c_plus = coherent_quadrature_amp(beta, p2);
    state.c_minus = sign * coherent_quadrature_amp(-beta, p2);
    state.beta = beta;
    const double overlap = std::exp(-2.0 * std::norm(beta));  // <beta|-beta>
    const double norm_sq = std::norm(state.c_plus) + std::norm(state.c_minus) +
                           2.0 * std::real(std::conj(state.c_plus) * state.c_minus) * overlap;
    state.norm = std::sqrt(std::max(norm_sq, 0.0));
    if (state.norm < 1e-150) {
        throw DegenerateProjection("conditional_coefficients: norm underflow at x2=" +
                                   std::to_string(p2.x));
    }
    return state;
}

double conditional_density(const ConditionalState& state, const QuadraturePoint& p) {
    const Complex amp = state.c_plus * coherent_quadrature_amp(state.beta, p) +
                        state.c_minus * coherent_quadrature_amp(-state.beta, p);
    return std::norm(amp) / (state.norm * state.norm);
}

TomogramGrid conditional_tomogram(const CatSource& src, const QuadraturePoint& p2,
                                  const RealVector& theta1_axis, const RealVector& x1_axis) {
    if (theta1_axis.size() == 0 || x1_axis.size() < 2) {
        throw std::invalid_argument("conditional_tomogram: axes too small");
    }
    const Eigen::Index nx = x1_axis.size();
    const double step = (x1_axis[nx - 1] - x1_axis[0]) / static_cast<double>(nx - 1);
    for (Eigen::Index i = 0; i + 1 < nx; ++i) {
        if (std::abs((x1_axis[i + 1] - x1_axis[i]) - step) > 1e-9 * std::abs(step)) {
            throw std::invalid_argument("conditional_tomogram: x1_axis must be uniform");
        }
    }

    TomogramGrid grid{theta1_axis, x1_axis, RealMatrix(nx, theta1_axis.size()),
                      src, p2, true};
    for (Eigen::Index j = 0; j < theta1_axis.size(); ++j) {
        for (Eigen::Index i = 0; i < nx; ++i) {
            grid.values(i, j) =
                two_mode_tomogram(src, QuadraturePoint(x1_axis[i], theta1_axis[j]), p2);
        }
        const double integral = trapezoid(x1_axis, grid.values.col(j));
        if (integral < 1e-150) {
            throw DegenerateProjection("conditional_tomogram: column integral underflow at theta1=" +
                                       std::to_string(theta1_axis[j]));
        }
        grid.values.col(j) /= integral;
    }
    return grid;
}

double conditional_mandel_q(const ConditionalState& state) {
    const double beta_sq = std::norm(state.beta);
    const double overlap = std::exp(-2.0 * beta_sq);
    const double diag = std::norm(state.c_plus) + std::norm(state.c_minus);
    const double cross = 2.0 * std::real(std::conj(state.c_plus) * state.c_minus) * overlap;
    const double denom = diag + cross;
    if (denom < 1e-300) throw DegenerateProjection("conditional_mandel_q: degenerate state");
    const double mean_n = beta_sq * (diag - cross) / denom;
    if (mean_n < 1e-12) throw ZeroMeanPhotons("conditional_mandel_q: undefined for <n> ~ 0");
    return beta_sq * beta_sq / mean_n - mean_n;
}

}  // namespace catomo::tomo
