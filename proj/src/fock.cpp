#include "catomo/fock.hpp"

#include <cmath>
#include <string>

namespace catomo::fock {

namespace {

void check_spec(const TruncationSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("TruncationSpec: dim must be >= 1");
    if (!(spec.tail_tol > 0.0)) throw std::invalid_argument("TruncationSpec: tail_tol must be > 0");
}

void check_tail(const ComplexVector& amps, const TruncationSpec& spec, const char* what) {
    const double tail = std::max(0.0, 1.0 - amps.squaredNorm());
    if (tail >= spec.tail_tol) {
        throw TruncationTooSmall(std::string(what) + ": dim=" + std::to_string(spec.dim) +
                                 " leaves tail mass " + std::to_string(tail));
    }
}

// Unnormalized-by-truncation coherent amplitudes e^{-|b|^2/2} b^n / sqrt(n!).
ComplexVector coherent_amps(Complex beta, int dim) {
    ComplexVector amps(dim);
    Complex c = std::exp(Complex(-0.5 * std::norm(beta), 0.0));
    for (int n = 0; n < dim; ++n) {
        amps[n] = c;
        c *= beta / std::sqrt(static_cast<double>(n + 1));
    }
    return amps;
}

}  // namespace

TruncationSpec default_truncation(double mean_photons) {
    if (mean_photons < 0.0) throw std::invalid_argument("default_truncation: negative mean");
    const int dim =
        static_cast<int>(std::ceil(2.0 * mean_photons + 10.0 * std::sqrt(mean_photons) + 20.0));
    return TruncationSpec{dim, 1e-10};
}

FockVector make_coherent(Complex beta, const TruncationSpec& spec) {
    check_spec(spec);
    FockVector amps = coherent_amps(beta, spec.dim);
    check_tail(amps, spec, "make_coherent");
    return amps;
}

FockVector make_cat(Complex alpha, int h, const TruncationSpec& spec) {
    check_spec(spec);
    if (h != 0 && h != 1) throw std::invalid_argument("make_cat: h must be 0 or 1");
    const double a2 = std::norm(alpha);
    const double sign = (h == 0) ? 1.0 : -1.0;
    const double denom = 2.0 * (1.0 + sign * std::exp(-2.0 * a2));
    if (!(denom > 0.0)) throw std::domain_error("make_cat: odd cat undefined at alpha = 0");
    const double norm_const = 1.0 / std::sqrt(denom);

    FockVector amps = coherent_amps(alpha, spec.dim);
    for (int n = 0; n < spec.dim; ++n) {
        // |alpha> + (-1)^h |-alpha> keeps only amplitudes with n = h (mod 2).
        amps[n] = (n % 2 == h) ? 2.0 * norm_const * amps[n] : Complex(0.0, 0.0);
    }
    check_tail(amps, spec, "make_cat");
    return amps;
}

FockVector make_fock(int n, const TruncationSpec& spec) {
    check_spec(spec);
    if (n < 0 || n >= spec.dim) {
        throw TruncationTooSmall("make_fock: n=" + std::to_string(n) + " outside dim=" +
                                 std::to_string(spec.dim));
    }
    FockVector amps = FockVector::Zero(spec.dim);
    amps[n] = 1.0;
    return amps;
}

TwoModeFock product_state(const FockVector& a, const FockVector& b) {
    return a * b.transpose();
}

TwoModeFock apply_beam_splitter(const TwoModeFock& input) {
    const Eigen::Index dim = input.rows();
    if (dim < 1 || input.cols() != dim) {
        throw std::invalid_argument("apply_beam_splitter: state must be square and nonempty");
    }

    TwoModeFock out = TwoModeFock::Zero(dim, dim);
    const int max_total = static_cast<int>(2 * dim - 2);

    // Columns of block N hold U|m, N-m> in the number basis of the first mode.
    // They are grown from block N-1 by applying one more creation operator:
    //   |m, n>   = a^dag / sqrt(m) |m-1, n>,  a^dag -> (a^dag + b^dag)/sqrt(2)
    //   |0, n>   = b^dag / sqrt(n) |0, n-1>,  b^dag -> (b^dag - a^dag)/sqrt(2)
    RealMatrix prev(1, 1);
    prev(0, 0) = 1.0;

    for (int total = 0; total <= max_total; ++total) {
        RealMatrix block;
        if (total == 0) {
            block = prev;
        } else {
            block = RealMatrix::Zero(total + 1, total + 1);
            const double inv_sqrt2n = 1.0 / std::sqrt(2.0 * total);
            for (int k = 0; k < total; ++k) {
                const double c = prev(k, 0);
                if (c == 0.0) continue;
                block(k, 0) += c * std::sqrt(static_cast<double>(total - k)) * inv_sqrt2n;
                block(k + 1, 0) -= c * std::sqrt(static_cast<double>(k + 1)) * inv_sqrt2n;
            }
            for (int m = 1; m <= total; ++m) {
                const double inv_sqrt2m = 1.0 / std::sqrt(2.0 * m);
                for (int k = 0; k < total; ++k) {
                    const double c = prev(k, m - 1);
                    if (c == 0.0) continue;
                    block(k, m) += c * std::sqrt(static_cast<double>(total - k)) * inv_sqrt2m;
                    block(k + 1, m) += c * std::sqrt(static_cast<double>(k + 1)) * inv_sqrt2m;
                }
            }
        }

        // Rotate the stored window of this block.
        const int klo = std::max(0, total - static_cast<int>(dim) + 1);
        const int khi = std::min(total, static_cast<int>(dim) - 1);
        const int width = khi - klo + 1;
        ComplexVector in_block(width);
        for (int k = klo; k <= khi; ++k) in_block[k - klo] = input(k, total - k);
        if (in_block.squaredNorm() > 0.0) {
            ComplexVector out_block =
                block.block(klo, klo, width, width).cast<Complex>() * in_block;
            for (int k = klo; k <= khi; ++k) out(k, total - k) = out_block[k - klo];
        }
        prev = std::move(block);
    }
    return out;
}

RealVector hermite_functions(int dim, double x) {
    if (dim < 1) throw std::invalid_argument("hermite_functions: dim must be >= 1");
    RealVector h(dim);
    h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    if (dim > 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (int n = 1; n + 1 < dim; ++n) {
        h[n + 1] = x * std::sqrt(2.0 / (n + 1)) * h[n] - std::sqrt(n / (n + 1.0)) * h[n - 1];
    }
    return h;
}

Complex quadrature_amp(int n, double x, double theta) {
    if (n < 0) throw std::invalid_argument("quadrature_amp: n must be >= 0");
    const RealVector h = hermite_functions(n + 1, x);
    return std::polar(h[n], -n * theta);
}

ComplexVector quadrature_row(int dim, double x, double theta) {
    const RealVector h = hermite_functions(dim, x);
    ComplexVector row(dim);
    for (int n = 0; n < dim; ++n) row[n] = std::polar(h[n], -n * theta);
    return row;
}

ComplexMatrix quadrature_rows(int dim, const RealVector& xs, double theta) {
    ComplexMatrix q(dim, xs.size());
    for (Eigen::Index i = 0; i < xs.size(); ++i) q.col(i) = quadrature_row(dim, xs[i], theta);
    return q;
}

double quadrature_density(const FockVector& state, double x, double theta) {
    const ComplexVector row = quadrature_row(static_cast<int>(state.size()), x, theta);
    return std::norm(row.cwiseProduct(state).sum());
}

double quadrature_density(const TwoModeFock& state, double x1, double theta1, double x2,
                          double theta2) {
    const ComplexVector q1 = quadrature_row(static_cast<int>(state.rows()), x1, theta1);
    const ComplexVector q2 = quadrature_row(static_cast<int>(state.cols()), x2, theta2);
    const ComplexVector contracted = state * q2;
    return std::norm(q1.cwiseProduct(contracted).sum());
}

Projection project_quadrature(const TwoModeFock& state, Mode mode, double x, double theta) {
    Projection result;
    if (mode == Mode::c) {
        const ComplexVector q = quadrature_row(static_cast<int>(state.rows()), x, theta);
        result.vector = state.transpose() * q;
    } else {
        const ComplexVector q = quadrature_row(static_cast<int>(state.cols()), x, theta);
        result.vector = state * q;
    }
    result.weight = result.vector.squaredNorm();
    if (result.weight < 1e-300) {
        throw DegenerateProjection("project_quadrature: weight underflow at x=" +
                                   std::to_string(x) + ", theta=" + std::to_string(theta));
    }
    return result;
}

double mean_photons(const FockVector& state) {
    const double norm2 = state.squaredNorm();
    if (!(norm2 > 0.0)) throw std::invalid_argument("mean_photons: zero state");
    double n1 = 0.0;
    for (Eigen::Index n = 0; n < state.size(); ++n) n1 += n * std::norm(state[n]);
    return n1 / norm2;
}

double mandel_q(const FockVector& state) {
    const double norm2 = state.squaredNorm();
    if (!(norm2 > 0.0)) throw std::invalid_argument("mandel_q: zero state");
    double n1 = 0.0;
    double n2 = 0.0;
    for (Eigen::Index n = 0; n < state.size(); ++n) {
        const double p = std::norm(state[n]);
        n1 += n * p;
        n2 += static_cast<double>(n) * n * p;
    }
    n1 /= norm2;
    n2 /= norm2;
    if (n1 < 1e-12) throw ZeroMeanPhotons("mandel_q: undefined for <n> ~ 0");
    return (n2 - n1 * n1) / n1 - 1.0;
}

ComplexMatrix reduced_density(const TwoModeFock& state) {
    return state * state.adjoint();
}

double entanglement_entropy(const TwoModeFock& state) {
    const ComplexMatrix rho = reduced_density(state);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
    const RealVector eigenvalues = solver.eigenvalues();
    const double trace = eigenvalues.sum();
    if (!(trace > 0.0)) throw std::invalid_argument("entanglement_entropy: zero state");
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double p = eigenvalues[i] / trace;
        if (p > 1e-14) entropy -= p * std::log2(p);
    }
    return std::max(entropy, 0.0);
}

}  // namespace catomo::fock
