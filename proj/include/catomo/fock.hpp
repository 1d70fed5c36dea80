#pragma once

#include "catomo/errors.hpp"
#include "catomo/types.hpp"

namespace catomo::fock {

// Truncated Fock-space numerics for one and two bosonic modes.
//
// Conventions used throughout:
//   * quadrature  X_theta = q cos(theta) + p sin(theta), vacuum variance 1/2,
//     so <X_theta|n> = exp(-i n theta) * psi_n(X) with psi_n the standard
//     dimensionless oscillator eigenfunction (2^n n! sqrt(pi))^{-1/2} H_n(X) e^{-X^2/2};
//   * the 50/50 beam splitter mixes modes so that a coherent state in the first
//     port with vacuum in the second maps to two equal coherent states:
//     |alpha>|0> -> |alpha/sqrt(2)>|alpha/sqrt(2)>.
//
// States carry their exact (untruncated) amplitudes on the retained basis, so a
// normalized state has squared norm in [1 - tail_tol, 1].
//
// Everything here is a pure function of its arguments; values are safe to share
// across threads.

/// Fock cutoff: basis {|0>, ..., |dim-1>} with a bound on the discarded mass.
struct TruncationSpec {
    int dim = 0;
    double tail_tol = 1e-10;
};

/// Cutoff wide enough for states with mean photon number up to `mean_photons`:
/// dim = ceil(2*mean + 10*sqrt(mean) + 20), tail_tol 1e-10.
TruncationSpec default_truncation(double mean_photons);

using FockVector = ComplexVector;   // single-mode amplitudes c_n
using TwoModeFock = ComplexMatrix;  // two-mode amplitudes c_{mn} on |m>_c |n>_d

/// Coherent state |beta>, amplitudes e^{-|b|^2/2} b^n / sqrt(n!).
/// Throws TruncationTooSmall if the discarded tail mass reaches spec.tail_tol.
FockVector make_coherent(Complex beta, const TruncationSpec& spec);

/// Even (h=0) or odd (h=1) coherent superposition N_h [|alpha> + e^{i pi h}|-alpha>].
FockVector make_cat(Complex alpha, int h, const TruncationSpec& spec);

/// Number state |n>.
FockVector make_fock(int n, const TruncationSpec& spec);

/// Two-mode product state c_{mn} = a_m b_n.
TwoModeFock product_state(const FockVector& a, const FockVector& b);

/// 50/50 beam splitter, applied exactly block-by-block (total photon number is
/// conserved; each block undergoes a real orthogonal rotation). Amplitudes in
/// blocks with total photons >= dim are rotated within the stored window.
TwoModeFock apply_beam_splitter(const TwoModeFock& input);

/// Oscillator eigenfunctions psi_0..psi_{dim-1} at x, by the normalized
/// three-term recurrence (no factorial overflow).
RealVector hermite_functions(int dim, double x);

/// <X_theta = x | n>.
Complex quadrature_amp(int n, double x, double theta);

/// Row vector <x,theta|n> for n = 0..dim-1.
ComplexVector quadrature_row(int dim, double x, double theta);

/// Matrix Q(n, i) = <x_i, theta | n> over a whole x axis.
ComplexMatrix quadrature_rows(int dim, const RealVector& xs, double theta);

/// Quadrature probability density |<x,theta|psi>|^2.
double quadrature_density(const FockVector& state, double x, double theta);

/// Joint quadrature density |<x1,t1|<x2,t2|Psi>|^2 of a two-mode state.
double quadrature_density(const TwoModeFock& state, double x1, double theta1, double x2,
                          double theta2);

enum class Mode { c, d };

/// Result of projecting one mode onto a quadrature eigenstate: the unnormalized
/// vector left on the other mode and its squared norm (the marginal density).
struct Projection {
    FockVector vector;
    double weight = 0.0;
};

/// Contract `mode` of the state with <x,theta|. Throws DegenerateProjection
/// when the weight underflows (< 1e-300).
Projection project_quadrature(const TwoModeFock& state, Mode mode, double x, double theta);

/// Mean photon number <n> (state renormalized internally).
double mean_photons(const FockVector& state);

/// Mandel Q = (<n^2> - <n>^2)/<n> - 1. Throws ZeroMeanPhotons for <n> ~ 0.
double mandel_q(const FockVector& state);

/// Reduced density matrix of mode c: rho = A A^dagger.
ComplexMatrix reduced_density(const TwoModeFock& state);

/// Entanglement entropy of the c|d split in bits: -sum lambda log2 lambda over
/// eigenvalues of the reduced density above 1e-14.
double entanglement_entropy(const TwoModeFock& state);

}  // namespace catomo::fock
