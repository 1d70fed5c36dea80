#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace catomo {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an arbitrary real phase into [0, 2*pi).
inline double reduce_phase(double theta) {
    double r = std::fmod(theta, kTwoPi);
    return r < 0.0 ? r + kTwoPi : r;
}

/// Evenly spaced samples on [lo, hi], endpoints included. n >= 2.
RealVector linspace(double lo, double hi, int n);

/// n samples of [0, 2*pi): k * 2*pi/n for k = 0..n-1.
RealVector phase_axis(int n);

/// Trapezoid rule over a uniformly spaced axis.
double trapezoid(const RealVector& x_axis, const Eigen::Ref<const RealVector>& values);

}  // namespace catomo
