#include "catomo/types.hpp"

#include <stdexcept>

namespace catomo {

RealVector linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
    if (!(lo < hi)) throw std::invalid_argument("linspace: lo must be < hi");
    RealVector v(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) v[i] = lo + i * step;
    v[n - 1] = hi;
    return v;
}

RealVector phase_axis(int n) {
    if (n < 1) throw std::invalid_argument("phase_axis: need at least 1 point");
    RealVector v(n);
    for (int i = 0; i < n; ++i) v[i] = i * (kTwoPi / n);
    return v;
}

double trapezoid(const RealVector& x_axis, const Eigen::Ref<const RealVector>& values) {
    const Eigen::Index n = x_axis.size();
    if (n != values.size()) throw std::invalid_argument("trapezoid: size mismatch");
    if (n < 2) return 0.0;
    const double step = (x_axis[n - 1] - x_axis[0]) / static_cast<double>(n - 1);
    return step * (values.sum() - 0.5 * (values[0] + values[n - 1]));
}

}  // namespace catomo
