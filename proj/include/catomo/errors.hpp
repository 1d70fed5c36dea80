#pragma once

#include <stdexcept>
#include <string>

namespace catomo {

/// Requested Fock cutoff leaves more probability mass in the tail than allowed.
struct TruncationTooSmall : std::runtime_error {
    explicit TruncationTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature projection weight underflowed; the conditional state is undefined.
struct DegenerateProjection : std::runtime_error {
    explicit DegenerateProjection(const std::string& what) : std::runtime_error(what) {}
};

/// Mandel Q is undefined for states with vanishing mean photon number.
struct ZeroMeanPhotons : std::runtime_error {
    explicit ZeroMeanPhotons(const std::string& what) : std::runtime_error(what) {}
};

/// Grid has no usable data (no points, or an identically zero column).
struct EmptyGrid : std::runtime_error {
    explicit EmptyGrid(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace catomo
