#pragma once

#include <span>
#include <vector>

#include "holex/types.hpp"

namespace holex {

/// Uniform nodes on the unit circle and the discrete Fourier coefficients
/// they induce. The periodic trapezoid rule on these nodes is spectrally
/// accurate for smooth integrands and exact for trigonometric polynomials
/// of degree < order - |freq|.
///
/// For orders divisible by 4 the node table is built by quadrant reflection,
/// so node[j + order/2] == -node[j] holds exactly in floating point.
class Quadrature {
public:
    explicit Quadrature(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<cplx>& nodes() const { return nodes_; }

    /// e^{2 pi i k / order} for any integer k, via index reduction.
    cplx root(long long k) const;

    /// (1/N) sum_j g_j e^{-i freq theta_j} for samples g_j at theta_j = 2 pi j / N.
    cplx coefficient(std::span<const cplx> samples, int freq) const;

private:
    std::vector<cplx> nodes_;
};

}  // namespace holex
