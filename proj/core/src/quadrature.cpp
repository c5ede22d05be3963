#include "holex/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace holex {

Quadrature::Quadrature(int order) {
    if (order < 4) throw std::invalid_argument("Quadrature: order must be at least 4");
    nodes_.resize(order);
    const double step = 2.0 * std::numbers::pi / order;
    if (order % 4 == 0) {
        const int quarter = order / 4;
        nodes_[0] = {1.0, 0.0};
        nodes_[2 * quarter] = {-1.0, 0.0};
        nodes_[quarter] = {0.0, 1.0};
        nodes_[3 * quarter] = {0.0, -1.0};
        for (int j = 1; j < quarter; ++j) {
            const double c = std::cos(step * j);
            const double s = std::sin(step * j);
            nodes_[j] = {c, s};
            nodes_[2 * quarter - j] = {-c, s};
            nodes_[2 * quarter + j] = {-c, -s};
            nodes_[order - j] = {c, -s};
        }
    } else {
        for (int j = 0; j < order; ++j)
            nodes_[j] = {std::cos(step * j), std::sin(step * j)};
    }
}

cplx Quadrature::root(long long k) const {
    const long long n = order();
    long long m = k % n;
    if (m < 0) m += n;
    return nodes_[static_cast<size_t>(m)];
}

cplx Quadrature::coefficient(std::span<const cplx> samples, int freq) const {
    const long long n = order();
    if (static_cast<long long>(samples.size()) != n)
        throw std::invalid_argument("Quadrature::coefficient: sample count != order");
    cplx acc = 0.0;
    for (long long j = 0; j < n; ++j)
        acc += samples[static_cast<size_t>(j)] * root(-static_cast<long long>(freq) * j);
    return acc / static_cast<double>(n);
}

}  // namespace holex
