#include "holex/slicing.hpp"

#include <stdexcept>

namespace holex {

namespace {

void check_order(int n, int order) {
    if (order < 2 * std::abs(n) + 8)
        throw std::invalid_argument("slice_coefficient: order must be at least 2|n| + 8");
}

std::vector<cplx> ring_samples(const BoundaryFunction& f, cplx z, double rho,
                               const Quadrature& quad) {
    std::vector<cplx> g(static_cast<size_t>(quad.order()));
    for (int j = 0; j < quad.order(); ++j)
        g[static_cast<size_t>(j)] = f(z, rho * quad.nodes()[static_cast<size_t>(j)]);
    return g;
}

double rho_of(cplx z) {
    const double one_minus = 1.0 - std::norm(z);
    if (one_minus <= 0.0)
        throw std::domain_error("slice_coefficient: |z| must be < 1");
    return std::sqrt(one_minus);
}

cplx normalized_coefficient(const std::vector<cplx>& g, const Quadrature& quad, int n,
                            double rho) {
    const cplx fourier = quad.coefficient(g, n);
    if (n == 0) return fourier;
    if (n > 0) {
        const double amp = ipow(rho, n).real();
        if (amp < 1e-12)
            throw std::domain_error(
                "slice_coefficient: (1-|z|^2)^{n/2} below 1e-12; evaluation refused");
        return fourier / amp;
    }
    return fourier * ipow(rho, -n);
}

}  // namespace

cplx slice_coefficient(const BoundaryFunction& f, int n, cplx z, int order) {
    check_order(n, order);
    const double rho = rho_of(z);
    const Quadrature quad(order);
    const std::vector<cplx> g = ring_samples(f, z, rho, quad);
    return normalized_coefficient(g, quad, n, rho);
}

std::vector<cplx> slice_coefficients_range(const BoundaryFunction& f, cplx z, int order,
                                           int n_min, int n_max) {
    if (n_min > n_max) throw std::invalid_argument("slice_coefficients_range: empty range");
    check_order(std::max(std::abs(n_min), std::abs(n_max)), order);
    const double rho = rho_of(z);
    const Quadrature quad(order);
    const std::vector<cplx> g = ring_samples(f, z, rho, quad);
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n)
        out.push_back(normalized_coefficient(g, quad, n, rho));
    return out;
}

BoundaryFunction averaged_function(const BoundaryFunction& f, int n, int order) {
    auto base = f.eval;
    const Quadrature quad(order);
    auto nodes = quad;  // copy captured by value
    return {"Psi_" + std::to_string(n) + "[" + f.name + "]",
            [base, n, nodes](cplx z, cplx w) -> cplx {
                cplx acc = 0.0;
                const int N = nodes.order();
                for (long long j = 0; j < N; ++j) {
                    const cplx rot = nodes.nodes()[static_cast<size_t>(j)];
                    acc += base(z, w * rot) * nodes.root(-static_cast<long long>(n) * j);
                }
                return acc / static_cast<double>(N);
            }};
}

SliceCoefficients build_slice_coefficients(const BoundaryFunction& f, int n_min, int n_max,
                                           const std::vector<double>& radii, int order,
                                           int nodes_per_circle) {
    SliceCoefficients sc;
    sc.n_min = n_min;
    sc.n_max = n_max;
    sc.order = order;
    sc.radii = radii;
    sc.nodes_per_circle = nodes_per_circle;
    const Quadrature ring(nodes_per_circle);
    const size_t total = static_cast<size_t>(n_max - n_min + 1) * radii.size() *
                         static_cast<size_t>(nodes_per_circle);
    sc.values.resize(total);
    for (size_t ci = 0; ci < radii.size(); ++ci) {
        for (int j = 0; j < nodes_per_circle; ++j) {
            const cplx z = radii[ci] * ring.nodes()[static_cast<size_t>(j)];
            const std::vector<cplx> cs = slice_coefficients_range(f, z, order, n_min, n_max);
            for (int n = n_min; n <= n_max; ++n) {
                const size_t idx =
                    (static_cast<size_t>(n - n_min) * radii.size() + ci) *
                        static_cast<size_t>(nodes_per_circle) +
                    static_cast<size_t>(j);
                sc.values[idx] = cs[static_cast<size_t>(n - n_min)];
            }
        }
    }
    return sc;
}

ConvergenceReport boundary_limit_probe(const BoundaryFunction& f, int n,
                                       const std::vector<double>& R_sequence, int phi_grid,
                                       int order) {
    if (R_sequence.size() < 2)
        throw std::invalid_argument("boundary_limit_probe: need at least two radii");
    for (size_t i = 1; i < R_sequence.size(); ++i)
        if (!(R_sequence[i] < R_sequence[i - 1]) || R_sequence[i] <= 0.0)
            throw std::invalid_argument(
                "boundary_limit_probe: R sequence must be strictly decreasing and positive");

    ConvergenceReport rep;
    rep.n = n;
    rep.order = order;
    rep.phi_grid = phi_grid;
    rep.radii = R_sequence;

    const Quadrature phi(phi_grid);
    std::vector<cplx> prev, cur(static_cast<size_t>(phi_grid));
    for (double R : R_sequence) {
        const double zr = std::sqrt(1.0 - R * R);
        for (int j = 0; j < phi_grid; ++j)
            cur[static_cast<size_t>(j)] =
                slice_coefficient(f, n, zr * phi.nodes()[static_cast<size_t>(j)], order);
        if (!prev.empty()) {
            double sup = 0.0;
            for (int j = 0; j < phi_grid; ++j)
                sup = std::max(sup,
                               std::abs(cur[static_cast<size_t>(j)] - prev[static_cast<size_t>(j)]));
            rep.sup_diffs.push_back(sup);
        }
        prev = cur;
    }
    rep.monotone = true;
    for (size_t i = 1; i < rep.sup_diffs.size(); ++i)
        if (!(rep.sup_diffs[i] < rep.sup_diffs[i - 1])) rep.monotone = false;
    rep.final_diff = rep.sup_diffs.back();
    return rep;
}

}  // namespace holex
