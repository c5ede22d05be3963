#pragma once

#include <functional>
#include <string>
#include <vector>

#include "holex/quadrature.hpp"
#include "holex/types.hpp"

namespace holex {

/// A function on the unit sphere of C^2, evaluated at points (z, w) with
/// |z|^2 + |w|^2 = 1.
struct BoundaryFunction {
    std::string name;
    std::function<cplx(cplx, cplx)> eval;

    cplx operator()(cplx z, cplx w) const { return eval(z, w); }
};

/// n-th rotational Fourier coefficient of f in the w-phase,
/// c_n(z) = (1-|z|^2)^{-n/2} (1/2pi) int e^{-in theta} f(z, e^{i theta} sqrt(1-|z|^2)) dtheta,
/// by uniform periodic quadrature of the given order (exact for trigonometric
/// polynomials of theta-degree < order - |n|).
///
/// Requires |z| < 1 and order >= 2|n| + 8. For n > 0 the normalization
/// (1-|z|^2)^{-n/2} amplifies roundoff near the boundary; evaluations with
/// (1-|z|^2)^{n/2} < 1e-12 are refused with std::domain_error.
cplx slice_coefficient(const BoundaryFunction& f, int n, cplx z, int order);

/// All coefficients n in [n_min, n_max] from a single sampling pass.
std::vector<cplx> slice_coefficients_range(const BoundaryFunction& f, cplx z, int order,
                                           int n_min, int n_max);

/// The averaging operator: Psi_n(z, w) = (1/2pi) int e^{-in theta} f(z, w e^{i theta}) dtheta,
/// an evaluatable boundary function satisfying Psi_n(z, w) = w^n c_n(z) for w != 0.
BoundaryFunction averaged_function(const BoundaryFunction& f, int n, int order = defaults::order);

/// Slice coefficients sampled on concentric circles of the disc.
struct SliceCoefficients {
    int n_min = 0, n_max = 0;
    int order = 0;
    std::vector<double> radii;
    int nodes_per_circle = 0;
    // values[(n - n_min) * radii.size() * nodes + ci * nodes + j]
    std::vector<cplx> values;

    cplx at(int n, size_t circle_index, int node) const {
        const size_t nodes = static_cast<size_t>(nodes_per_circle);
        return values[(static_cast<size_t>(n - n_min) * radii.size() + circle_index) * nodes +
                      static_cast<size_t>(node)];
    }
};

SliceCoefficients build_slice_coefficients(const BoundaryFunction& f, int n_min, int n_max,
                                           const std::vector<double>& radii, int order,
                                           int nodes_per_circle);

/// Convergence probe for c_n toward the boundary |z| = 1: computes
/// phi -> c_n(sqrt(1-R^2) e^{i phi}) on a uniform phi-grid for each R of a
/// decreasing sequence and reports successive sup-norm differences.
struct ConvergenceReport {
    int n = 0;
    int order = 0;
    int phi_grid = 0;
    std::vector<double> radii;      // the R sequence
    std::vector<double> sup_diffs;  // size radii.size() - 1
    bool monotone = false;          // strictly decreasing differences
    double final_diff = 0.0;
};

ConvergenceReport boundary_limit_probe(const BoundaryFunction& f, int n,
                                       const std::vector<double>& R_sequence, int phi_grid,
                                       int order);

}  // namespace holex
