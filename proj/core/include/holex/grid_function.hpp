#pragma once

#include <array>
#include <string>
#include <vector>

#include "holex/slicing.hpp"
#include "holex/types.hpp"

namespace holex {

/// Boundary function sampled on a product grid: (x, y) in the closed disc
/// times a uniform theta grid, with w = e^{i theta} sqrt(1 - x^2 - y^2).
/// Rows are (x, y, theta, re_f, im_f); the CSV form carries a mandatory
/// header "x,y,theta,re_f,im_f" and the JSON form an array of objects with
/// the same fields.
///
/// Evaluation uses trigonometric interpolation in theta and bilinear
/// interpolation in (x, y).
class BoundaryGrid {
public:
    static BoundaryGrid read_csv(const std::string& path);
    static BoundaryGrid read_json(const std::string& path);
    /// Dispatches on the file extension (.csv / .json).
    static BoundaryGrid read_file(const std::string& path);

    /// Samples a boundary function on an nxy-by-nxy grid of [-1,1]^2
    /// restricted to the closed disc, with ntheta uniform phase nodes.
    static BoundaryGrid sample(const BoundaryFunction& f, int nxy, int ntheta);

    void write_csv(const std::string& path) const;

    BoundaryFunction evaluator() const;

    /// Crude recorded bound: max nearest-neighbor variation in x and y plus
    /// the top retained theta-mode magnitude.
    double interpolation_error_bound() const;

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    int n_theta() const { return n_theta_; }

private:
    std::vector<double> xs_, ys_;
    int n_theta_ = 0;
    // Fourier coefficients in theta per grid node, frequencies
    // -n_theta/2 .. n_theta/2 - 1; empty slot if the node is off the disc.
    std::vector<std::vector<cplx>> coeffs_;
    std::vector<char> present_;

    size_t node_index(size_t ix, size_t iy) const { return ix * ys_.size() + iy; }
    void finalize(std::vector<std::vector<cplx>> raw_values);
    friend BoundaryGrid parse_rows(std::vector<std::array<double, 5>> rows);
};

/// Convenience: loads a grid file and wraps its evaluator.
BoundaryFunction boundary_function_from_grid_file(const std::string& path);

}  // namespace holex
