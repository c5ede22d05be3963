#pragma once

#include <random>

#include "holex/types.hpp"

namespace holex::test {

/// Uniform draw from the closed ball of C^2 of the given radius.
inline ComplexPoint2 random_ball_point(std::mt19937& rng, double radius = 1.0) {
    std::normal_distribution<double> gauss;
    ComplexPoint2 dir{{gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}};
    const double n = norm(dir);
    if (n == 0.0) return {0.0, 0.0};
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double r = radius * std::pow(uni(rng), 0.25);
    return (r / n) * dir;
}

/// Uniform point on the unit sphere of C^2.
inline ComplexPoint2 random_sphere_point(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    ComplexPoint2 dir{{gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}};
    const double n = norm(dir);
    return (1.0 / n) * dir;
}

inline cplx random_unit(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(1.0, uni(rng));
}

inline cplx random_disc(std::mt19937& rng, double radius = 1.0) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    return std::polar(radius * std::sqrt(uni(rng)), 2.0 * 3.14159265358979323846 * uni(rng));
}

}  // namespace holex::test
