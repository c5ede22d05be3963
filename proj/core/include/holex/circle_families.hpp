#pragma once

#include <string>
#include <vector>

#include "holex/geometry.hpp"
#include "holex/types.hpp"

namespace holex {

/// One of the circle families in the closed unit disc used by the
/// extendibility machinery. Each spec describes a pair of one-parameter
/// sub-families.
struct FamilySpec {
    enum class Kind {
        two_boundary_points,       // circles through alpha and circles through beta, |alpha|=|beta|=1
        concentric_and_through_one,// circles centered at 0 and circles through 1
        concentric_and_moebius,    // circles centered at 0 and their images under z -> (t-z)/(1-tz)
        moebius_pair               // Moebius images of concentric circles, centers alpha and beta in the disc
    };
    Kind kind = Kind::concentric_and_through_one;
    cplx alpha{}, beta{};
    double t = 0.0;

    static FamilySpec two_boundary_points(cplx alpha, cplx beta);
    static FamilySpec concentric_and_through_one();
    static FamilySpec concentric_and_moebius(double t);
    static FamilySpec moebius_pair(cplx alpha, cplx beta);

    std::string describe() const;
};

struct SampledCircle {
    Circle circle{};
    int subfamily = 0;     // 0 or 1, matching the order in the spec
    double parameter = 0;  // the R, T, or center parameter that produced it
};

struct FamilySample {
    FamilySpec spec{};
    std::vector<SampledCircle> circles;
};

/// Samples `density` circles per sub-family, uniformly in the family
/// parameter over its range. Every returned circle lies in the closed unit
/// disc. Throws std::invalid_argument for malformed specs.
FamilySample enumerate_family(const FamilySpec& spec, int density);

/// Signed distance |point - center| - radius: negative inside, zero on the
/// circle, positive outside.
double circle_membership(const Circle& c, cplx point);

/// True when the closed disc of `inner_c` lies inside the open disc of `outer`.
bool surrounds(const Circle& outer, const Circle& inner_c);

/// Image of the concentric circle |z| = r under z -> (alpha - z)/(1 - conj(alpha) z):
/// center alpha (1-r^2)/(1-r^2|alpha|^2), radius r (1-|alpha|^2)/(1-r^2|alpha|^2).
Circle moebius_image_of_concentric(cplx alpha, double r);

}  // namespace holex
