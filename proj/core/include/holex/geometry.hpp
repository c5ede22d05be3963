#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "holex/types.hpp"

namespace holex {

/// A circle in the plane: |zeta - center| = radius.
struct Circle {
    cplx center{};
    double radius = 0.0;
};

/// Disc automorphism zeta -> (alpha - zeta) / (1 - conj(alpha) zeta).
/// Involutive; maps the unit circle to itself and the open disc to itself.
/// Throws std::domain_error for |alpha| >= 1 or for the pole zeta = 1/conj(alpha).
cplx disc_moebius(cplx alpha, cplx zeta);

/// Optional record of the line family a line was drawn from.
struct PencilTag {
    enum class Kind { none, through_point, parallel };
    Kind kind = Kind::none;
    ComplexPoint2 value{};  // the pencil point, or the shared direction
};

/// Complex line { base + zeta * direction : zeta in C }.
struct ComplexLine {
    ComplexPoint2 base{};
    ComplexPoint2 direction{};
    PencilTag tag{};

    ComplexPoint2 at(cplx zeta) const { return base + zeta * direction; }

    static ComplexLine through_points(const ComplexPoint2& a, const ComplexPoint2& b);
    static ComplexLine through_point(const ComplexPoint2& p, const ComplexPoint2& dir);
    static ComplexLine parallel(const ComplexPoint2& dir, cplx offset);
};

/// Hermitian distance from the origin to the line (complex lines are
/// affine subspaces, so this is also the Euclidean distance in R^4).
double line_distance_to_origin(const ComplexLine& L);

/// The involutive ball automorphism phi_a of the unit ball of C^2,
/// phi_a(x) = (a - P_a x - s_a Q_a x) / (1 - <x|a>),
/// with P_a the projection onto span(a), Q_a = I - P_a, s_a = sqrt(1-|a|^2).
/// phi_a(a) = 0, phi_a(0) = a, phi_a(phi_a(x)) = x.
class BallAutomorphism {
public:
    explicit BallAutomorphism(const ComplexPoint2& a);

    /// Throws std::domain_error when <x|a> = 1 (the singular hyperplane).
    ComplexPoint2 operator()(const ComplexPoint2& x) const;

    const ComplexPoint2& center() const { return a_; }
    double s() const { return s_; }
    bool is_singular(const ComplexPoint2& x) const;

private:
    ComplexPoint2 a_;
    double a_norm_sq_;
    double s_;
};

/// Linear unitary map of C^2.
struct Unitary2 {
    cplx m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    ComplexPoint2 operator()(const ComplexPoint2& x) const {
        return {m00 * x.z + m01 * x.w, m10 * x.z + m11 * x.w};
    }

    /// Coordinates in the orthonormal basis (e1, e2): x -> (<x|e1>, <x|e2>).
    static Unitary2 from_basis(const ComplexPoint2& e1, const ComplexPoint2& e2);
    /// Maps p to (|p|, 0).
    static Unitary2 sending_to_first_axis(const ComplexPoint2& p);
    static Unitary2 rotation_z(cplx phase);  // (z, w) -> (phase*z, w)
    static Unitary2 swap_axes();             // (z, w) -> (w, z)
};

/// Composition of ball automorphisms and unitaries, applied left to right.
struct TransformChain {
    using Step = std::variant<BallAutomorphism, Unitary2>;
    std::vector<Step> steps;

    ComplexPoint2 apply(const ComplexPoint2& x) const;  // throws on singular input
    ComplexLine apply(const ComplexLine& L) const;      // maps lines to lines, transports the tag
};

/// Parameterization zeta -> (p + zeta q, r + zeta s) of L cap bB over |zeta| = 1.
/// The phase of zeta is fixed so that q (or s when q = 0) is real and positive.
struct LineSphereCircle {
    cplx p{}, q{}, r{}, s{};
    cplx param_center{};  // line's own parameter: xi = param_center + param_scale * zeta
    cplx param_scale{};

    ComplexPoint2 at(cplx zeta) const { return {p + zeta * q, r + zeta * s}; }
    Circle projection() const { return {p, std::abs(q)}; }
};

struct LineSphereResult {
    enum class Kind { circle, no_intersection, tangent };
    Kind kind = Kind::no_intersection;
    LineSphereCircle circle{};  // valid only when kind == circle

    bool hit() const { return kind == Kind::circle; }
};

/// Intersects a complex line with the unit sphere of C^2. Substituting the
/// line parameter into |z|^2 + |w|^2 = 1 gives a disc in the parameter plane;
/// recentering and rescaling it to the unit disc yields the parameterization.
/// A parameter-disc radius below 1e-10 is reported as tangent.
LineSphereResult line_sphere_circle(const ComplexLine& L);

/// Projection to the z-plane of L cap bB for complex lines L through (t, 0):
/// center T = t(1-R^2)/(1-t^2 R^2), radius rho = R(1-t^2)/(1-t^2 R^2),
/// satisfying rho^2 = (T-t)(T-1/t). For t > 1 the family coincides with the
/// family for 1/t (the identity is symmetric under t <-> 1/t), giving centers
/// in [0, 1/t). t = 1 is rejected: those projections are the circles through
/// the boundary point 1 and belong to the through-boundary-point family.
Circle projection_circle(double t, double R);

enum class PairCase { A1, A2, B1, B2, tangent_excluded };

enum class CanonicalFamily {
    through_origin_and_point,  // lines through 0 and through (t,0), t > 0
    two_boundary_points,       // lines through (alpha,0) and (beta,0), |alpha|=|beta|=1
    parallels_and_point,       // lines parallel to the z-axis and through (t,0), t >= 1
    origin_and_parallels,      // lines through 0 and parallel to the z-axis
    two_parallel_families,     // lines parallel to (1,eta_a) and (1,eta_b)
    none
};

/// Where a pencil lands under the normalizing transform: either a pencil
/// through a finite point or a family of parallel lines with a direction.
struct CanonicalPencil {
    bool parallel = false;
    ComplexPoint2 value{};  // point, or direction when parallel
};

struct PairClassification {
    PairCase kind = PairCase::tangent_excluded;
    CanonicalFamily family = CanonicalFamily::none;
    TransformChain transform;
    CanonicalPencil image_a, image_b;  // images of the pencils through a and b
    double t = 0.0;                    // through_origin_and_point / parallels_and_point
    cplx alpha{}, beta{};              // two_boundary_points
    cplx eta_a{}, eta_b{};             // two_parallel_families
};

/// Classifies a point pair (a, b), a != b, into the canonical configurations
/// reached by composing ball automorphisms and unitaries:
///   A1: one point in B, <a|b> != 1  -> lines through 0 and through (t,0), t > 0
///   A2: one point in B, <a|b> = 1   -> lines through 0 and parallels to the z-axis
///   B1: both outside B, the line through a,b meets B -> boundary pair or parallels+point
///   B2: the line through a,b misses the closed ball  -> two parallel families
/// A line through a,b tangent to the sphere is classified tangent_excluded and
/// carries no transform. Throws std::invalid_argument when a = b.
PairClassification normalize_pair(const ComplexPoint2& a, const ComplexPoint2& b);

}  // namespace holex
