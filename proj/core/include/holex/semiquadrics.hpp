#pragma once

#include <vector>

#include "holex/geometry.hpp"
#include "holex/types.hpp"

namespace holex {

/// Semiquadric attached to the circle |z - a| = r:
/// { (z, w) : (z - a)(w - conj(a)) = r^2, 0 < |z - a| < r }.
struct Semiquadric {
    cplx a{};
    double r = 0.0;

    Circle circle() const { return {a, r}; }
};

/// A value in C together with the point at infinity of its closure.
struct ExtendedComplex {
    bool at_infinity = false;
    cplx value{};
};

/// Graph map w = conj(a) + r^2/(z - a) of the semiquadric over its disc;
/// z = a maps to the closure point (a, infinity). Points of the closed disc
/// |z - a| <= r are accepted; anything outside throws std::domain_error.
ExtendedComplex semiquadric_graph(const Semiquadric& S, cplx z);

struct SemiquadricIntersection {
    enum class Kind { none, one, degenerate };
    Kind kind = Kind::none;
    ComplexPoint2 point{};
};

/// Two distinct semiquadrics meet iff their centers differ and one base
/// circle surrounds the other, and then in exactly one point. The point is
/// found by eliminating w between the two defining equations (a quadratic in
/// z) and filtering roots by both domain constraints; a root grazing a domain
/// boundary within 1e-10 is reported as degenerate.
SemiquadricIntersection semiquadrics_intersect(const Semiquadric& S1, const Semiquadric& S2);

/// The quantitative separation data for the two semiquadric families at a
/// real section x: T0 is the last center whose disc still contains x, and
/// y(T) the fiber ordinate over x.
struct SeparationProfile {
    double x = 0.0;
    double t = 0.0;
    double T0 = 0.0;

    // y(T) = T + (1 - (t + 1/t) T + T^2) / (x - T)
    double y(double T) const;
    // dy/dT = (x^2 - (t + 1/t) x + 1) / (x - T)^2
    double dy(double T) const;
};

/// Requires 0 < t < 1 and 0 < x < 1/(2(t + 1/t)).
SeparationProfile separation_profile(double x, double t);

struct Prop71Report {
    double t = 0.0;
    double eta = 0.0;
    int grid = 0;
    double max_violation = 0.0;  // signed; < 0 means strict separation holds
    struct Hit {
        double x;
        char family;   // 'T' (concentric) or 'S' (Moebius)
        double param;  // R or T
        double y;
        double violation;
    };
    std::vector<Hit> counterexamples;  // entries with violation >= 0
    long long total_violations = 0;

    bool pass() const { return total_violations == 0; }
};

/// Scans x over (0, eta] (grid values eta*i/grid), R and T over the open
/// parameter ranges, and checks the strict separation of fiber ordinates:
/// concentric fibers must satisfy x < y < 1/x, Moebius-family fibers must
/// lie outside [x, 1/x]. Boundary hits count as violations of the strict
/// claim.
Prop71Report prop71_separation_check(double t, double eta, int grid);

/// Circle through three non-collinear points. Throws std::domain_error on
/// (near-)collinear input.
Circle circumcircle(cplx p1, cplx p2, cplx p3);

/// Fiber of the union of the two semiquadric families over a base point z:
/// for non-real z, the segment from conj(z) to 1/z together with the arc of
/// the circle through t, 1/t, conj(z) with the same endpoints avoiding t and
/// 1/t; for real z in (0, eta), the fiber degenerates to the real axis.
struct FiberDecomposition {
    cplx z{};
    double t = 0.0;
    bool real_axis = false;

    cplx seg_from{}, seg_to{};  // conj(z) and 1/z
    Circle arc_circle{};        // through t, 1/t, conj(z)
    cplx arc_from{}, arc_to{};  // 1/z (at T = 0) and conj(z) (at T = T_end)
    double T_end = 0.0;

    /// Point of the arc at center parameter T in [0, T_end].
    cplx arc_point(double T) const;
    std::vector<cplx> sample_arc(int n) const;
    std::vector<cplx> sample_segment(int n) const;
};

/// Requires z in the slit disc (unit disc minus (-1, 0] and [eta, 1)) and
/// 0 < t < 1; throws std::domain_error outside.
FiberDecomposition fiber_M(cplx z, double t, double eta);

}  // namespace holex
