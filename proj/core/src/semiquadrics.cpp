#include "holex/semiquadrics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace holex {

namespace {
constexpr double kGrazeTol = 1e-10;
constexpr size_t kMaxStoredHits = 1000;
}  // namespace

ExtendedComplex semiquadric_graph(const Semiquadric& S, cplx z) {
    if (S.r <= 0.0) throw std::invalid_argument("semiquadric_graph: radius must be positive");
    const double d = std::abs(z - S.a);
    if (d > S.r * (1.0 + 1e-12))
        throw std::domain_error("semiquadric_graph: z outside the closed disc of the base circle");
    if (d == 0.0) return {true, {}};
    return {false, std::conj(S.a) + S.r * S.r / (z - S.a)};
}

SemiquadricIntersection semiquadrics_intersect(const Semiquadric& S1, const Semiquadric& S2) {
    if (S1.a == S2.a && S1.r == S2.r)
        throw std::invalid_argument("semiquadrics_intersect: identical semiquadrics");
    SemiquadricIntersection res;
    if (std::abs(S1.a - S2.a) < 1e-15) return res;  // same center: disjoint

    // Eliminate w:  conj(a1-a2) z^2 + [r1^2 - r2^2 - conj(a1-a2)(a1+a2)] z
    //               + conj(a1-a2) a1 a2 - r1^2 a2 + r2^2 a1 = 0.
    const cplx dbar = std::conj(S1.a - S2.a);
    const double r1sq = S1.r * S1.r, r2sq = S2.r * S2.r;
    const cplx qa = dbar;
    const cplx qb = r1sq - r2sq - dbar * (S1.a + S2.a);
    const cplx qc = dbar * S1.a * S2.a - r1sq * S2.a + r2sq * S1.a;

    const cplx disc = qb * qb - 4.0 * qa * qc;
    const cplx sq = std::sqrt(disc);
    const std::array<cplx, 2> roots{(-qb + sq) / (2.0 * qa), (-qb - sq) / (2.0 * qa)};

    for (const cplx& z : roots) {
        const double d1 = std::abs(z - S1.a);
        const double d2 = std::abs(z - S2.a);
        if (d1 > kGrazeTol && d1 < S1.r - kGrazeTol && d2 > kGrazeTol && d2 < S2.r - kGrazeTol) {
            res.kind = SemiquadricIntersection::Kind::one;
            res.point = {z, std::conj(S1.a) + r1sq / (z - S1.a)};
            return res;
        }
    }

    // No root clears the strict domain bounds. Crossing circles put both
    // roots exactly on the base circles (lifted diagonal points, not
    // intersections of the open semiquadrics); tangency collapses them into
    // a double root. Only the near-double-root case is ambiguous.
    const bool near_closure =
        std::abs(roots[0] - S1.a) <= S1.r + kGrazeTol &&
        std::abs(roots[0] - S2.a) <= S2.r + kGrazeTol;
    const double scale = 1.0 + std::abs(roots[0]) + std::abs(roots[1]);
    if (near_closure && std::abs(roots[0] - roots[1]) < 1e-6 * scale)
        res.kind = SemiquadricIntersection::Kind::degenerate;
    return res;
}

double SeparationProfile::y(double T) const {
    return T + (1.0 - (t + 1.0 / t) * T + T * T) / (x - T);
}

double SeparationProfile::dy(double T) const {
    const double num = x * x - (t + 1.0 / t) * x + 1.0;
    const double den = (x - T) * (x - T);
    return num / den;
}

SeparationProfile separation_profile(double x, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("separation_profile: t must lie in (0,1)");
    const double eta_bound = 1.0 / (2.0 * (t + 1.0 / t));
    if (!(x > 0.0 && x < eta_bound))
        throw std::domain_error("separation_profile: x must lie in (0, 1/(2(t+1/t)))");
    SeparationProfile p;
    p.x = x;
    p.t = t;
    p.T0 = (1.0 - x * x) / ((t + 1.0 / t) - 2.0 * x);
    return p;
}

Prop71Report prop71_separation_check(double t, double eta, int grid) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("prop71_separation_check: t must lie in (0,1)");
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("prop71_separation_check: eta must lie in (0,1)");
    if (grid < 2) throw std::invalid_argument("prop71_separation_check: grid must be >= 2");

    Prop71Report rep;
    rep.t = t;
    rep.eta = eta;
    rep.grid = grid;
    rep.max_violation = -std::numeric_limits<double>::infinity();

    const double tsum = t + 1.0 / t;
    auto record = [&](double x, char fam, double param, double y, double v) {
        rep.max_violation = std::max(rep.max_violation, v);
        if (v >= 0.0) {
            ++rep.total_violations;
            if (rep.counterexamples.size() < kMaxStoredHits)
                rep.counterexamples.push_back({x, fam, param, y, v});
        }
    };

    for (int i = 1; i <= grid; ++i) {
        const double x = eta * i / grid;
        const double inv_x = 1.0 / x;

        // Concentric-family fibers: y = R^2/x exists for R > x, must lie in (x, 1/x).
        for (int k = 1; k < grid; ++k) {
            const double R = static_cast<double>(k) / grid;
            if (R <= x) continue;
            const double y = R * R / x;
            record(x, 'T', R, y, std::max(x - y, y - inv_x));
        }

        // Moebius-family fibers: y(T) exists while x is inside the disc of the
        // circle with center T, and must avoid [x, 1/x].
        const double T0 = (1.0 - x * x) / (tsum - 2.0 * x);
        for (int k = 1; k < grid; ++k) {
            const double T = t * k / grid;
            if (T >= T0) continue;
            const double dxt = x - T;
            if (dxt == 0.0) continue;  // fiber point at infinity, not in the semiquadric
            const double y = T + (1.0 - tsum * T + T * T) / dxt;
            record(x, 'S', T, y, std::min(y - x, inv_x - y));
        }
    }
    return rep;
}

Circle circumcircle(cplx p1, cplx p2, cplx p3) {
    // Perpendicular bisector intersection via the 2x2 real system.
    const double ax = p1.real(), ay = p1.imag();
    const double bx = p2.real(), by = p2.imag();
    const double cx = p3.real(), cy = p3.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double scale = std::max({std::abs(p1), std::abs(p2), std::abs(p3), 1.0});
    if (std::abs(d) < 1e-14 * scale * scale)
        throw std::domain_error("circumcircle: points are (near-)collinear");
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    const cplx center{ux, uy};
    return {center, std::abs(p1 - center)};
}

cplx FiberDecomposition::arc_point(double T) const {
    const double tsum = t + 1.0 / t;
    return T + (1.0 - tsum * T + T * T) / (z - T);
}

std::vector<cplx> FiberDecomposition::sample_arc(int n) const {
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        pts.push_back(arc_point(T_end * j / (n - 1)));
    return pts;
}

std::vector<cplx> FiberDecomposition::sample_segment(int n) const {
    // The segment is traced by w = R^2/z with R^2 in [|z|^2, 1].
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(n));
    const double lo = std::norm(z);
    for (int j = 0; j < n; ++j) {
        const double r2 = lo + (1.0 - lo) * j / (n - 1);
        pts.push_back(r2 / z);
    }
    return pts;
}

FiberDecomposition fiber_M(cplx z, double t, double eta) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("fiber_M: t must lie in (0,1)");
    if (!(eta > 0.0 && eta < t)) throw std::invalid_argument("fiber_M: eta must lie in (0,t)");
    if (std::abs(z) >= 1.0) throw std::domain_error("fiber_M: z must lie in the open unit disc");
    const bool is_real = z.imag() == 0.0;
    if (is_real) {
        const double x = z.real();
        if (x <= 0.0 || x >= eta)
            throw std::domain_error("fiber_M: real z must lie in (0, eta)");
        FiberDecomposition f;
        f.z = z;
        f.t = t;
        f.real_axis = true;
        return f;
    }

    FiberDecomposition f;
    f.z = z;
    f.t = t;
    f.seg_from = std::conj(z);
    f.seg_to = 1.0 / z;
    f.arc_circle = circumcircle(t, 1.0 / t, std::conj(z));
    f.arc_from = 1.0 / z;         // w(0) = 1/z
    f.arc_to = std::conj(z);      // w(T_end) = conj(z)
    f.T_end = (1.0 - std::norm(z)) / ((t + 1.0 / t) - 2.0 * z.real());
    return f;
}

}  // namespace holex
