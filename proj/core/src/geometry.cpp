#include "holex/geometry.hpp"

#include <array>
#include <stdexcept>

namespace holex {

namespace {
constexpr double kTangentRadius = 1e-10;
constexpr double kSingularTol = 1e-12;
}  // namespace

cplx disc_moebius(cplx alpha, cplx zeta) {
    if (std::abs(alpha) >= 1.0)
        throw std::domain_error("disc_moebius: |alpha| must be < 1");
    const cplx den = 1.0 - std::conj(alpha) * zeta;
    if (std::abs(den) < 1e-14 * (1.0 + std::abs(zeta)))
        throw std::domain_error("disc_moebius: zeta is the pole 1/conj(alpha)");
    return (alpha - zeta) / den;
}

ComplexLine ComplexLine::through_points(const ComplexPoint2& a, const ComplexPoint2& b) {
    const ComplexPoint2 d = b - a;
    if (norm_sq(d) == 0.0)
        throw std::invalid_argument("ComplexLine: coincident points");
    return {a, d, {PencilTag::Kind::none, {}}};
}

ComplexLine ComplexLine::through_point(const ComplexPoint2& p, const ComplexPoint2& dir) {
    if (norm_sq(dir) == 0.0)
        throw std::invalid_argument("ComplexLine: zero direction");
    return {p, dir, {PencilTag::Kind::through_point, p}};
}

ComplexLine ComplexLine::parallel(const ComplexPoint2& dir, cplx offset) {
    if (norm_sq(dir) == 0.0)
        throw std::invalid_argument("ComplexLine: zero direction");
    const double n = norm(dir);
    const ComplexPoint2 unit{dir.z / n, dir.w / n};
    // unit vector orthogonal to dir
    const ComplexPoint2 perp{std::conj(unit.w), -std::conj(unit.z)};
    return {offset * perp, dir, {PencilTag::Kind::parallel, dir}};
}

double line_distance_to_origin(const ComplexLine& L) {
    const double n2 = norm_sq(L.direction);
    const cplx c = inner(L.base, L.direction) / n2;
    const ComplexPoint2 foot = L.base - c * L.direction;
    return norm(foot);
}

BallAutomorphism::BallAutomorphism(const ComplexPoint2& a) : a_(a), a_norm_sq_(norm_sq(a)) {
    if (a_norm_sq_ >= 1.0)
        throw std::domain_error("BallAutomorphism: center must lie in the open ball");
    s_ = std::sqrt(1.0 - a_norm_sq_);
}

bool BallAutomorphism::is_singular(const ComplexPoint2& x) const {
    return std::abs(1.0 - inner(x, a_)) < kSingularTol * (1.0 + norm(x));
}

ComplexPoint2 BallAutomorphism::operator()(const ComplexPoint2& x) const {
    const cplx den = 1.0 - inner(x, a_);
    if (std::abs(den) < kSingularTol * (1.0 + norm(x)))
        throw std::domain_error("BallAutomorphism: <x|a> = 1");
    ComplexPoint2 proj{};
    if (a_norm_sq_ > 0.0) proj = (inner(x, a_) / a_norm_sq_) * a_;
    const ComplexPoint2 orth = x - proj;
    const ComplexPoint2 num = a_ - proj - s_ * orth;
    return (1.0 / den) * num;
}

Unitary2 Unitary2::from_basis(const ComplexPoint2& e1, const ComplexPoint2& e2) {
    return {std::conj(e1.z), std::conj(e1.w), std::conj(e2.z), std::conj(e2.w)};
}

Unitary2 Unitary2::sending_to_first_axis(const ComplexPoint2& p) {
    const double n = norm(p);
    if (n == 0.0) throw std::invalid_argument("Unitary2: zero vector");
    const ComplexPoint2 e1{p.z / n, p.w / n};
    const ComplexPoint2 e2{-std::conj(e1.w), std::conj(e1.z)};
    return from_basis(e1, e2);
}

Unitary2 Unitary2::rotation_z(cplx phase) { return {phase, 0.0, 0.0, 1.0}; }

Unitary2 Unitary2::swap_axes() { return {0.0, 1.0, 1.0, 0.0}; }

namespace {

ComplexLine map_line_fractional(const BallAutomorphism& phi, const ComplexLine& L) {
    // A fractional linear map sends lines to lines; two mapped points pin the image.
    static constexpr std::array<cplx, 6> candidates{
        cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(-1.0, 0.0),
        cplx(0.0, 1.0), cplx(2.0, 0.0), cplx(0.0, -1.0)};
    std::vector<ComplexPoint2> images;
    for (cplx xi : candidates) {
        const ComplexPoint2 x = L.at(xi);
        if (phi.is_singular(x)) continue;
        const ComplexPoint2 y = phi(x);
        if (norm(y) > 1e9) continue;
        images.push_back(y);
        if (images.size() == 2) break;
    }
    if (images.size() < 2)
        throw std::domain_error("TransformChain: line lies in the singular hyperplane");

    PencilTag tag = L.tag;
    if (tag.kind == PencilTag::Kind::through_point) {
        if (phi.is_singular(tag.value)) {
            // The pencil point maps to infinity: the image pencil is parallel.
            tag.kind = PencilTag::Kind::parallel;
            tag.value = images[1] - images[0];
        } else {
            tag.value = phi(tag.value);
        }
    } else if (tag.kind == PencilTag::Kind::parallel) {
        // Image of the point at infinity along direction d.
        const ComplexPoint2 d = tag.value;
        const cplx da = inner(d, phi.center());
        if (std::abs(da) < kSingularTol) {
            tag.value = images[1] - images[0];
        } else {
            double a2 = norm_sq(phi.center());
            ComplexPoint2 proj{};
            if (a2 > 0.0) proj = (inner(d, phi.center()) / a2) * phi.center();
            const ComplexPoint2 limit = (1.0 / -da) * (-1.0 * proj - phi.s() * (d - proj));
            tag.kind = PencilTag::Kind::through_point;
            tag.value = limit;
        }
    }
    return {images[0], images[1] - images[0], tag};
}

}  // namespace

ComplexPoint2 TransformChain::apply(const ComplexPoint2& x) const {
    ComplexPoint2 y = x;
    for (const Step& st : steps)
        y = std::visit([&](const auto& f) { return f(y); }, st);
    return y;
}

ComplexLine TransformChain::apply(const ComplexLine& L) const {
    ComplexLine cur = L;
    for (const Step& st : steps) {
        if (std::holds_alternative<Unitary2>(st)) {
            const Unitary2& U = std::get<Unitary2>(st);
            PencilTag tag = cur.tag;
            if (tag.kind != PencilTag::Kind::none) tag.value = U(tag.value);
            const ComplexPoint2 b = U(cur.base);
            const ComplexPoint2 d = U(cur.base + cur.direction) - b;
            cur = {b, d, tag};
        } else {
            cur = map_line_fractional(std::get<BallAutomorphism>(st), cur);
        }
    }
    return cur;
}

LineSphereResult line_sphere_circle(const ComplexLine& L) {
    // ||B + xi D||^2 = 1  <=>  |xi + conj(c)|^2 = |c|^2 - e
    // with c = <D|B>/||D||^2, e = (||B||^2 - 1)/||D||^2.
    const double d2 = norm_sq(L.direction);
    if (d2 == 0.0) throw std::invalid_argument("line_sphere_circle: zero direction");
    const cplx c = inner(L.direction, L.base) / d2;
    const double e = (norm_sq(L.base) - 1.0) / d2;
    const double disc = std::norm(c) - e;

    LineSphereResult res;
    if (disc < kTangentRadius * kTangentRadius) {
        res.kind = disc > -kTangentRadius * kTangentRadius ? LineSphereResult::Kind::tangent
                                                           : LineSphereResult::Kind::no_intersection;
        return res;
    }
    const cplx xi0 = -std::conj(c);
    const double rho = std::sqrt(disc);
    // Fix the rotation freedom of zeta: make q (or s when q = 0) real positive.
    cplx ref = L.direction.z;
    if (std::abs(ref) < 1e-15 * std::sqrt(d2)) ref = L.direction.w;
    const cplx phase = std::conj(ref) / std::abs(ref);
    const cplx scale = rho * phase;

    res.kind = LineSphereResult::Kind::circle;
    res.circle.p = L.base.z + xi0 * L.direction.z;
    res.circle.q = scale * L.direction.z;
    res.circle.r = L.base.w + xi0 * L.direction.w;
    res.circle.s = scale * L.direction.w;
    res.circle.param_center = xi0;
    res.circle.param_scale = scale;
    return res;
}

Circle projection_circle(double t, double R) {
    if (t <= 0.0) throw std::invalid_argument("projection_circle: t must be positive");
    if (!(R > 0.0 && R <= 1.0)) throw std::invalid_argument("projection_circle: R must be in (0,1]");
    if (std::abs(t - 1.0) < 1e-12)
        throw std::domain_error(
            "projection_circle: t = 1 has no Moebius form; use the family of circles "
            "through the boundary point 1 instead");
    const double tt = t < 1.0 ? t : 1.0 / t;
    const double den = 1.0 - tt * tt * R * R;
    return {tt * (1.0 - R * R) / den, R * (1.0 - tt * tt) / den};
}

namespace {

PairClassification classify_inside(const ComplexPoint2& inside, const ComplexPoint2& outside,
                                   bool a_is_inside) {
    PairClassification cls;
    const BallAutomorphism phi(inside);
    const cplx g = inner(outside, inside);

    if (std::abs(g - 1.0) < 1e-12) {
        // A2: the other pencil maps to a family of parallel lines.
        cls.kind = PairCase::A2;
        cls.family = CanonicalFamily::origin_and_parallels;
        // Direction of the image of the line through both points: the midpoint is
        // never singular (<m|inside> = (|inside|^2 + 1)/2 < 1).
        const ComplexPoint2 mid = 0.5 * (inside + outside);
        const ComplexPoint2 dir = phi(mid);
        cls.transform.steps = {phi, Unitary2::sending_to_first_axis(dir)};
        CanonicalPencil img_inside{false, {0.0, 0.0}};
        CanonicalPencil img_outside{true, {1.0, 0.0}};
        cls.image_a = a_is_inside ? img_inside : img_outside;
        cls.image_b = a_is_inside ? img_outside : img_inside;
        return cls;
    }

    cls.kind = PairCase::A1;
    cls.family = CanonicalFamily::through_origin_and_point;
    const ComplexPoint2 bp = phi(outside);
    cls.t = norm(bp);
    cls.transform.steps = {phi, Unitary2::sending_to_first_axis(bp)};
    CanonicalPencil img_inside{false, {0.0, 0.0}};
    CanonicalPencil img_outside{false, {cls.t, 0.0}};
    cls.image_a = a_is_inside ? img_inside : img_outside;
    cls.image_b = a_is_inside ? img_outside : img_inside;
    return cls;
}

}  // namespace

PairClassification normalize_pair(const ComplexPoint2& a, const ComplexPoint2& b) {
    if (dist(a, b) < 1e-14)
        throw std::invalid_argument("normalize_pair: points must be distinct");

    const bool a_in = norm_sq(a) < 1.0;
    const bool b_in = norm_sq(b) < 1.0;
    if (a_in || b_in) {
        return a_in ? classify_inside(a, b, true) : classify_inside(b, a, false);
    }

    // Both points outside the open ball. Position of the joining line decides.
    const ComplexPoint2 d = b - a;
    const double dn = norm(d);
    ComplexPoint2 unit{d.z / dn, d.w / dn};
    {
        // Fix the direction's phase so an already-canonical configuration
        // (joining line {z = mu}, w-coordinates as given) maps to itself:
        // the dominant component becomes real and positive.
        const cplx ref = std::abs(unit.w) >= std::abs(unit.z) ? unit.w : unit.z;
        unit = (std::conj(ref) / std::abs(ref)) * unit;
    }
    const ComplexPoint2 foot = a - inner(a, unit) * unit;
    const double lambda = norm(foot);

    PairClassification cls;
    if (std::abs(lambda - 1.0) < 1e-12) {
        cls.kind = PairCase::tangent_excluded;
        cls.family = CanonicalFamily::none;
        return cls;
    }

    // Unitary sending the joining line to {z = lambda}; <foot|e1> = lambda is
    // real and nonnegative by construction.
    ComplexPoint2 e1;
    if (lambda > 1e-12) {
        e1 = (1.0 / lambda) * foot;
    } else {
        e1 = {std::conj(unit.w), -std::conj(unit.z)};
    }
    const Unitary2 U = Unitary2::from_basis(e1, unit);

    if (lambda < 1.0) {
        // B1: map {z = lambda} onto the w-axis, then swap coordinates.
        cls.kind = PairCase::B1;
        cls.transform.steps = {U, BallAutomorphism({lambda, 0.0}), Unitary2::swap_axes()};
        const cplx at = cls.transform.apply(a).z;
        const cplx bt = cls.transform.apply(b).z;
        const bool a_boundary = std::abs(std::abs(at) - 1.0) < 1e-9;
        const bool b_boundary = std::abs(std::abs(bt) - 1.0) < 1e-9;
        if (a_boundary && b_boundary) {
            cls.family = CanonicalFamily::two_boundary_points;
            const cplx rot = std::conj(at) / std::abs(at);
            cls.transform.steps.push_back(Unitary2::rotation_z(rot));
            cls.alpha = rot * at;  // = 1 up to rounding
            cls.beta = rot * bt;
            cls.image_a = {false, {cls.alpha, 0.0}};
            cls.image_b = {false, {cls.beta, 0.0}};
            return cls;
        }
        // At least one image lies strictly outside: send its pencil to the
        // parallel family and the other point to (t, 0), t >= 1.
        cls.family = CanonicalFamily::parallels_and_point;
        const bool use_a = std::abs(at) >= std::abs(bt);
        const cplx gamma = use_a ? at : bt;
        const cplx delta = use_a ? bt : at;
        const BallAutomorphism phi2({1.0 / std::conj(gamma), 0.0});
        cls.transform.steps.push_back(phi2);
        const cplx dp = phi2(ComplexPoint2{delta, 0.0}).z;
        const cplx rot = std::conj(dp) / std::abs(dp);
        cls.transform.steps.push_back(Unitary2::rotation_z(rot));
        cls.t = std::abs(dp);
        const CanonicalPencil par{true, {1.0, 0.0}};
        const CanonicalPencil pt{false, {cls.t, 0.0}};
        cls.image_a = use_a ? par : pt;
        cls.image_b = use_a ? pt : par;
        return cls;
    }

    // B2: the joining line misses the closed ball; both pencils become parallel.
    cls.kind = PairCase::B2;
    cls.family = CanonicalFamily::two_parallel_families;
    const double mu = lambda;
    const cplx alpha = inner(a, unit);
    const cplx beta = inner(b, unit);
    cls.transform.steps = {U, BallAutomorphism({1.0 / mu, 0.0})};
    const double root = std::sqrt(mu * mu - 1.0);
    cls.eta_a = alpha / root;
    cls.eta_b = beta / root;
    cls.image_a = {true, {1.0, cls.eta_a}};
    cls.image_b = {true, {1.0, cls.eta_b}};
    return cls;
}

}  // namespace holex
