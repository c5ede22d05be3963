#include "holex/circle_families.hpp"

#include <sstream>
#include <stdexcept>

namespace holex {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

std::string fmt_cplx(cplx v) {
    std::ostringstream os;
    os.precision(17);
    os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

}  // namespace

FamilySpec FamilySpec::two_boundary_points(cplx alpha, cplx beta) {
    FamilySpec s;
    s.kind = Kind::two_boundary_points;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

FamilySpec FamilySpec::concentric_and_through_one() {
    FamilySpec s;
    s.kind = Kind::concentric_and_through_one;
    return s;
}

FamilySpec FamilySpec::concentric_and_moebius(double t) {
    FamilySpec s;
    s.kind = Kind::concentric_and_moebius;
    s.t = t;
    return s;
}

FamilySpec FamilySpec::moebius_pair(cplx alpha, cplx beta) {
    FamilySpec s;
    s.kind = Kind::moebius_pair;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

std::string FamilySpec::describe() const {
    switch (kind) {
        case Kind::two_boundary_points:
            return "circles through " + fmt_cplx(alpha) + " and through " + fmt_cplx(beta);
        case Kind::concentric_and_through_one:
            return "concentric circles and circles through 1";
        case Kind::concentric_and_moebius: {
            std::ostringstream os;
            os.precision(17);
            os << "concentric circles and their Moebius images, t=" << t;
            return os.str();
        }
        case Kind::moebius_pair:
            return "Moebius families centered " + fmt_cplx(alpha) + " and " + fmt_cplx(beta);
    }
    return "?";
}

Circle moebius_image_of_concentric(cplx alpha, double r) {
    const double a2 = std::norm(alpha);
    const double den = 1.0 - r * r * a2;
    return {alpha * (1.0 - r * r) / den, r * (1.0 - a2) / den};
}

namespace {

// Circles in the closed disc through the boundary point `bp`: the diameter
// family with centers c*bp, radius 1-c, c in [0,1).
void append_through_boundary_point(std::vector<SampledCircle>& out, cplx bp, int subfamily,
                                   int density) {
    for (int k = 0; k < density; ++k) {
        const double c = static_cast<double>(k) / density;
        out.push_back({{c * bp, 1.0 - c}, subfamily, c});
    }
}

void append_concentric(std::vector<SampledCircle>& out, int subfamily, int density) {
    for (int k = 1; k <= density; ++k) {
        const double r = static_cast<double>(k) / density;
        out.push_back({{0.0, r}, subfamily, r});
    }
}

void append_moebius_family(std::vector<SampledCircle>& out, cplx alpha, int subfamily,
                           int density) {
    for (int k = 1; k <= density; ++k) {
        const double r = static_cast<double>(k) / density;
        out.push_back({moebius_image_of_concentric(alpha, r), subfamily, r});
    }
}

}  // namespace

FamilySample enumerate_family(const FamilySpec& spec, int density) {
    require(density >= 2, "enumerate_family: density must be at least 2");
    FamilySample sample;
    sample.spec = spec;
    auto& out = sample.circles;
    out.reserve(2 * static_cast<size_t>(density));

    switch (spec.kind) {
        case FamilySpec::Kind::two_boundary_points: {
            require(std::abs(std::abs(spec.alpha) - 1.0) < 1e-9 &&
                        std::abs(std::abs(spec.beta) - 1.0) < 1e-9,
                    "enumerate_family: boundary points must have modulus 1");
            require(std::abs(spec.alpha - spec.beta) > 1e-12,
                    "enumerate_family: boundary points must be distinct");
            append_through_boundary_point(out, spec.alpha, 0, density);
            append_through_boundary_point(out, spec.beta, 1, density);
            break;
        }
        case FamilySpec::Kind::concentric_and_through_one: {
            append_concentric(out, 0, density);
            append_through_boundary_point(out, 1.0, 1, density);
            break;
        }
        case FamilySpec::Kind::concentric_and_moebius: {
            require(spec.t > 0.0 && spec.t < 1.0, "enumerate_family: t must lie in (0,1)");
            append_concentric(out, 0, density);
            // centers T in [0, t), radius sqrt((T-t)(T-1/t))
            for (int k = 0; k < density; ++k) {
                const double T = spec.t * k / density;
                const double rho = std::sqrt((T - spec.t) * (T - 1.0 / spec.t));
                out.push_back({{T, rho}, 1, T});
            }
            break;
        }
        case FamilySpec::Kind::moebius_pair: {
            require(std::abs(spec.alpha) < 1.0 && std::abs(spec.beta) < 1.0,
                    "enumerate_family: Moebius centers must lie in the open disc");
            require(std::abs(spec.alpha - spec.beta) > 1e-12,
                    "enumerate_family: Moebius centers must be distinct");
            append_moebius_family(out, spec.alpha, 0, density);
            append_moebius_family(out, spec.beta, 1, density);
            break;
        }
    }

    for (const SampledCircle& sc : out) {
        if (std::abs(sc.circle.center) + sc.circle.radius > 1.0 + 1e-12)
            throw std::logic_error("enumerate_family: circle escapes the closed disc");
    }
    return sample;
}

double circle_membership(const Circle& c, cplx point) {
    return std::abs(point - c.center) - c.radius;
}

bool surrounds(const Circle& outer, const Circle& inner_c) {
    return std::abs(outer.center - inner_c.center) + inner_c.radius < outer.radius;
}

}  // namespace holex
