#include "holex/gallery.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "holex/parse.hpp"

namespace holex {

namespace {

constexpr double kSphereTol = 1e-9;

void check_on_sphere(cplx z, cplx w) {
    if (std::abs(std::norm(z) + std::norm(w) - 1.0) >= kSphereTol)
        throw std::domain_error("gallery: point is not on the unit sphere of C^2");
}

std::map<std::string, std::string> parse_params(const std::string& id, size_t from) {
    std::map<std::string, std::string> out;
    size_t pos = from;
    while (pos != std::string::npos && pos < id.size()) {
        size_t next = id.find(':', pos);
        const std::string tok =
            next == std::string::npos ? id.substr(pos) : id.substr(pos, next - pos);
        const size_t eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("gallery: malformed parameter '" + tok + "'");
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
        pos = next == std::string::npos ? std::string::npos : next + 1;
    }
    return out;
}

int require_int(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("gallery: missing parameter '" + key + "'");
    return std::stoi(it->second);
}

cplx require_cplx(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("gallery: missing parameter '" + key + "'");
    return parse_complex(it->second);
}

GalleryEntry make_example11(int k) {
    if (k < 1) throw std::invalid_argument("gallery: example11 needs k >= 1");
    GalleryEntry e;
    e.id = "example11:k=" + std::to_string(k);
    e.description = "z^{k+2}/conj(z) on bB, 0 at z=0; class C^k; extends along every line "
                    "meeting {0}x(disc) but not through the ball";
    e.fn = {e.id, [k](cplx z, cplx w) -> cplx {
                check_on_sphere(z, w);
                if (z == cplx(0.0)) return 0.0;
                return ipow(z, k + 2) / std::conj(z);
            }};
    e.real_analytic = false;
    e.expected.ball_pass = false;
    e.expected.families = {
        {LineFamilySpec::through({0.0, 0.0}), true, "pencil through a point of {0}x(disc)"},
        {LineFamilySpec::through({0.0, cplx(0.0, 0.5)}), true,
         "pencil through a point of {0}x(disc)"},
    };
    return e;
}

GalleryEntry make_absw2() {
    GalleryEntry e;
    e.id = "absw2";
    e.description = "|w|^2 = 1-|z|^2 on bB; constant on every slice of the canonical pencils, "
                    "not holomorphic in the ball";
    e.fn = {e.id, [](cplx z, cplx w) -> cplx {
                check_on_sphere(z, w);
                return std::norm(w);
            }};
    e.real_analytic = true;
    e.expected.ball_pass = false;
    e.expected.families = {
        {LineFamilySpec::through({0.0, 0.0}), true, "lines through the origin"},
        {LineFamilySpec::parallel_to({1.0, 0.0}), true, "lines parallel to the z-axis"},
    };
    return e;
}

GalleryEntry make_km(cplx p, cplx q) {
    if (p == q) throw std::invalid_argument("gallery: km needs p != q");
    GalleryEntry e;
    std::ostringstream id;
    id << "km:p=" << format_complex(p) << ":q=" << format_complex(q);
    e.id = id.str();
    e.description = "conj(z)[z(1+|p|^2)+conj(p)(w-pz)][z(1+|q|^2)+conj(q)(w-qz)]; holomorphic "
                    "along lines parallel to (1,p) or (1,q), not through the ball";
    e.fn = {e.id, [p, q](cplx z, cplx w) -> cplx {
                check_on_sphere(z, w);
                const cplx f1 = z * (1.0 + std::norm(p)) + std::conj(p) * (w - p * z);
                const cplx f2 = z * (1.0 + std::norm(q)) + std::conj(q) * (w - q * z);
                return std::conj(z) * f1 * f2;
            }};
    e.real_analytic = true;
    e.expected.ball_pass = false;
    e.expected.families = {
        {LineFamilySpec::parallel_to({1.0, p}), true, "lines parallel to (1,p)"},
        {LineFamilySpec::parallel_to({1.0, q}), true, "lines parallel to (1,q)"},
    };
    return e;
}

GalleryEntry::Expectation holomorphic_expectation() {
    GalleryEntry::Expectation ex;
    ex.ball_pass = true;
    ex.families = {
        {LineFamilySpec::through({0.0, 0.0}), true, "holomorphic: every family passes"},
        {LineFamilySpec::through({0.5, 0.0}), true, "holomorphic: every family passes"},
        {LineFamilySpec::parallel_to({1.0, 0.0}), true, "holomorphic: every family passes"},
    };
    return ex;
}

GalleryEntry make_mono(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("gallery: mono needs a, b >= 0");
    GalleryEntry e;
    e.id = "mono:a=" + std::to_string(a) + ":b=" + std::to_string(b);
    e.description = "holomorphic monomial z^a w^b";
    e.fn = {e.id, [a, b](cplx z, cplx w) -> cplx {
                check_on_sphere(z, w);
                return ipow(z, a) * ipow(w, b);
            }};
    e.real_analytic = true;
    e.expected = holomorphic_expectation();
    return e;
}

GalleryEntry make_z2zw() {
    GalleryEntry e;
    e.id = "z2zw";
    e.description = "holomorphic control z^2 + zw";
    e.fn = {e.id, [](cplx z, cplx w) -> cplx {
                check_on_sphere(z, w);
                return z * z + z * w;
            }};
    e.real_analytic = true;
    e.expected = holomorphic_expectation();
    return e;
}

}  // namespace

GalleryEntry make_gallery_entry(const std::string& id) {
    const size_t colon = id.find(':');
    const std::string name = colon == std::string::npos ? id : id.substr(0, colon);
    const auto params =
        colon == std::string::npos ? std::map<std::string, std::string>{}
                                   : parse_params(id, colon + 1);
    if (name == "example11") return make_example11(require_int(params, "k"));
    if (name == "absw2") return make_absw2();
    if (name == "km") return make_km(require_cplx(params, "p"), require_cplx(params, "q"));
    if (name == "mono") return make_mono(require_int(params, "a"), require_int(params, "b"));
    if (name == "z2zw") return make_z2zw();
    throw std::invalid_argument("gallery: unknown entry '" + name + "'");
}

cplx gallery_eval(const std::string& id, const ComplexPoint2& point) {
    return make_gallery_entry(id).fn(point.z, point.w);
}

GalleryEntry::Expectation gallery_expected(const std::string& id) {
    return make_gallery_entry(id).expected;
}

std::vector<GalleryEntry> gallery_catalog() {
    return {make_example11(3), make_absw2(), make_km(1.0, -1.0), make_mono(2, 1), make_z2zw()};
}

}  // namespace holex
