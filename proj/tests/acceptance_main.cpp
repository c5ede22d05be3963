// Acceptance suite: runs every top-level property and theorem-consistency
// check at its stated tolerance and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "holex/circle_families.hpp"
#include "holex/extension_tests.hpp"
#include "holex/gallery.hpp"
#include "holex/geometry.hpp"
#include "holex/quadrature.hpp"
#include "holex/semiquadrics.hpp"
#include "holex/slicing.hpp"
#include "holex/types.hpp"

using namespace holex;

namespace {

std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

ComplexPoint2 random_ball_point(std::mt19937& rng, double radius = 1.0) {
    std::normal_distribution<double> gauss;
    ComplexPoint2 dir{{gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}};
    const double n = norm(dir);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    return (radius * std::pow(uni(rng), 0.25) / n) * dir;
}

ComplexPoint2 random_sphere_point(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    ComplexPoint2 dir{{gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}};
    return (1.0 / norm(dir)) * dir;
}

cplx random_disc(std::mt19937& rng, double radius) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    return std::polar(radius * std::sqrt(uni(rng)),
                      2.0 * 3.14159265358979323846 * uni(rng));
}

cplx random_unit(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(1.0, uni(rng));
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
    template <typename T>
    void note(const char* label, T value) {
        detail << (detail.str().empty() ? "" : ", ") << label << "=" << value;
    }
};

// ---------------------------------------------------------------- criterion 1

bool c1_geometry_identities(std::string& detail) {
    Check c;
    auto rng = make_rng(11);

    double worst_inv = 0.0, worst_sphere = 0.0, worst_line = 0.0;
    for (int i = 0; i < 10000; ++i) {
        // The identity map phi_a o phi_a has condition number ~ 2/(1-|a|), so
        // |a| is kept below 0.999: past that no double-precision evaluation
        // can meet 1e-12.
        const ComplexPoint2 a = random_ball_point(rng, 0.999);
        const BallAutomorphism phi(a);
        const ComplexPoint2 x = random_ball_point(rng);
        worst_inv = std::max(worst_inv, dist(phi(phi(x)), x));

        const ComplexPoint2 s = random_sphere_point(rng);
        worst_sphere = std::max(worst_sphere, std::abs(norm(phi(s)) - 1.0));

        const ComplexPoint2 base = random_ball_point(rng, 1.5);
        const ComplexPoint2 dir = random_sphere_point(rng);
        const ComplexPoint2 p1 = base, p2 = base + cplx(0.31) * dir,
                            p3 = base + cplx(0.0, -0.57) * dir;
        if (phi.is_singular(p1) || phi.is_singular(p2) || phi.is_singular(p3)) continue;
        const ComplexPoint2 q1 = phi(p1), q2 = phi(p2), q3 = phi(p3);
        const ComplexPoint2 u = q2 - q1, v = q3 - q1;
        worst_line = std::max(worst_line, std::abs(u.z * v.w - u.w * v.z) /
                                              (norm(u) * norm(v) + 1e-300));
    }
    c.require(worst_inv < 1e-12, "involution residual too large");
    c.require(worst_sphere < 1e-12, "sphere preservation violated");
    c.require(worst_line < 1e-10, "line-to-line rank test violated");

    double worst_lsc = 0.0;
    int lines_checked = 0;
    while (lines_checked < 10000) {
        const ComplexLine L =
            ComplexLine::through_points(random_ball_point(rng, 2.0), random_ball_point(rng, 2.0));
        const auto res = line_sphere_circle(L);
        if (!res.hit()) continue;
        ++lines_checked;
        for (int k = 0; k < 4; ++k) {
            const ComplexPoint2 p = res.circle.at(random_unit(rng));
            worst_lsc = std::max(worst_lsc, std::abs(norm_sq(p) - 1.0));
        }
    }
    c.require(worst_lsc < 1e-12, "line-sphere parameterization off the sphere");

    double worst_proj = 0.0;
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        double t = uni(rng) < 0.5 ? 0.02 + 0.96 * uni(rng) : 1.05 + 2.0 * uni(rng);
        const double R = 0.01 + 0.99 * uni(rng);
        const Circle pc = projection_circle(t, R);
        const double T = pc.center.real();
        worst_proj = std::max(worst_proj,
                              std::abs(pc.radius * pc.radius - (T - t) * (T - 1.0 / t)));
    }
    c.require(worst_proj < 1e-12, "projection-circle identity violated");

    c.note("involution", worst_inv);
    c.note("sphere", worst_sphere);
    c.note("line", worst_line);
    c.note("param", worst_lsc);
    c.note("projection", worst_proj);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 2

bool c2_example11(std::string& detail) {
    Check c;
    const auto e11 = make_gallery_entry("example11:k=3");
    const std::vector<cplx> points = {0.0,
                                      0.5,
                                      -0.5,
                                      {0.0, 0.5},
                                      {0.0, -0.5},
                                      {0.3, 0.4},
                                      {-0.6, 0.2},
                                      {0.2, -0.7},
                                      {-0.35, -0.35},
                                      0.8};
    double max_residual = 0.0;
    int tested = 0;
    for (const cplx& pt : points) {
        const auto rep = family_extension_test(
            e11.fn, LineFamilySpec::through({0.0, pt}), 100, 256, 1e-8);
        c.require(rep.pass, "a pencil through {0}x(disc) failed");
        max_residual = std::max(max_residual, rep.residual);
        tested += rep.tested_count;
    }
    c.require(tested >= 2000, "expected 200 lines per point");
    c.require(max_residual < 1e-8, "family residual above 1e-8");

    const auto ball = ball_extension_verdict(e11.fn, -4, 8, {0.5, 0.7, 0.9}, 256, 1e-8, 1e-8);
    c.require(!ball.pass && ball.offending_n == 0, "ball verdict must fail at n = 0");

    // radial-consistency spread between radii 0.5 and 0.9 at frequency k+3
    const auto disc = disc_analyticity_test(
        [&](cplx z) { return slice_coefficient(e11.fn, 0, z, 256); }, "c_0[example11]",
        {0.5, 0.7, 0.9}, 256, 1e-8, 1e-8);
    c.require(disc.pair_defect(6, 0, 2) > 0.1, "pair defect (0.5, 0.9) must exceed 0.1");
    double spread = 0.0;
    for (const auto& row : disc.rows)
        if (row.m == 6) spread = std::abs(row.a[0] - row.a[2]);
    c.require(std::abs(spread - (4.0 - std::pow(0.9, -2.0))) < 1e-6,
              "a_6 spread must match the closed form R^{-2}");

    c.note("max_residual", max_residual);
    c.note("lines", tested);
    c.note("defect", ball.per_n[4].consistency_defect);
    c.note("a6_spread", spread);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 3

bool c3_absw2(std::string& detail) {
    Check c;
    const auto absw2 = make_gallery_entry("absw2");
    double max_residual = 0.0, max_slice_spread = 0.0;
    for (const auto& fam :
         {LineFamilySpec::through({0.0, 0.0}), LineFamilySpec::parallel_to({1.0, 0.0})}) {
        const auto rep = family_extension_test(absw2.fn, fam, 64, 128, 1e-10);
        c.require(rep.pass, "family must pass");
        max_residual = std::max(max_residual, rep.residual);
        // exact constancy per slice
        const Quadrature quad(64);
        for (const auto& L : sample_pencil(fam, 16)) {
            const auto lsr = line_sphere_circle(L);
            if (!lsr.hit() || std::abs(lsr.circle.param_scale) < 1e-6) continue;
            cplx mean = 0.0;
            std::vector<cplx> vals;
            for (const cplx& zeta : quad.nodes()) {
                const ComplexPoint2 p = lsr.circle.at(zeta);
                vals.push_back(absw2.fn(p.z, p.w));
                mean += vals.back();
            }
            mean /= static_cast<double>(vals.size());
            for (const cplx& v : vals)
                max_slice_spread = std::max(max_slice_spread, std::abs(v - mean));
        }
    }
    c.require(max_residual < 1e-10, "residual above 1e-10");
    c.require(max_slice_spread < 1e-10, "slices must be constant");

    const auto ball = ball_extension_verdict(absw2.fn, -4, 8, {0.5, 0.7, 0.9}, 128, 1e-8, 1e-8);
    c.require(!ball.pass && ball.offending_n == 0, "ball verdict must fail at n = 0");

    c.note("max_residual", max_residual);
    c.note("slice_spread", max_slice_spread);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 4

bool c4_km(std::string& detail) {
    Check c;
    const cplx p(1.0), q(-1.0);
    const auto km = make_gallery_entry("km:p=1:q=-1");
    double max_residual = 0.0;
    for (const cplx dir_w : {p, q}) {
        const auto rep = family_extension_test(
            km.fn, LineFamilySpec::parallel_to({1.0, dir_w}), 100, 256, 1e-9);
        c.require(rep.pass, "parallel family must pass");
        c.require(rep.tested_count == 100, "expected 100 lines per family");
        max_residual = std::max(max_residual, rep.residual);
    }
    c.require(max_residual < 1e-9, "residual above 1e-9");

    const auto ball = ball_extension_verdict(km.fn, -4, 8, {0.5, 0.7, 0.9}, 256, 1e-8, 1e-8);
    c.require(!ball.pass, "ball verdict must fail");

    auto rng = make_rng(44);
    double worst_identity = 0.0;
    int tested = 0;
    while (tested < 1000) {
        const cplx offset = random_disc(rng, 0.95);
        const ComplexLine L{{0.0, offset}, {1.0, p}, {}};
        const auto lsr = line_sphere_circle(L);
        if (!lsr.hit()) continue;
        const cplx zeta = lsr.circle.param_center + lsr.circle.param_scale * random_unit(rng);
        const cplx lhs =
            std::conj(zeta) * (zeta * (std::norm(p) + 1.0) + offset * std::conj(p));
        const cplx rhs = 1.0 - std::norm(offset) - zeta * p * std::conj(offset);
        worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
        ++tested;
    }
    c.require(worst_identity < 1e-12, "substitution identity violated");

    c.note("max_residual", max_residual);
    c.note("identity", worst_identity);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 5

bool c5_holomorphic_controls(std::string& detail) {
    Check c;
    auto rng = make_rng(55);
    std::uniform_real_distribution<double> mag(0.25, 1.0);

    std::vector<BoundaryFunction> controls;
    controls.push_back(make_gallery_entry("z2zw").fn);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<cplx, 16> coef;
        for (auto& v : coef) v = std::polar(mag(rng), std::arg(random_unit(rng)));
        controls.push_back({"control" + std::to_string(trial),
                            [coef](cplx z, cplx w) {
                                cplx acc = 0.0;
                                for (int a = 0; a <= 3; ++a)
                                    for (int b = 0; b <= 3; ++b)
                                        acc += coef[static_cast<size_t>(4 * a + b)] *
                                               ipow(z, a) * ipow(w, b);
                                return acc;
                            }});
    }

    // canonical configurations: origin+point, two boundary points, parallels+point
    const std::vector<LineFamilySpec> pencils = {
        LineFamilySpec::through({0.0, 0.0}),
        LineFamilySpec::through({0.5, 0.0}),
        LineFamilySpec::through({1.0, 0.0}),
        LineFamilySpec::through({cplx(0.0, 1.0), 0.0}),
        LineFamilySpec::parallel_to({1.0, 0.0}),
        LineFamilySpec::through({1.5, 0.0}),
    };
    double max_residual = 0.0;
    for (const auto& f : controls) {
        for (const auto& fam : pencils) {
            const auto rep = family_extension_test(f, fam, 32, 128, 1e-10);
            c.require(rep.pass, "control failed a canonical family");
            max_residual = std::max(max_residual, rep.residual);
        }
        const auto ball = ball_extension_verdict(f, -4, 8, {0.5, 0.7, 0.9}, 128, 1e-8, 1e-8);
        c.require(ball.pass, "control failed the ball verdict");
    }
    c.require(max_residual < 1e-10, "control residual above 1e-10");
    c.note("max_residual", max_residual);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 6

bool c6_negative_control(std::string& detail) {
    Check c;
    const BoundaryFunction conjw{"conj(w)", [](cplx, cplx w) { return std::conj(w); }};
    const auto rep =
        family_extension_test(conjw, LineFamilySpec::through({0.0, 0.0}), 64, 128, 1e-8);
    c.require(!rep.pass, "conj(w) must fail the origin pencil");
    double min_residual = 1e300;
    const auto lines = sample_pencil(LineFamilySpec::through({0.0, 0.0}), 64);
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& e = rep.lines[i];
        if (e.skipped) continue;
        c.require(!e.pass, "every sampled line must fail");
        const auto lsr = line_sphere_circle(lines[i]);
        const double scale = std::sqrt(1.0 - std::norm(lsr.circle.q));
        c.require(e.residual >= 0.5 * scale - 1e-12, "residual below the slice scale");
        c.require(e.residual >= 1e-2, "residual not detectable");
        min_residual = std::min(min_residual, e.residual);
    }
    c.note("min_residual", min_residual);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 7

bool c7_separation(std::string& detail) {
    Check c;
    const auto good = prop71_separation_check(0.5, 0.19, 50);
    c.require(good.total_violations == 0, "admissible eta must be violation-free");
    c.require(good.max_violation < 0.0, "strict separation expected");
    const auto bad = prop71_separation_check(0.5, 0.5, 50);
    c.require(bad.total_violations > 0, "oversized eta must produce violations");
    c.note("max_violation", good.max_violation);
    c.note("bad_violations", bad.total_violations);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 8

bool c8_semiquadrics(std::string& detail) {
    Check c;
    auto rng = make_rng(88);
    std::uniform_real_distribution<double> uni(0.1, 1.2);
    int tested = 0, met = 0;
    double worst_residual = 0.0;
    while (tested < 1000) {
        const Semiquadric s1{random_disc(rng, 1.5), uni(rng)};
        const Semiquadric s2{random_disc(rng, 1.5), uni(rng)};
        if (std::abs(s1.a - s2.a) < 1e-3) continue;
        const double margin1 = s1.r - (std::abs(s1.a - s2.a) + s2.r);
        const double margin2 = s2.r - (std::abs(s1.a - s2.a) + s1.r);
        if (std::abs(margin1) < 1e-6 || std::abs(margin2) < 1e-6) continue;
        const bool surr = margin1 > 0.0 || margin2 > 0.0;
        const auto res = semiquadrics_intersect(s1, s2);
        ++tested;
        if (surr) {
            ++met;
            c.require(res.kind == SemiquadricIntersection::Kind::one,
                      "surrounded pair must meet once");
            if (res.kind == SemiquadricIntersection::Kind::one) {
                const cplx z = res.point.z, w = res.point.w;
                worst_residual = std::max(
                    worst_residual,
                    std::abs((z - s1.a) * (w - std::conj(s1.a)) - cplx(s1.r * s1.r)));
                worst_residual = std::max(
                    worst_residual,
                    std::abs((z - s2.a) * (w - std::conj(s2.a)) - cplx(s2.r * s2.r)));
            }
        } else {
            c.require(res.kind == SemiquadricIntersection::Kind::none,
                      "non-surrounding pair must not meet");
        }
    }
    c.require(worst_residual < 1e-12, "intersection point violates a defining equation");
    c.require(met > 50, "draw must exercise the surrounded branch");
    c.note("surrounded_cases", met);
    c.note("worst_residual", worst_residual);
    detail = c.detail.str();
    return c.ok;
}

// ---------------------------------------------------------------- criterion 9

bool c9_fibers(std::string& detail) {
    Check c;
    const double t = 0.5, eta = 0.19;
    auto rng = make_rng(99);
    std::uniform_real_distribution<double> uni(0.05, 0.9);
    double worst_circle = 0.0, worst_w0 = 0.0;
    int sampled = 0;
    while (sampled < 100) {
        cplx z = random_disc(rng, 0.9);
        if (std::abs(z.imag()) < 0.05) continue;
        if (std::abs(z) < 0.05) continue;
        ++sampled;
        const auto fib = fiber_M(z, t, eta);
        c.require(!fib.real_axis, "non-real z must not degenerate");
        const Circle oracle = circumcircle(t, 1.0 / t, std::conj(z));
        for (const cplx& w : fib.sample_arc(64))
            worst_circle =
                std::max(worst_circle, std::abs(std::abs(w - oracle.center) - oracle.radius));
        worst_w0 = std::max(worst_w0, std::abs(fib.arc_point(0.0) - 1.0 / z));
    }
    c.require(worst_circle < 1e-12, "arc points must lie on the three-point circle");
    c.require(worst_w0 < 1e-12, "arc must start at 1/z");
    for (int k = 1; k <= 20; ++k) {
        const double x = eta * k / 21.0;
        c.require(fiber_M(cplx(x, 0.0), t, eta).real_axis,
                  "real sections must degenerate to the real axis");
    }
    c.note("worst_circle", worst_circle);
    c.note("worst_w0", worst_w0);
    detail = c.detail.str();
    (void)uni;
    return c.ok;
}

// --------------------------------------------------------------- criterion 10

bool c10_boundary_probe(std::string& detail) {
    Check c;
    std::vector<double> radii;
    for (int k = 1; k <= 10; ++k) radii.push_back(std::pow(2.0, -k));
    double worst_final = 0.0;
    for (const char* id : {"km:p=1:q=0.5", "km:p=2:q=-3", "km:p=0.5i:q=0.25"}) {
        const auto entry = make_gallery_entry(id);
        for (int n : {0, 1, 2}) {
            const auto rep = boundary_limit_probe(entry.fn, n, radii, 64, 256);
            c.require(rep.monotone, std::string("differences not monotone for ") + id);
            c.require(rep.final_diff < 1e-3, "final difference above 1e-3");
            worst_final = std::max(worst_final, rep.final_diff);
        }
    }
    c.note("worst_final_diff", worst_final);
    detail = c.detail.str();
    return c.ok;
}

// --------------------------------------------------------------- criterion 11

bool c11_slicing_exactness(std::string& detail) {
    Check c;
    auto rng = make_rng(111);
    // trigonometric-polynomial input: sum of z^a w^j conj(w)^k terms with
    // known coefficients c_{j-k}(z) = A(z) (1-|z|^2)^k
    const cplx A(0.8, -0.4), B(-0.3, 0.9), C(1.1, 0.2);
    const BoundaryFunction f{"trig", [&](cplx z, cplx w) {
                                 return A * z * w * w * w +
                                        B * std::conj(w) * w * z * z +
                                        C * ipow(std::conj(w), 2);
                             }};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const cplx z = random_disc(rng, 0.85);
        const double s = 1.0 - std::norm(z);
        const struct {
            int n;
            cplx want;
        } wants[] = {{3, A * z}, {0, B * z * z * s}, {-2, C * s * s}, {2, 0.0}, {-1, 0.0}};
        for (const auto& wref : wants) {
            const int order = std::max(2 * std::abs(wref.n) + 8, 3 + std::abs(wref.n) + 1);
            worst = std::max(worst,
                             std::abs(slice_coefficient(f, wref.n, z, order) - wref.want));
        }
    }
    c.require(worst < 1e-13, "trigonometric recovery above 1e-13");

    double worst_psi = 0.0;
    for (int n : {-1, 0, 1, 2}) {
        const auto psi = averaged_function(f, n, 64);
        int tested = 0;
        while (tested < 250) {
            const ComplexPoint2 pt = random_sphere_point(rng);
            if (std::abs(pt.w) < 0.05 || std::abs(pt.z) > 0.995) continue;
            ++tested;
            const cplx expected = ipow(pt.w, n) * slice_coefficient(f, n, pt.z, 64);
            worst_psi = std::max(worst_psi, std::abs(psi(pt.z, pt.w) - expected));
        }
    }
    c.require(worst_psi < 1e-11, "averaging operator consistency above 1e-11");
    c.note("recovery", worst);
    c.note("psi", worst_psi);
    detail = c.detail.str();
    return c.ok;
}

// --------------------------------------------------------------- criterion 12

bool c12_determinism(std::string& detail) {
    Check c;
    const char* bin = std::getenv("HOLEX_BIN");
    if (!bin) {
        detail = "HOLEX_BIN not set";
        return false;
    }
    auto run = [&](const std::string& args) {
        const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>/dev/null";
        const int status = std::system(cmd.c_str());
        return status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const char* path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::vector<std::string> configs = {
        "test-family --fn gallery:example11:k=3 --family through:0,0.5i --density 16 "
        "--order 128 --tol 1e-8",
        "ball-verdict --fn gallery:absw2 --order 64 --expect fail",
        "prop71 --t 0.5 --eta 0.19 --grid 50",
        "disc-analyticity --fn gallery:example11:k=3 --n 0 --format csv --expect fail",
    };
    for (const auto& cfg : configs) {
        const int s1 = run(cfg + " --out acc_det_a.json");
        const int s2 = run(cfg + " --out acc_det_b.json");
        c.require(s1 == 0 && s2 == 0, "runs must succeed (" + cfg + ")");
        const std::string a = slurp("acc_det_a.json");
        c.require(!a.empty() && a == slurp("acc_det_b.json"),
                  "reports differ for: " + cfg);
    }
    std::remove("acc_det_a.json");
    std::remove("acc_det_b.json");
    detail = c.detail.str().empty() ? "byte-identical reports" : c.detail.str();
    return c.ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "geometry identities", c1_geometry_identities},
        {2, "C^k example reproduction", c2_example11},
        {3, "|w|^2 reproduction", c3_absw2},
        {4, "Kytmanov-Myslivets reproduction", c4_km},
        {5, "holomorphic controls", c5_holomorphic_controls},
        {6, "conj(w) negative control", c6_negative_control},
        {7, "separation scan", c7_separation},
        {8, "semiquadric intersections", c8_semiquadrics},
        {9, "fiber structure", c9_fibers},
        {10, "boundary convergence probe", c10_boundary_probe},
        {11, "slicing exactness", c11_slicing_exactness},
        {12, "report determinism", c12_determinism},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = crit.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", crit.id, crit.name,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
