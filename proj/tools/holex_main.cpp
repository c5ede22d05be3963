// holex: command-line front end for the extendibility laboratory.
//
// Verdict commands exit 0 when the verdict matches --expect (or is a pass
// when no expectation is given), 1 on a mismatch or fail, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "holex/extension_tests.hpp"
#include "holex/gallery.hpp"
#include "holex/geometry.hpp"
#include "holex/grid_function.hpp"
#include "holex/json_writer.hpp"
#include "holex/parse.hpp"
#include "holex/reports_io.hpp"
#include "holex/semiquadrics.hpp"
#include "holex/slicing.hpp"
#include "holex/types.hpp"

namespace {

using namespace holex;

struct Output {
    std::string path;    // empty = stdout
    std::string format = "json";
};

void emit(const Output& out, const std::string& json, const std::string& csv) {
    const std::string& payload = out.format == "csv" ? csv : json;
    if (out.format == "csv" && csv.empty())
        throw CLI::ValidationError("--format csv is not available for this command");
    if (out.path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out.path);
        f << payload;
    }
}

BoundaryFunction resolve_fn(const std::string& spec) {
    if (spec.rfind("gallery:", 0) == 0) return make_gallery_entry(spec.substr(8)).fn;
    if (spec.rfind("grid:", 0) == 0) return boundary_function_from_grid_file(spec.substr(5));
    throw CLI::ValidationError("--fn must be 'gallery:<id>' or 'grid:<path>'");
}

LineFamilySpec parse_family(const std::string& text) {
    if (text.rfind("through:", 0) == 0)
        return LineFamilySpec::through(parse_point(text.substr(8)));
    if (text.rfind("parallel:", 0) == 0)
        return LineFamilySpec::parallel_to(parse_point(text.substr(9)));
    throw CLI::ValidationError("--family must be 'through:<c>,<c>' or 'parallel:<c>,<c>'");
}

std::pair<int, int> parse_nrange(const std::string& text) {
    const size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--nrange must look like '-4..8'");
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int verdict_status(bool pass, const std::optional<std::string>& expect) {
    if (!expect) return pass ? 0 : 1;
    const bool expected_pass = *expect == "pass";
    return pass == expected_pass ? 0 : 1;
}

std::vector<double> parse_radii(const std::string& text) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stod(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical tests of holomorphic extendibility on the unit ball of C^2"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "Write the report to this file (default: stdout)")
        ->capture_default_str();
    app.add_option("--format", out.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    std::optional<std::string> expect;
    app.add_option("--expect", expect, "Expected verdict: pass or fail")
        ->check(CLI::IsMember({"pass", "fail"}));

    std::string fn_spec, family_text, nrange_text = "-4..8";
    std::string radii_text = "0.5,0.7,0.9";
    int order = defaults::order;
    int density = defaults::density;
    double tol = defaults::tolerance;
    double ctol = defaults::consistency_tolerance;

    // test-circle
    auto* cmd_circle = app.add_subcommand(
        "test-circle", "Extendibility of a slice coefficient from one circle in the disc");
    std::string center_text = "0";
    double radius = 0.5;
    int n_index = 0;
    cmd_circle->add_option("--fn", fn_spec, "gallery:<id> or grid:<path>")->required();
    cmd_circle->add_option("--center", center_text, "Circle center (complex)");
    cmd_circle->add_option("--radius", radius, "Circle radius");
    cmd_circle->add_option("--n", n_index, "Slice index");
    cmd_circle->add_option("--order", order, "Quadrature order");
    cmd_circle->add_option("--tol", tol, "Pass tolerance");

    // test-line
    auto* cmd_line = app.add_subcommand("test-line", "Extendibility along one complex line");
    std::string base_text, dir_text;
    cmd_line->add_option("--fn", fn_spec)->required();
    cmd_line->add_option("--base", base_text, "Line base point '<c>,<c>'")->required();
    cmd_line->add_option("--dir", dir_text, "Line direction '<c>,<c>'")->required();
    cmd_line->add_option("--order", order);
    cmd_line->add_option("--tol", tol);

    // test-family
    auto* cmd_family =
        app.add_subcommand("test-family", "Extendibility along a family of complex lines");
    cmd_family->add_option("--fn", fn_spec)->required();
    cmd_family->add_option("--family", family_text, "'through:<c>,<c>' or 'parallel:<c>,<c>'")
        ->required();
    cmd_family->add_option("--density", density, "Lines per chart");
    cmd_family->add_option("--order", order);
    cmd_family->add_option("--tol", tol);

    // disc-analyticity
    auto* cmd_disc = app.add_subcommand(
        "disc-analyticity", "Concentric-circle analyticity test of a slice coefficient");
    cmd_disc->add_option("--fn", fn_spec)->required();
    cmd_disc->add_option("--n", n_index, "Slice index");
    cmd_disc->add_option("--radii", radii_text, "Comma-separated radii (at least 3)");
    cmd_disc->add_option("--order", order);
    cmd_disc->add_option("--tol", tol);
    cmd_disc->add_option("--ctol", ctol, "Radial-consistency tolerance");

    // ball-verdict
    auto* cmd_ball = app.add_subcommand("ball-verdict", "Full extendibility verdict");
    cmd_ball->add_option("--fn", fn_spec)->required();
    cmd_ball->add_option("--nrange", nrange_text, "e.g. -4..8");
    cmd_ball->add_option("--radii", radii_text);
    cmd_ball->add_option("--order", order);
    cmd_ball->add_option("--tol", tol);
    cmd_ball->add_option("--ctol", ctol);

    // slice
    auto* cmd_slice = app.add_subcommand("slice", "Evaluate a slice coefficient c_n(z)");
    std::string z_text = "0";
    cmd_slice->add_option("--fn", fn_spec)->required();
    cmd_slice->add_option("--n", n_index, "Slice index");
    cmd_slice->add_option("--z", z_text, "Evaluation point, |z| < 1");
    cmd_slice->add_option("--order", order);

    // normalize-pair
    auto* cmd_pair = app.add_subcommand("normalize-pair", "Classify a point pair of C^2");
    std::string a_text, b_text;
    cmd_pair->add_option("--a", a_text, "'<c>,<c>'")->required();
    cmd_pair->add_option("--b", b_text, "'<c>,<c>'")->required();

    // prop71
    auto* cmd_prop71 = app.add_subcommand(
        "prop71", "Separation scan of the two semiquadric families over real sections");
    double t_param = 0.5, eta = 0.19;
    int grid = defaults::prop71_grid;
    cmd_prop71->add_option("--t", t_param, "Family parameter in (0,1)");
    cmd_prop71->add_option("--eta", eta, "Scan width");
    cmd_prop71->add_option("--grid", grid, "Grid size per axis");

    // fiber
    auto* cmd_fiber = app.add_subcommand("fiber", "Fiber decomposition over a base point");
    int samples = defaults::fiber_samples;
    cmd_fiber->add_option("--z", z_text, "Base point")->required();
    cmd_fiber->add_option("--t", t_param);
    cmd_fiber->add_option("--eta", eta);
    cmd_fiber->add_option("--samples", samples, "Arc sample count");

    // semiquadric-intersect
    auto* cmd_sq = app.add_subcommand("semiquadric-intersect", "Intersect two semiquadrics");
    std::string a1_text = "0", a2_text = "0";
    double r1 = 1.0, r2 = 0.5;
    cmd_sq->add_option("--a1", a1_text);
    cmd_sq->add_option("--r1", r1);
    cmd_sq->add_option("--a2", a2_text);
    cmd_sq->add_option("--r2", r2);

    // gallery-list
    auto* cmd_gallery = app.add_subcommand("gallery-list", "List built-in boundary functions");

    // Global options (--out, --format, --expect) may follow the subcommand.
    for (auto* sub : {cmd_circle, cmd_line, cmd_family, cmd_disc, cmd_ball, cmd_slice,
                      cmd_pair, cmd_prop71, cmd_fiber, cmd_sq, cmd_gallery})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_circle->parsed()) {
            const BoundaryFunction f = resolve_fn(fn_spec);
            const cplx center = parse_complex(center_text);
            if (std::abs(center) + radius > 1.0 - 1e-9)
                throw std::domain_error("test-circle: circle must lie inside the open disc");
            const Circle circle{center, radius};
            const auto rep = circle_extension_test(
                [&](cplx z) { return slice_coefficient(f, n_index, z, order); }, circle, order,
                tol, "c_" + std::to_string(n_index) + "[" + f.name + "] on circle");
            emit(out, to_json(rep), to_csv(rep));
            return verdict_status(rep.pass, expect);
        }
        if (cmd_line->parsed()) {
            const BoundaryFunction f = resolve_fn(fn_spec);
            const ComplexLine L{parse_point(base_text), parse_point(dir_text), {}};
            const auto rep = line_extension_test(f, L, order, tol);
            emit(out, to_json(rep), to_csv(rep));
            return verdict_status(rep.pass, expect);
        }
        if (cmd_family->parsed()) {
            const BoundaryFunction f = resolve_fn(fn_spec);
            const auto rep =
                family_extension_test(f, parse_family(family_text), density, order, tol);
            emit(out, to_json(rep), to_csv(rep));
            return verdict_status(rep.pass, expect);
        }
        if (cmd_disc->parsed()) {
            const BoundaryFunction f = resolve_fn(fn_spec);
            const int n = n_index;
            const auto rep = disc_analyticity_test(
                [&, n](cplx z) { return slice_coefficient(f, n, z, order); },
                "c_" + std::to_string(n) + "[" + f.name + "]", parse_radii(radii_text), order,
                tol, ctol);
            emit(out, to_json(rep), to_csv(rep));
            return verdict_status(rep.pass, expect);
        }
        if (cmd_ball->parsed()) {
            const BoundaryFunction f = resolve_fn(fn_spec);
            const auto [n_min, n_max] = parse_nrange(nrange_text);
            const auto rep = ball_extension_verdict(f, n_min, n_max, parse_radii(radii_text),
                                                    order, tol, ctol);
            emit(out, to_json(rep), to_csv(rep));
            return verdict_status(rep.pass, expect);
        }
        if (cmd_slice->parsed()) {
            const BoundaryFunction f = resolve_fn(fn_spec);
            const cplx z = parse_complex(z_text);
            const cplx value = slice_coefficient(f, n_index, z, order);
            JsonWriter w;
            w.begin_object();
            w.key("fn").value(f.name);
            w.key("n").value(n_index);
            w.key("z").value(z);
            w.key("order").value(order);
            w.key("value").value(value);
            w.end_object();
            emit(out, w.str(), "");
            return 0;
        }
        if (cmd_pair->parsed()) {
            const ComplexPoint2 a = parse_point(a_text);
            const ComplexPoint2 b = parse_point(b_text);
            const PairClassification cls = normalize_pair(a, b);
            emit(out, to_json(cls, a, b), "");
            return 0;
        }
        if (cmd_prop71->parsed()) {
            const auto rep = prop71_separation_check(t_param, eta, grid);
            emit(out, to_json(rep), to_csv(rep));
            return verdict_status(rep.pass(), expect);
        }
        if (cmd_fiber->parsed()) {
            const auto fib = fiber_M(parse_complex(z_text), t_param, eta);
            emit(out, to_json(fib, eta, samples), "");
            return 0;
        }
        if (cmd_sq->parsed()) {
            const Semiquadric s1{parse_complex(a1_text), r1};
            const Semiquadric s2{parse_complex(a2_text), r2};
            const auto res = semiquadrics_intersect(s1, s2);
            emit(out, to_json(res, s1, s2), "");
            return 0;
        }
        if (cmd_gallery->parsed()) {
            emit(out, gallery_to_json(), "");
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
