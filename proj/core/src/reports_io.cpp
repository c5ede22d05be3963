#include "holex/reports_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "holex/json_writer.hpp"
#include "holex/parse.hpp"

namespace holex {

namespace {

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_verdict(JsonWriter& w, bool pass) { w.key("verdict").value(pass ? "pass" : "fail"); }

}  // namespace

std::string to_json(const ExtensionReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("subject").value(rep.subject);
    w.key("residual").value(rep.residual);
    w.key("tolerance").value(rep.tolerance);
    w.key("order").value(rep.order);
    write_verdict(w, rep.pass);
    w.key("worst_negative_index").value(rep.worst_negative_index);
    w.key("tested").value(rep.tested_count);
    w.key("skipped").value(rep.skipped_count);
    w.key("density").value(rep.density);
    w.key("note").value(rep.note);
    w.key("details").begin_array();
    for (const auto& e : rep.lines) {
        w.begin_object();
        w.key("index").value(e.index);
        w.key("subject").value(e.subject);
        w.key("residual").value(e.residual);
        write_verdict(w, e.pass);
        w.key("skipped").value(e.skipped);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string to_json(const DiscAnalyticityReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("subject").value(rep.subject);
    w.key("residual").value(rep.residual);
    w.key("tolerance").value(rep.tolerance);
    w.key("order").value(rep.order);
    write_verdict(w, rep.pass);
    w.key("consistency_defect").value(rep.consistency_defect);
    w.key("consistency_tolerance").value(rep.consistency_tolerance);
    w.key("coefficient_floor").value(rep.coefficient_floor);
    w.key("worst_frequency").value(rep.worst_frequency);
    w.key("radii").begin_array();
    for (double r : rep.radii) w.value(r);
    w.end_array();
    w.key("details").begin_array();
    for (const auto& row : rep.rows) {
        w.begin_object();
        w.key("m").value(row.m);
        w.key("defect").value(row.defect);
        w.key("a").begin_array();
        for (size_t i = 0; i < row.a.size(); ++i) {
            if (row.included[i])
                w.value(row.a[i]);
            else
                w.value("excluded");
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string to_json(const BallVerdictReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("subject").value(rep.subject);
    w.key("n_min").value(rep.n_min);
    w.key("n_max").value(rep.n_max);
    w.key("order").value(rep.order);
    w.key("negative_tolerance").value(rep.negative_tolerance);
    w.key("consistency_tolerance").value(rep.consistency_tolerance);
    w.key("radii").begin_array();
    for (double r : rep.radii) w.value(r);
    w.end_array();
    write_verdict(w, rep.pass);
    w.key("offending_n").value(rep.offending_n);
    w.key("failure_note").value(rep.failure_note);
    w.key("per_n").begin_array();
    for (const auto& pn : rep.per_n) {
        w.begin_object();
        w.key("n").value(pn.n);
        w.key("negative_residual").value(pn.negative_residual);
        w.key("consistency_defect").value(pn.consistency_defect);
        write_verdict(w, pn.pass);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string to_json(const Prop71Report& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("t").value(rep.t);
    w.key("eta").value(rep.eta);
    w.key("grid").value(rep.grid);
    w.key("max_violation").value(rep.max_violation);
    write_verdict(w, rep.pass());
    w.key("total_violations").value(rep.total_violations);
    w.key("counterexamples").begin_array();
    for (const auto& h : rep.counterexamples) {
        w.begin_object();
        w.key("x").value(h.x);
        w.key("family").value(std::string(1, h.family));
        w.key("param").value(h.param);
        w.key("y").value(h.y);
        w.key("violation").value(h.violation);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string to_json(const ConvergenceReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("n").value(rep.n);
    w.key("order").value(rep.order);
    w.key("phi_grid").value(rep.phi_grid);
    w.key("radii").begin_array();
    for (double r : rep.radii) w.value(r);
    w.end_array();
    w.key("sup_diffs").begin_array();
    for (double d : rep.sup_diffs) w.value(d);
    w.end_array();
    w.key("monotone").value(rep.monotone);
    w.key("final_diff").value(rep.final_diff);
    w.end_object();
    return w.str();
}

namespace {

const char* case_name(PairCase c) {
    switch (c) {
        case PairCase::A1: return "A1";
        case PairCase::A2: return "A2";
        case PairCase::B1: return "B1";
        case PairCase::B2: return "B2";
        case PairCase::tangent_excluded: return "tangent-excluded";
    }
    return "?";
}

const char* family_name(CanonicalFamily f) {
    switch (f) {
        case CanonicalFamily::through_origin_and_point: return "through-origin-and-point";
        case CanonicalFamily::two_boundary_points: return "two-boundary-points";
        case CanonicalFamily::parallels_and_point: return "parallels-and-point";
        case CanonicalFamily::origin_and_parallels: return "origin-and-parallels";
        case CanonicalFamily::two_parallel_families: return "two-parallel-families";
        case CanonicalFamily::none: return "none";
    }
    return "?";
}

void write_pencil(JsonWriter& w, const CanonicalPencil& p) {
    w.begin_object();
    w.key("kind").value(p.parallel ? "parallel" : "through-point");
    w.key("value").begin_array().value(p.value.z).value(p.value.w).end_array();
    w.end_object();
}

}  // namespace

std::string to_json(const PairClassification& cls, const ComplexPoint2& a,
                    const ComplexPoint2& b) {
    JsonWriter w;
    w.begin_object();
    w.key("a").begin_array().value(a.z).value(a.w).end_array();
    w.key("b").begin_array().value(b.z).value(b.w).end_array();
    w.key("case").value(case_name(cls.kind));
    w.key("canonical_family").value(family_name(cls.family));
    if (cls.kind != PairCase::tangent_excluded) {
        w.key("image_a");
        write_pencil(w, cls.image_a);
        w.key("image_b");
        write_pencil(w, cls.image_b);
        w.key("t").value(cls.t);
        w.key("alpha").value(cls.alpha);
        w.key("beta").value(cls.beta);
        w.key("eta_a").value(cls.eta_a);
        w.key("eta_b").value(cls.eta_b);
        w.key("transform").begin_array();
        for (const auto& step : cls.transform.steps) {
            w.begin_object();
            if (std::holds_alternative<BallAutomorphism>(step)) {
                const auto& phi = std::get<BallAutomorphism>(step);
                w.key("type").value("ball-automorphism");
                w.key("center")
                    .begin_array()
                    .value(phi.center().z)
                    .value(phi.center().w)
                    .end_array();
            } else {
                const auto& U = std::get<Unitary2>(step);
                w.key("type").value("unitary");
                w.key("matrix")
                    .begin_array()
                    .value(U.m00)
                    .value(U.m01)
                    .value(U.m10)
                    .value(U.m11)
                    .end_array();
            }
            w.end_object();
        }
        w.end_array();
    }
    w.end_object();
    return w.str();
}

std::string to_json(const FiberDecomposition& fib, double eta, int samples) {
    JsonWriter w;
    w.begin_object();
    w.key("z").value(fib.z);
    w.key("t").value(fib.t);
    w.key("eta").value(eta);
    w.key("real_axis").value(fib.real_axis);
    if (!fib.real_axis) {
        w.key("segment").begin_array().value(fib.seg_from).value(fib.seg_to).end_array();
        w.key("circle");
        w.begin_object();
        w.key("center").value(fib.arc_circle.center);
        w.key("radius").value(fib.arc_circle.radius);
        w.end_object();
        w.key("arc_endpoints").begin_array().value(fib.arc_from).value(fib.arc_to).end_array();
        w.key("T_end").value(fib.T_end);
        w.key("arc_samples").begin_array();
        for (const cplx& p : fib.sample_arc(samples)) w.value(p);
        w.end_array();
    }
    w.end_object();
    return w.str();
}

std::string to_json(const SemiquadricIntersection& res, const Semiquadric& s1,
                    const Semiquadric& s2) {
    JsonWriter w;
    w.begin_object();
    w.key("a1").value(s1.a);
    w.key("r1").value(s1.r);
    w.key("a2").value(s2.a);
    w.key("r2").value(s2.r);
    const char* kind = res.kind == SemiquadricIntersection::Kind::none
                           ? "none"
                           : res.kind == SemiquadricIntersection::Kind::one ? "one" : "degenerate";
    w.key("kind").value(kind);
    if (res.kind == SemiquadricIntersection::Kind::one) {
        w.key("point").begin_array().value(res.point.z).value(res.point.w).end_array();
    }
    w.end_object();
    return w.str();
}

std::string gallery_to_json() {
    JsonWriter w;
    w.begin_object();
    w.key("entries").begin_array();
    for (const GalleryEntry& e : gallery_catalog()) {
        w.begin_object();
        w.key("id").value(e.id);
        w.key("description").value(e.description);
        w.key("real_analytic").value(e.real_analytic);
        w.key("expected");
        w.begin_object();
        w.key("ball").value(e.expected.ball_pass ? "pass" : "fail");
        w.key("families").begin_array();
        for (const auto& fv : e.expected.families) {
            w.begin_object();
            w.key("family").value(fv.family.describe());
            w.key("verdict").value(fv.pass ? "pass" : "fail");
            w.key("note").value(fv.note);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string family_spec_to_json(const FamilySpec& spec, int density) {
    JsonWriter w;
    w.begin_object();
    const char* kind = nullptr;
    switch (spec.kind) {
        case FamilySpec::Kind::two_boundary_points: kind = "two_boundary_points"; break;
        case FamilySpec::Kind::concentric_and_through_one:
            kind = "concentric_and_through_one";
            break;
        case FamilySpec::Kind::concentric_and_moebius: kind = "concentric_and_moebius"; break;
        case FamilySpec::Kind::moebius_pair: kind = "moebius_pair"; break;
    }
    w.key("kind").value(kind);
    w.key("params");
    w.begin_object();
    w.key("alpha").value(spec.alpha);
    w.key("beta").value(spec.beta);
    w.key("t").value(spec.t);
    w.end_object();
    w.key("density").value(density);
    w.end_object();
    return w.str();
}

FamilySpec family_spec_from_json(const std::string& text, int* density_out) {
    const nlohmann::json j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    const auto params = j.value("params", nlohmann::json::object());
    auto get_cplx = [&](const char* key) -> cplx {
        if (!params.contains(key)) return {};
        const auto& v = params.at(key);
        return {v.at(0).get<double>(), v.at(1).get<double>()};
    };
    FamilySpec spec;
    if (kind == "two_boundary_points")
        spec = FamilySpec::two_boundary_points(get_cplx("alpha"), get_cplx("beta"));
    else if (kind == "concentric_and_through_one")
        spec = FamilySpec::concentric_and_through_one();
    else if (kind == "concentric_and_moebius")
        spec = FamilySpec::concentric_and_moebius(params.at("t").get<double>());
    else if (kind == "moebius_pair")
        spec = FamilySpec::moebius_pair(get_cplx("alpha"), get_cplx("beta"));
    else
        throw std::invalid_argument("family spec: unknown kind '" + kind + "'");
    if (density_out) *density_out = j.value("density", defaults::density);
    return spec;
}

std::string to_csv(const ExtensionReport& rep) {
    std::string out = "index,subject,residual,verdict,skipped\n";
    if (rep.lines.empty()) {
        out += "0,\"" + rep.subject + "\"," + csv_num(rep.residual) + "," +
               (rep.pass ? "pass" : "fail") + ",0\n";
        return out;
    }
    for (const auto& e : rep.lines) {
        out += std::to_string(e.index) + ",\"" + e.subject + "\"," + csv_num(e.residual) + "," +
               (e.skipped ? "skipped" : (e.pass ? "pass" : "fail")) + "," +
               (e.skipped ? "1" : "0") + "\n";
    }
    return out;
}

std::string to_csv(const DiscAnalyticityReport& rep) {
    std::string out = "m,defect";
    for (double r : rep.radii) out += ",re_a(" + csv_num(r) + "),im_a(" + csv_num(r) + ")";
    out += "\n";
    for (const auto& row : rep.rows) {
        out += std::to_string(row.m) + "," + csv_num(row.defect);
        for (size_t i = 0; i < row.a.size(); ++i)
            out += "," + csv_num(row.a[i].real()) + "," + csv_num(row.a[i].imag());
        out += "\n";
    }
    return out;
}

std::string to_csv(const BallVerdictReport& rep) {
    std::string out = "n,negative_residual,consistency_defect,verdict\n";
    for (const auto& pn : rep.per_n)
        out += std::to_string(pn.n) + "," + csv_num(pn.negative_residual) + "," +
               csv_num(pn.consistency_defect) + "," + (pn.pass ? "pass" : "fail") + "\n";
    return out;
}

std::string to_csv(const Prop71Report& rep) {
    std::string out = "x,family,param,y,violation\n";
    for (const auto& h : rep.counterexamples)
        out += csv_num(h.x) + "," + std::string(1, h.family) + "," + csv_num(h.param) + "," +
               csv_num(h.y) + "," + csv_num(h.violation) + "\n";
    return out;
}

}  // namespace holex
