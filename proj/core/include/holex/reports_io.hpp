#pragma once

#include <string>

#include "holex/circle_families.hpp"
#include "holex/extension_tests.hpp"
#include "holex/gallery.hpp"
#include "holex/geometry.hpp"
#include "holex/semiquadrics.hpp"
#include "holex/slicing.hpp"

namespace holex {

// JSON serializers with fixed field order; see JsonWriter for the
// determinism contract. Each report echoes the parameters that produced it.

std::string to_json(const ExtensionReport& rep);
std::string to_json(const DiscAnalyticityReport& rep);
std::string to_json(const BallVerdictReport& rep);
std::string to_json(const Prop71Report& rep);
std::string to_json(const ConvergenceReport& rep);
std::string to_json(const PairClassification& cls, const ComplexPoint2& a,
                    const ComplexPoint2& b);
std::string to_json(const FiberDecomposition& fib, double eta, int samples);
std::string to_json(const SemiquadricIntersection& res, const Semiquadric& s1,
                    const Semiquadric& s2);
std::string gallery_to_json();
std::string family_spec_to_json(const FamilySpec& spec, int density);
FamilySpec family_spec_from_json(const std::string& text, int* density_out);

// CSV summaries (one row per line/circle) for plotting.
std::string to_csv(const ExtensionReport& rep);
std::string to_csv(const DiscAnalyticityReport& rep);
std::string to_csv(const BallVerdictReport& rep);
std::string to_csv(const Prop71Report& rep);

}  // namespace holex
