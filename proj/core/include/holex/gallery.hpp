#pragma once

#include <string>
#include <vector>

#include "holex/extension_tests.hpp"
#include "holex/slicing.hpp"
#include "holex/types.hpp"

namespace holex {

/// Built-in boundary functions with closed-form evaluators and the verdicts
/// they are expected to produce. Stable identifiers (a CLI contract):
///   example11:k=<int>   z^{k+2}/conj(z) on bB (0 at z = 0); class C^k
///   absw2               |w|^2 (= 1-|z|^2 on bB)
///   km:p=<c>:q=<c>      conj(z) [z(1+|p|^2)+conj(p)(w-pz)] [z(1+|q|^2)+conj(q)(w-qz)]
///   mono:a=<int>:b=<int> z^a w^b
///   z2zw                z^2 + zw
/// Every evaluator validates its argument against | |z|^2+|w|^2 - 1 | < 1e-9.
struct GalleryEntry {
    std::string id;           // normalized identifier
    std::string description;
    BoundaryFunction fn;
    bool real_analytic = false;

    struct FamilyVerdict {
        LineFamilySpec family;
        bool pass;
        std::string note;
    };
    struct Expectation {
        std::vector<FamilyVerdict> families;
        bool ball_pass = false;
    };
    Expectation expected;
};

/// Parses an identifier like "km:p=1:q=-1" into a gallery entry.
/// Throws std::invalid_argument for unknown names or malformed parameters.
GalleryEntry make_gallery_entry(const std::string& id);

/// Evaluator lookup plus point validation; see make_gallery_entry.
cplx gallery_eval(const std::string& id, const ComplexPoint2& point);

/// Expected-verdict table for an entry.
GalleryEntry::Expectation gallery_expected(const std::string& id);

/// Identifiers (with placeholder parameters) of everything the gallery offers.
std::vector<GalleryEntry> gallery_catalog();

}  // namespace holex
