#pragma once

#include <string>

#include "holex/types.hpp"

namespace holex {

/// Parses a complex scalar written without spaces: "1", "-0.5", "2i",
/// "1+2i", "-1.5e-2+0.25i", "i", "-i". Throws std::invalid_argument on
/// malformed input.
cplx parse_complex(const std::string& text);

/// Parses "c1,c2" into a point of C^2.
ComplexPoint2 parse_point(const std::string& text);

/// Formats with up to 17 significant digits, round-trip safe.
std::string format_complex(cplx v);

}  // namespace holex
