#include "holex/parse.hpp"

#include <cstdio>
#include <stdexcept>

namespace holex {

namespace {

double parse_real(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_complex: empty component");
    if (s == "+") return 1.0;
    if (s == "-") return -1.0;
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("parse_complex: trailing junk in '" + s + "'");
    return v;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_complex: empty input");
    std::string s = text;
    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (has_i) s.pop_back();

    // Split at the last top-level +/- that is not a leading sign and does not
    // follow an exponent marker.
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        const char c = s[k];
        if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }

    if (!has_i) {
        if (split == std::string::npos) return {parse_real(s), 0.0};
        throw std::invalid_argument("parse_complex: two components need a trailing 'i'");
    }
    if (split == std::string::npos) return {0.0, s.empty() ? 1.0 : parse_real(s)};
    return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

ComplexPoint2 parse_point(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("parse_point: expected 'c1,c2'");
    return {parse_complex(text.substr(0, comma)), parse_complex(text.substr(comma + 1))};
}

std::string format_complex(cplx v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

}  // namespace holex
