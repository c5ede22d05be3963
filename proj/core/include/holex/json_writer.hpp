#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "holex/types.hpp"

namespace holex {

/// Minimal JSON emitter with fixed field order and fixed float formatting
/// (17 significant digits), so identical inputs produce byte-identical
/// output. Inputs are parsed with an ordinary JSON library; reports are
/// written with this.
class JsonWriter {
public:
    JsonWriter& begin_object() {
        prefix();
        out_ += '{';
        stack_.push_back(false);
        return *this;
    }
    JsonWriter& end_object() {
        stack_.pop_back();
        out_ += '}';
        return *this;
    }
    JsonWriter& begin_array() {
        prefix();
        out_ += '[';
        stack_.push_back(false);
        return *this;
    }
    JsonWriter& end_array() {
        stack_.pop_back();
        out_ += ']';
        return *this;
    }
    JsonWriter& key(std::string_view k) {
        prefix();
        append_string(k);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }
    JsonWriter& value(double v) {
        prefix();
        char buf[64];
        if (!std::isfinite(v)) throw std::logic_error("JsonWriter: non-finite value");
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out_ += buf;
        return *this;
    }
    JsonWriter& value(int v) { return value_integral(static_cast<long long>(v)); }
    JsonWriter& value(long long v) { return value_integral(v); }
    JsonWriter& value(bool v) {
        prefix();
        out_ += v ? "true" : "false";
        return *this;
    }
    JsonWriter& value(std::string_view s) {
        prefix();
        append_string(s);
        return *this;
    }
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    /// Complex scalars as [re, im].
    JsonWriter& value(cplx v) {
        begin_array();
        value(v.real());
        value(v.imag());
        return end_array();
    }

    const std::string& str() const { return out_; }

private:
    JsonWriter& value_integral(long long v) {
        prefix();
        out_ += std::to_string(v);
        return *this;
    }
    void prefix() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back()) out_ += ',';
            stack_.back() = true;
        }
    }
    void append_string(std::string_view s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                case '\r': out_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += c;
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> stack_;
    bool pending_value_ = false;
};

}  // namespace holex
