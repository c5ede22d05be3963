#pragma once

#include <complex>
#include <cmath>
#include <string>

namespace holex {

using cplx = std::complex<double>;

/// A point of C^2 with coordinates (z, w).
struct ComplexPoint2 {
    cplx z{};
    cplx w{};

    friend ComplexPoint2 operator+(const ComplexPoint2& a, const ComplexPoint2& b) {
        return {a.z + b.z, a.w + b.w};
    }
    friend ComplexPoint2 operator-(const ComplexPoint2& a, const ComplexPoint2& b) {
        return {a.z - b.z, a.w - b.w};
    }
    friend ComplexPoint2 operator*(cplx s, const ComplexPoint2& p) {
        return {s * p.z, s * p.w};
    }
    friend ComplexPoint2 operator*(const ComplexPoint2& p, cplx s) { return s * p; }
    ComplexPoint2 operator-() const { return {-z, -w}; }
};

/// Hermitian inner product <x|y> = x1*conj(y1) + x2*conj(y2).
inline cplx inner(const ComplexPoint2& x, const ComplexPoint2& y) {
    return x.z * std::conj(y.z) + x.w * std::conj(y.w);
}

inline double norm_sq(const ComplexPoint2& p) { return std::norm(p.z) + std::norm(p.w); }
inline double norm(const ComplexPoint2& p) { return std::sqrt(norm_sq(p)); }
inline double dist(const ComplexPoint2& a, const ComplexPoint2& b) { return norm(a - b); }

/// Integer power by repeated multiplication; n may be negative.
inline cplx ipow(cplx base, int n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    cplx r = 1.0;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

/// Centralized defaults, echoed into every report.
namespace defaults {
inline constexpr int order = 256;
inline constexpr double tolerance = 1e-8;
inline constexpr double consistency_tolerance = 1e-8;
inline constexpr int density = 64;
inline constexpr int prop71_grid = 50;
inline constexpr int fiber_samples = 64;
inline constexpr double radii[] = {0.5, 0.7, 0.9};
inline constexpr int n_min = -4;
inline constexpr int n_max = 8;
}  // namespace defaults

}  // namespace holex
