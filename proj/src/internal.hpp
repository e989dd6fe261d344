#pragma once

// Helpers shared by the library sources; not installed.

#include <cmath>
#include <utility>
#include <vector>

#include "zc/numerics.hpp"

namespace zc {

inline std::vector<Real> rounded(const std::vector<Real>& v) {
    std::vector<Real> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(rounded(x));
    return out;
}

inline std::vector<Complex> rounded(const std::vector<Complex>& v) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(rounded(x));
    return out;
}

}  // namespace zc

namespace zc::detail {

inline int working_digits() { return current_context().working_digits(); }
inline int requested_digits() { return current_context().decimal_digits; }

/// 10^-(working digits + extra) at the current precision.
inline Real eps_working(int extra = 0) { return pow10(-(working_digits() + extra)); }

/// Runs f() with `extra` more guard digits, then rounds into the caller's scope.
template <class F>
auto guarded(int extra, F&& f) {
    const PrecisionContext outer = current_context();
    auto result = [&] {
        PrecisionScope scope(outer.with_extra_guard(extra));
        return f();
    }();
    return rounded(result);
}

inline bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

inline double to_double(const Complex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

/// Fixed-shape pairwise reduction so that sums are reproducible.
template <class T>
T pairwise_sum(std::vector<T> v) {
    if (v.empty()) return T(0L);
    while (v.size() > 1) {
        std::vector<T> next;
        next.reserve((v.size() + 1) / 2);
        for (size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
        if (v.size() % 2) next.push_back(v.back());
        v = std::move(next);
    }
    return v.front();
}

}  // namespace zc::detail
