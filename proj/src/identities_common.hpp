#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "internal.hpp"
#include "zc/identities.hpp"
#include "zc/specfun.hpp"

namespace zc::detail {

/// Digits below the request tolerated for identities with exponentially
/// convergent sums.
inline constexpr long kFastSlack = 5;

inline VerificationReport new_report(const std::string& name, const PrecisionContext& ctx, long slack) {
    VerificationReport r;
    r.identity_name = name;
    r.digits_requested = ctx.decimal_digits;
    r.required_digits = ctx.decimal_digits - slack;
    return r;
}

inline std::string param(const Real& x) { return decimal_string(x, std::min(requested_digits(), 30)); }
inline std::string param(long n) { return std::to_string(n); }
inline std::string param(const Complex& z) {
    if (z.im.is_zero()) return param(z.re);
    return param(z.re) + (z.im.sign() < 0 ? "-" : "+") + param(abs(z.im)) + "i";
}

/// Number of terms M with e^(-rate M) below 10^-(working digits + 5).
inline long terms_for_rate(double rate, long minimum = 8) {
    const double need = (working_digits() + 5) * std::log(10.0);
    return std::max(minimum, static_cast<long>(std::ceil(need / rate)) + 2);
}

/// sum_{n>=1} coth(pi c n) / n^p = zeta(p) + sum (coth - 1) / n^p, p >= 2.
inline Real coth_series(long p, const Real& c, long& M) {
    const Real pc = pi() * c;
    if (M <= 0) M = terms_for_rate(2.0 * pc.to_double());
    Real s(0L);
    for (long n = M; n >= 1; --n) s += coth_minus_one(Complex(pc * n)).re / pow(Real(n), p);
    return zeta_int(p) + s;
}

inline Real sign_pow(long e) { return (e % 2 == 0) ? Real(1L) : Real(-1L); }

}  // namespace zc::detail
