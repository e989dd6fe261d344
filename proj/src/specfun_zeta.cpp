#include <algorithm>
#include <map>
#include <mutex>

#include "internal.hpp"
#include "zc/specfun.hpp"

namespace zc {

namespace {

struct HurwitzPair {
    Real value;
    Real derivative;
};

// Euler-Maclaurin for zeta_H(s; a) and, optionally, its s-derivative.
// Direct terms until n + a >= u0, then the remainder expansion at u = n + a.
HurwitzPair hurwitz_em(long s, const Real& a, bool want_derivative) {
    const int W = detail::working_digits();
    const Real eps = detail::eps_working(2);
    const double u0 = std::ceil(0.4 * W) + 10.0 + 0.5 * static_cast<double>(s);

    Real sum(0L), dsum(0L);
    Real n_plus_a = a;
    const Real ds = Real(s - 1);
    while (n_plus_a.to_double() < u0) {
        Real t = pow(n_plus_a, -s);
        sum += t;
        if (want_derivative) dsum -= log(n_plus_a) * t;
        n_plus_a += 1L;
        // tail sum_{m >= n} (m+a)^-s <= t * (1 + (n+a)/(s-1))
        if (abs(t) * (n_plus_a / ds + 1L) < eps * abs(sum)) {
            return {sum, dsum};
        }
    }
    const Real& u = n_plus_a;
    const Real L = log(u);
    const Real u1s = pow(u, 1 - s);  // u^(1-s)
    const Real us = u1s / u;          // u^(-s)
    sum += u1s / ds + us / 2L;
    if (want_derivative) {
        dsum += -L * u1s / ds - u1s / (ds * ds) - L * us / 2L;
    }
    // term_k = B_2k/(2k)! * P_k(s) * u^(-s-2k+1), P_k(s) = s (s+1) ... (s+2k-2)
    Real pk = Real(s) / 2L;     // P_1(s) / 2!
    Real pk_log_deriv = Real(1L) / s;  // P_k'/P_k
    Real upow = us / u;                  // u^(-s-1)
    Real prev_abs;
    bool have_prev = false;
    const Real inv_u2 = 1L / (u * u);
    for (long k = 1;; ++k) {
        if (k > 1) {
            pk = pk * ((s + 2 * k - 3) * (s + 2 * k - 2)) / ((2 * k - 1) * (2 * k));
            pk_log_deriv += Real(1L) / (s + 2 * k - 3) + Real(1L) / (s + 2 * k - 2);
            upow *= inv_u2;
        }
        Real coeff = Real(bernoulli_number(2 * k)) * pk;
        Real term = coeff * upow;
        sum += term;
        if (want_derivative) dsum += term * (pk_log_deriv - L);
        Real at = abs(term);
        if (at < eps * abs(sum)) break;
        if (have_prev && at > prev_abs) {
            throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin remainder stopped decreasing (s=" +
                                   std::to_string(s) + ", u=" + std::to_string(u.to_double()) + ")");
        }
        prev_abs = at;
        have_prev = true;
        if (k > 10000) throw ConvergenceError("hurwitz_zeta: too many correction terms");
    }
    return {sum, dsum};
}

void check_hurwitz_args(long s, const Real& x, const char* who) {
    if (s == 1) throw PoleError(std::string(who) + ": pole at s = 1");
    if (s < 2) throw DomainError(std::string(who) + ": requires integer s >= 2");
    if (x.sign() <= 0) throw DomainError(std::string(who) + ": requires x > 0");
}

std::mutex zeta_mutex;
std::map<std::pair<long, mpfr_prec_t>, Real> zeta_cache;
std::map<std::pair<long, mpfr_prec_t>, Real> zeta_prime_cache;

}  // namespace

Real hurwitz_zeta(long s, const Real& x) {
    check_hurwitz_args(s, x, "hurwitz_zeta");
    return detail::guarded(5, [&] { return hurwitz_em(s, x, false).value; });
}

Real hurwitz_zeta_prime(long s, const Real& x) {
    check_hurwitz_args(s, x, "hurwitz_zeta_prime");
    return detail::guarded(8, [&] { return hurwitz_em(s, x, true).derivative; });
}

Real zeta_int(long s) {
    if (s == 1) throw PoleError("zeta_int: pole at s = 1");
    if (s < 2) throw DomainError("zeta_int: requires s >= 2");
    const auto key = std::make_pair(s, current_context().bits());
    {
        std::lock_guard<std::mutex> lock(zeta_mutex);
        auto it = zeta_cache.find(key);
        if (it != zeta_cache.end()) return rounded(it->second);
    }
    Real v;
    if (s % 2 == 0) {
        v = detail::guarded(3, [&] { return Real(zeta_even_rational(s / 2)) * pow(pi(), s); });
    } else {
        v = hurwitz_zeta(s, Real(1L));
    }
    std::lock_guard<std::mutex> lock(zeta_mutex);
    zeta_cache.emplace(key, v);
    return v;
}

Real zeta_prime_int(long s) {
    if (s == 1) throw PoleError("zeta_prime_int: pole at s = 1");
    if (s < 2) throw DomainError("zeta_prime_int: requires s >= 2");
    const auto key = std::make_pair(s, current_context().bits());
    {
        std::lock_guard<std::mutex> lock(zeta_mutex);
        auto it = zeta_prime_cache.find(key);
        if (it != zeta_prime_cache.end()) return rounded(it->second);
    }
    Real v = hurwitz_zeta_prime(s, Real(1L));
    std::lock_guard<std::mutex> lock(zeta_mutex);
    zeta_prime_cache.emplace(key, v);
    return v;
}

Complex digamma(const Complex& z) {
    if (z.im.is_zero() && z.re.sign() <= 0 && z.re.is_integer()) {
        throw PoleError("digamma: pole at nonpositive integer " + decimal_string(z.re, 10));
    }
    return detail::guarded(8, [&]() -> Complex {
        const int W = detail::working_digits();
        const Real R = Real(static_cast<long>(std::ceil(0.4 * W)) + 10);
        Complex w = z;
        Complex reflection(0L);
        if (w.re < -R) {
            // psi(z) = psi(1 - z) - pi cot(pi z)
            reflection = -(pi() * cot(w * pi()));
            w = 1L - w;
        }
        Complex shift(0L);
        while (w.re < R) {
            shift += 1L / w;
            w += Complex(1L);
        }
        const Real eps = detail::eps_working(2);
        Complex result = log(w) - 1L / (2L * w);
        Complex inv_w2 = 1L / (w * w);
        Complex wpow = inv_w2;
        Real prev;
        for (long k = 1;; ++k) {
            Complex term = wpow * Real(bernoulli_number(2 * k) / Rational(2 * k));
            result -= term;
            Real at = abs(term);
            if (at < eps * abs(result)) break;
            if (k > 1 && at > prev) throw ConvergenceError("digamma: asymptotic series diverged");
            prev = at;
            wpow *= inv_w2;
        }
        return result - shift + reflection;
    });
}

// Li_s(e^{i theta}) = sum_{k != s-1} zeta(s-k) (i theta)^k / k!
//                   + (i theta)^(s-1)/(s-1)! (H_{s-1} - log(-i theta)),  |theta| <= pi.
Complex polylog_unit_circle(long s, const Real& theta) {
    if (s < 1) throw DomainError("polylog_unit_circle: requires s >= 1");
    return detail::guarded(10, [&]() -> Complex {
        const Real two_pi = 2L * pi();
        Real t = theta - two_pi * floor(theta / two_pi + Real(Rational(1, 2)));
        if (t.is_zero()) {
            if (s == 1) throw PoleError("polylog_unit_circle: Li_1(1) diverges");
            return Complex(zeta_int(s));
        }
        const Real eps = detail::eps_working(2);
        Complex it = imag_unit(t);
        Complex power(1L);  // (i t)^k / k!
        Complex sum(0L);
        for (long k = 0;; ++k) {
            if (k > 0) power = power * it / k;
            if (k == s - 1) {
                Real harmonic(0L);
                for (long j = 1; j <= s - 1; ++j) harmonic += Real(1L) / j;
                sum += power * (Complex(harmonic) - log(imag_unit(-t)));
                continue;
            }
            const long arg = s - k;
            Real zv = (arg >= 2) ? zeta_int(arg) : Real(zeta_nonpositive(-arg));
            Complex term = power * zv;
            sum += term;
            if (k > s + 2 && !zv.is_zero() && abs(term) < eps * max(Real(1L), abs(sum))) break;
            if (k > 100000) throw ConvergenceError("polylog_unit_circle: no convergence");
        }
        return sum;
    });
}

}  // namespace zc
