#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "internal.hpp"
#include "zc/specfun.hpp"

namespace zc {

namespace {

// B_0..B_nmax from tangent numbers T_k:
// B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> compute_bernoulli(long nmax) {
    std::vector<Rational> b(static_cast<size_t>(nmax + 1), Rational(0));
    b[0] = 1;
    if (nmax >= 1) b[1] = Rational(-1, 2);
    const long K = nmax / 2;
    if (K < 1) return b;
    std::vector<Integer> t(static_cast<size_t>(K + 1), Integer(0));
    t[1] = 1;
    for (long k = 2; k <= K; ++k) t[k] = Integer(k - 1) * t[k - 1];
    for (long k = 2; k <= K; ++k) {
        for (long j = k; j <= K; ++j) t[j] = Integer(j - k) * t[j - 1] + Integer(j - k + 2) * t[j];
    }
    for (long k = 1; k <= K; ++k) {
        Integer four_k = Integer(1) << static_cast<unsigned>(2 * k);
        Integer num = Integer(2 * k) * t[k];
        if (k % 2 == 0) num = -num;
        b[2 * k] = Rational(num, four_k * (four_k - 1));
    }
    return b;
}

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;

Integer binomial(long n, long k) {
    Integer r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

Rational bernoulli_number(long n) {
    if (n < 0) throw DomainError("bernoulli_number: negative index");
    {
        std::shared_lock lock(bernoulli_mutex);
        if (static_cast<size_t>(n) < bernoulli_cache.size()) return bernoulli_cache[n];
    }
    std::unique_lock lock(bernoulli_mutex);
    if (static_cast<size_t>(n) >= bernoulli_cache.size()) {
        bernoulli_cache = compute_bernoulli(std::max<long>(64, 2 * n));
    }
    return bernoulli_cache[n];
}

Rational bernoulli_poly(long n, const Rational& x) {
    if (n < 0) throw DomainError("bernoulli_poly: negative degree");
    Rational p = 0;
    for (long k = 0; k <= n; ++k) p = p * x + Rational(binomial(n, k)) * bernoulli_number(k);
    return p;
}

Real bernoulli_poly(long n, const Real& x) {
    if (n < 0) throw DomainError("bernoulli_poly: negative degree");
    return detail::guarded(5 + static_cast<int>(n / 3), [&] {
        Real p(0L);
        for (long k = 0; k <= n; ++k) {
            p = p * x + Real(Rational(binomial(n, k)) * bernoulli_number(k));
        }
        return p;
    });
}

// E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
Rational euler_poly(long n, const Rational& x) {
    if (n < 0) throw DomainError("euler_poly: negative degree");
    Rational two_pow = Rational(Integer(1) << static_cast<unsigned>(n + 1));
    return Rational(2, n + 1) *
           (bernoulli_poly(n + 1, x) - two_pow * bernoulli_poly(n + 1, x / Rational(2)));
}

Real euler_poly(long n, const Real& x) {
    if (n < 0) throw DomainError("euler_poly: negative degree");
    return detail::guarded(10 + static_cast<int>(n / 2), [&] {
        Real half = x / 2L;
        return (bernoulli_poly(n + 1, x) - ldexp(bernoulli_poly(n + 1, half), n + 1)) * 2L /
               (n + 1);
    });
}

Rational zeta_nonpositive(long n) {
    if (n < 0) throw DomainError("zeta_nonpositive: argument must be >= 0");
    Rational v = bernoulli_number(n + 1) / Rational(n + 1);
    return (n % 2 == 0) ? v : Rational(-v);
}

// zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)
Rational zeta_even_rational(long k) {
    if (k < 1) throw DomainError("zeta_even_rational: k must be >= 1");
    Integer fact = 1;
    for (long j = 2; j <= 2 * k; ++j) fact *= j;
    Rational v = bernoulli_number(2 * k) * Rational(Integer(1) << static_cast<unsigned>(2 * k)) /
                 Rational(2 * fact);
    return (k % 2 == 1) ? v : Rational(-v);
}

}  // namespace zc
