#include <map>
#include <mutex>
#include <tuple>

#include "internal.hpp"
#include "zc/specfun.hpp"

namespace zc {

Integer divisor_sigma(long s, long n) {
    if (n < 1) throw DomainError("divisor_sigma: n must be positive");
    if (s < 0) throw DomainError("divisor_sigma: s must be >= 0");
    Integer total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const long e = n / d;
        total += boost::multiprecision::pow(Integer(d), static_cast<unsigned>(s));
        if (e != d) total += boost::multiprecision::pow(Integer(e), static_cast<unsigned>(s));
    }
    return total;
}

std::vector<Integer> divisor_sigma_table(long s, long M) {
    if (s < 0) throw DomainError("divisor_sigma_table: s must be >= 0");
    std::vector<Integer> t(static_cast<size_t>(M + 1), Integer(0));
    for (long d = 1; d <= M; ++d) {
        const Integer ds = boost::multiprecision::pow(Integer(d), static_cast<unsigned>(s));
        for (long m = d; m <= M; m += d) t[m] += ds;
    }
    return t;
}

std::vector<Real> divisor_tau_neg_table(long c, long M) {
    std::vector<Integer> sigma = divisor_sigma_table(c, M);
    std::vector<Real> t(static_cast<size_t>(M + 1), Real(0L));
    for (long n = 1; n <= M; ++n) {
        t[n] = c == 0 ? Real(sigma[n])
                      : Real(Rational(sigma[n], boost::multiprecision::pow(Integer(n), static_cast<unsigned>(c))));
    }
    return t;
}

namespace {

// 2 sqrt(2) pi: decay rate of Omega(x) ~ exp(-2 sqrt(2) pi sqrt(x)).
constexpr double kOmegaDecay = 8.885765876316732;

double cutoff_double() {
    const double d = detail::requested_digits() + 5.0;
    const double r = d * std::log(10.0) / kOmegaDecay;
    return r * r;
}

// coef_k = (-1)^(k+1) zeta(2k) zeta_H(2k+c, A+1), k = 1..K (index 0 unused).
std::vector<Real> collapse_tail_coefficients(long c, long A, double x_max) {
    const int W = detail::working_digits();
    const double ratio = x_max / (A + 1.0);
    const int K = static_cast<int>(std::ceil((W + 5) * std::log(10.0) / (-2.0 * std::log(ratio)))) + 2;
    std::vector<Real> coef(static_cast<size_t>(K + 1), Real(0L));
    const Real a1 = Real(A + 1);
    for (int k = 1; k <= K; ++k) {
        Real v = zeta_int(2 * k) * hurwitz_zeta(2 * k + c, a1);
        coef[k] = (k % 2 == 1) ? v : Real(-v);
    }
    return coef;
}

struct CollapseTable {
    long A = 0;
    std::vector<Real> coef;
};

std::mutex kosh_mutex;
std::map<std::tuple<long, mpfr_prec_t, int>, CollapseTable> kosh_cache;

CollapseTable cached_table(long c) {
    const auto key = std::make_tuple(c, current_context().bits(), detail::requested_digits());
    {
        std::lock_guard<std::mutex> lock(kosh_mutex);
        auto it = kosh_cache.find(key);
        if (it != kosh_cache.end()) return it->second;
    }
    CollapseTable t;
    const double xc = cutoff_double();
    t.A = 2 * static_cast<long>(std::ceil(xc)) + 30;
    t.coef = collapse_tail_coefficients(c, t.A, xc);
    std::lock_guard<std::mutex> lock(kosh_mutex);
    kosh_cache.emplace(key, t);
    return t;
}

// sum_{a<=A} a^-c (pi t coth(pi t) - 1)/(2 x^2), t = x/a, plus sum_k coef_k x^(2k-2).
Real collapse_sum(const Real& x, long c, long A, const std::vector<Real>& coef) {
    const double xd = x.to_double();
    const double small = std::max(1e-300, 3.14159 * xd / static_cast<double>(A));
    const int extra = 10 + std::max(0, static_cast<int>(std::ceil(-2.0 * std::log10(std::min(1.0, small)))));
    const Real eps = detail::eps_working(0);  // coefficients are sized for the caller's precision
    return detail::guarded(extra, [&] {
        const Real p = pi();
        std::vector<Real> parts;
        parts.reserve(static_cast<size_t>(A));
        for (long a = 1; a <= A; ++a) {
            Real u = p * x / a;
            Real v = u * coth(u) - 1L;
            if (c != 0) v *= pow(Real(a), -c);
            parts.push_back(v);
        }
        Real head = detail::pairwise_sum(parts) / (2L * x * x);
        Real tail(0L);
        const Real x2 = x * x;
        Real xpow(1L);
        Real term(0L);
        for (size_t k = 1; k < coef.size(); ++k) {
            if (k > 1) xpow *= x2;
            term = coef[k] * xpow;
            tail += term;
        }
        if (abs(term) > eps * abs(head + tail)) throw ConvergenceError("koshliakov_sum: collapsed tail did not converge");
        return head + tail;
    });
}

Real asymptotic_sum(const Real& x, long c) {
    return detail::guarded(5, [&] {
        const Real p = pi();
        if (c == 0) return p / x * (euler_gamma() + log(x) / 2L) + 1L / (4L * x * x);
        const Real cos_term = ((c / 2) % 2 == 0) ? Real(1L) : Real(-1L);
        return p * zeta_int(1 + c) / (2L * x) +
               p * Real(zeta_nonpositive(c - 1)) / (2L * cos_term) * pow(x, -1 - c) -
               zeta_int(c) / (2L * x * x);
    });
}

}  // namespace

Real koshliakov_cutoff() { return Real(cutoff_double()); }

Real koshliakov_sum(const Real& x, long c, bool allow_asymptotic) {
    if (x.sign() <= 0) throw DomainError("koshliakov_sum: requires x > 0");
    if (c < 0) throw DomainError("koshliakov_sum: requires c >= 0");
    if (c == 1) throw DomainError("koshliakov_sum: c = 1 is not supported (pole of zeta(1 - c + ...))");
    const double xd = x.to_double();
    const double xc = cutoff_double();
    if (xd <= xc) {
        CollapseTable t = cached_table(c);
        return collapse_sum(x, c, t.A, t.coef);
    }
    if (allow_asymptotic && c % 2 == 0) return asymptotic_sum(x, c);
    const long A = 2 * static_cast<long>(std::ceil(xd)) + 30;
    std::vector<Real> coef = collapse_tail_coefficients(c, A, xd);
    return collapse_sum(x, c, A, coef);
}

Real koshliakov_omega(const Real& x, OmegaMethod method) {
    if (x.sign() <= 0) throw DomainError("koshliakov_omega: requires x > 0");
    const double xd = x.to_double();
    if (method == OmegaMethod::partial_fraction) {
        const int extra = 10 + static_cast<int>(std::ceil(kOmegaDecay * std::sqrt(xd) / std::log(10.0)));
        return detail::guarded(extra, [&] {
            const Real p = pi();
            return -euler_gamma() - log(x) / 2L - 1L / (4L * p * x) + x / p * koshliakov_sum(x, 0, false);
        });
    }
    return detail::guarded(10, [&] {
        const int W = detail::working_digits();
        const double r = (W + 5) * std::log(10.0) / kOmegaDecay;
        const long J = static_cast<long>(std::ceil(r * r / xd)) + 2;
        const std::vector<Integer> tau = divisor_sigma_table(0, J);
        const Real root_half = sqrt(Real(Rational(1, 2)));
        const Complex rot(root_half, root_half);  // e^{i pi/4}
        const Real four_pi = 4L * pi();
        std::vector<Real> parts;
        parts.reserve(static_cast<size_t>(J));
        for (long j = 1; j <= J; ++j) {
            Complex z = rot * (four_pi * sqrt(x * j));
            parts.push_back(bessel_k0(z).re * (4L * tau[j].convert_to<long>()));
        }
        return detail::pairwise_sum(parts);
    });
}

}  // namespace zc
