#include <algorithm>
#include <map>
#include <mutex>

#include "internal.hpp"
#include "zc/specfun.hpp"

namespace zc {

namespace {

using Series = std::vector<Real>;

bool is_negative_integer(const Real& nu) { return nu.sign() < 0 && nu.is_integer(); }

void check_series_range(double az) {
    const double bound = 1000.0 + 10.0 * detail::working_digits();
    if (az > bound) {
        throw RangeError("Bessel power series: |z| = " + std::to_string(az) +
                         " exceeds the series bound " + std::to_string(bound) +
                         "; raise the precision or reduce the argument");
    }
}

// sum_k (sign h^2)^k / (k! Gamma(nu+k+1)); truncated below the working epsilon
// relative to the largest term.
template <class T>
T bessel_series_core(const Real& nu, const T& h, int sign) {
    const Real eps = detail::eps_working(0);
    T w = h * h;
    if (sign < 0) w = -w;
    T t = T(Real(1L) / gamma(nu + 1L));
    T sum = t;
    Real tmax = abs(t);
    const double ah = detail::to_double(Complex(h));
    for (long k = 1;; ++k) {
        t = t * w / (nu + k);
        t = t / k;
        sum += t;
        Real at = abs(t);
        if (tmax < at) tmax = at;
        if (static_cast<double>(k) > ah + 1.0 && at <= eps * tmax) break;
        if (k > 1000000) throw ConvergenceError("Bessel series: too many terms");
    }
    return sum;
}

template <class T>
T pow_order(const T& h, const Real& nu) {
    if (nu.is_integer()) return pow(h, nu.to_long());
    return pow(h, nu);
}

int cancellation_digits(double az) { return static_cast<int>(std::ceil(az * 0.4343)) + 10; }

// Hankel coefficients a_k(nu) = prod_{j=1}^k (4 nu^2 - (2j-1)^2) / (k! 8^k), k = 0..K.
Series hankel_coefficients(const Real& nu, int K) {
    Series a;
    a.reserve(static_cast<size_t>(K + 1));
    a.emplace_back(1L);
    Real mu = 4L * nu * nu;
    for (int k = 1; k <= K; ++k) {
        long odd = 2L * k - 1;
        a.push_back(a.back() * (mu - odd * odd) / (8L * k));
    }
    return a;
}

Series series_mul(const Series& a, const Series& b, int K) {
    Series c(static_cast<size_t>(K + 1), Real(0L));
    for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// a / b with b[0] != 0.
Series series_div(const Series& a, const Series& b, int K) {
    Series c(static_cast<size_t>(K + 1), Real(0L));
    for (int k = 0; k <= K; ++k) {
        Real acc = k < static_cast<int>(a.size()) ? a[k] : Real(0L);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) acc -= b[j] * c[k - j];
        c[k] = acc / b[0];
    }
    return c;
}

// h(v(u)) where v has zero constant term.
Series series_compose(const Series& h, const Series& v, int K) {
    Series result(static_cast<size_t>(K + 1), Real(0L));
    if (!h.empty()) result[0] = h[0];
    Series power = v;
    for (int m = 1; m <= K && m < static_cast<int>(h.size()); ++m) {
        if (m > 1) power = series_mul(power, v, K);
        if (h[m].is_zero()) continue;
        for (int k = 0; k <= K; ++k) result[k] += h[m] * power[k];
    }
    return result;
}

Series series_pow(Series base, long p, int K) {
    Series result(static_cast<size_t>(K + 1), Real(0L));
    result[0] = Real(1L);
    while (p > 0) {
        if (p & 1) result = series_mul(result, base, K);
        p >>= 1;
        if (p) base = series_mul(base, base, K);
    }
    return result;
}

std::string nu_key(const Real& nu) {
    PrecisionScope scope(PrecisionContext(40, 10));
    return decimal_string(rounded(nu), 40);
}

Real mcmahon_guess(const Real& nu, long n) {
    Real beta = (Real(n) + nu / 2L - Real(Rational(1, 4))) * pi();
    Real mu = 4L * nu * nu;
    return beta - (mu - 1L) / (8L * beta);
}

std::mutex zero_mutex;
std::map<std::pair<std::string, mpfr_prec_t>, std::vector<Real>> zero_cache;

}  // namespace

// ------------------------------------------------------------ J and I

Complex bessel_j(const Real& nu, const Complex& z) {
    if (detail::is_zero(z)) {
        if (nu.is_zero()) return Complex(1L);
        if (nu.sign() > 0 || is_negative_integer(nu)) return Complex(0L);
        throw PoleError("bessel_j: J_nu(0) is infinite for negative non-integer nu");
    }
    if (is_negative_integer(nu)) {
        Complex r = bessel_j(-nu, z);
        return (nu.to_long() % 2 != 0) ? -r : r;
    }
    const double az = detail::to_double(z);
    check_series_range(az);
    return detail::guarded(cancellation_digits(az), [&] {
        Complex h = z / 2L;
        return bessel_series_core(nu, h, -1) * pow_order(h, nu);
    });
}

Real bessel_j(const Real& nu, const Real& x) {
    if (x.sign() < 0) {
        if (!nu.is_integer()) throw DomainError("bessel_j: negative argument with non-integer order");
        Real r = bessel_j(nu, Real(-x));
        return (nu.to_long() % 2 != 0) ? Real(-r) : r;
    }
    if (x.is_zero()) {
        if (nu.is_zero()) return Real(1L);
        if (nu.sign() > 0 || is_negative_integer(nu)) return Real(0L);
        throw PoleError("bessel_j: J_nu(0) is infinite for negative non-integer nu");
    }
    if (is_negative_integer(nu)) {
        Real r = bessel_j(Real(-nu), x);
        return (nu.to_long() % 2 != 0) ? Real(-r) : r;
    }
    const double az = x.to_double();
    check_series_range(az);
    return detail::guarded(cancellation_digits(az), [&] {
        Real h = x / 2L;
        return bessel_series_core(nu, h, -1) * pow_order(h, nu);
    });
}

Complex bessel_i(const Real& nu, const Complex& z) {
    if (detail::is_zero(z)) {
        if (nu.is_zero()) return Complex(1L);
        if (nu.sign() > 0 || is_negative_integer(nu)) return Complex(0L);
        throw PoleError("bessel_i: I_nu(0) is infinite for negative non-integer nu");
    }
    if (is_negative_integer(nu)) return bessel_i(-nu, z);
    const double az = detail::to_double(z);
    check_series_range(az);
    const bool positive_real = z.im.is_zero() && z.re.sign() > 0;
    return detail::guarded(positive_real ? 10 : cancellation_digits(az), [&] {
        Complex h = z / 2L;
        return bessel_series_core(nu, h, +1) * pow_order(h, nu);
    });
}

// ------------------------------------------------------------ I ratio

Real bessel_i_ratio_asymptotic_threshold() {
    return Real(detail::working_digits()) * Real(3L) / 5L * log(Real(10L));
}

std::vector<Real> bessel_i_ratio_asymptotic_coefficients(const Real& nu, int K) {
    return detail::guarded(10, [&] {
        Series a_num = hankel_coefficients(nu - 1L, K);
        Series a_den = hankel_coefficients(nu, K);
        for (int k = 1; k <= K; k += 2) {
            a_num[k] = -a_num[k];
            a_den[k] = -a_den[k];
        }
        Series r = series_div(a_num, a_den, K);
        return r;
    });
}

namespace {

std::mutex ratio_mutex;
std::map<std::pair<std::string, mpfr_prec_t>, std::vector<Real>> ratio_cache;

std::vector<Real> cached_ratio_coefficients(const Real& nu, int K) {
    const auto key = std::make_pair(nu_key(nu), current_context().bits());
    {
        std::lock_guard<std::mutex> lock(ratio_mutex);
        auto it = ratio_cache.find(key);
        if (it != ratio_cache.end() && static_cast<int>(it->second.size()) > K) return it->second;
    }
    std::vector<Real> r = bessel_i_ratio_asymptotic_coefficients(nu, K);
    for (auto& x : r) x = rounded(x);
    std::lock_guard<std::mutex> lock(ratio_mutex);
    ratio_cache[key] = r;
    return r;
}

template <class T>
T ratio_continued_fraction(const Real& nu, const T& z) {
    // I_{nu+1}/I_nu = 1/(b_1 + 1/(b_2 + ...)), b_k = 2(nu+k)/z; modified Lentz.
    const Real eps = detail::eps_working(0);
    const Real tiny = pow10(-(2 * detail::working_digits() + 50));
    T f = T(tiny);
    T C = f;
    T D = T(Real(0L));
    const T two_over_z = T(Real(2L)) / z;
    for (long k = 1;; ++k) {
        T b = two_over_z * (nu + k);
        D = b + D;
        if (abs(D) < tiny) D = T(tiny);
        D = T(Real(1L)) / D;
        C = b + T(Real(1L)) / C;
        if (abs(C) < tiny) C = T(tiny);
        T delta = C * D;
        f *= delta;
        if (abs(delta - T(Real(1L))) < eps) break;
        if (k > 2000000) throw ConvergenceError("bessel_i_ratio: continued fraction did not converge");
    }
    return T(Real(2L) * nu) / z + f;
}

template <class T>
bool ratio_asymptotic(const Real& nu, const T& z, T& out) {
    const Real eps = detail::eps_working(0);
    const int K = detail::working_digits() + 20;
    const std::vector<Real> r = cached_ratio_coefficients(nu, K);
    const T inv = T(Real(1L)) / z;
    T power = T(Real(1L));
    T sum = T(Real(0L));
    Real prev;
    for (int k = 0; k <= K; ++k) {
        T term = power * r[k];
        sum += term;
        Real at = abs(term);
        if (k > 0 && !r[k].is_zero()) {
            if (at < eps) {
                out = sum;
                return true;
            }
            if (k > 2 && at > prev) return false;
            prev = at;
        }
        power *= inv;
    }
    return false;
}

template <class T>
T bessel_i_ratio_impl(const Real& nu, const T& z) {
    if (!(nu > -1L)) throw DomainError("bessel_i_ratio: requires nu > -1");
    if (abs(z).is_zero()) throw DomainError("bessel_i_ratio: z = 0");
    return detail::guarded(8, [&] {
        const Real re = Complex(z).re;
        if (re > bessel_i_ratio_asymptotic_threshold()) {
            T out;
            if (ratio_asymptotic(nu, z, out)) return out;
        }
        return ratio_continued_fraction(nu, z);
    });
}

}  // namespace

Complex bessel_i_ratio(const Real& nu, const Complex& z) { return bessel_i_ratio_impl(nu, z); }

Real bessel_i_ratio(const Real& nu, const Real& x) { return bessel_i_ratio_impl(nu, x); }

// ------------------------------------------------------------ K0

Complex bessel_k0(const Complex& z) {
    if (z.im.is_zero() && z.re.sign() <= 0) {
        if (z.re.is_zero()) throw PoleError("bessel_k0: logarithmic singularity at 0");
        throw BranchError("bessel_k0: argument on the negative real axis (branch cut)");
    }
    const double az = detail::to_double(z);
    const int W = detail::working_digits();
    if (az > 1.15 * W + 10.0) {
        Complex out;
        bool ok = false;
        out = detail::guarded(5, [&] {
            const Real eps = detail::eps_working(0);
            const Complex inv = 1L / z;
            Complex power(1L);
            Complex sum(0L);
            Real coeff(1L);  // a_k(0)
            Real prev;
            for (long k = 0; k < 100000; ++k) {
                if (k > 0) {
                    long odd = 2 * k - 1;
                    coeff = coeff * (-(odd * odd)) / (8 * k);
                    power *= inv;
                }
                Complex term = power * coeff;
                sum += term;
                Real at = abs(term);
                if (at < eps) {
                    ok = true;
                    break;
                }
                if (k > 1 && at > prev) break;
                prev = at;
            }
            return sqrt(pi() / (2L * z)) * exp(-z) * sum;
        });
        if (ok) return out;
    }
    check_series_range(az);
    const int extra = static_cast<int>(std::ceil(0.87 * az)) + 10;
    return detail::guarded(extra, [&] {
        const Real eps = detail::eps_working(0);
        Complex h = z / 2L;
        Complex w = h * h;
        Complex t(1L);
        Complex i0(1L);
        Complex s(0L);
        Real harmonic(0L);
        Real tmax(1L);
        for (long k = 1;; ++k) {
            t = t * w / (k * k);
            harmonic += Real(1L) / k;
            i0 += t;
            Complex st = t * harmonic;
            s += st;
            Real at = abs(st);
            if (tmax < at) tmax = at;
            if (static_cast<double>(k) > az / 2 + 1 && at < eps * tmax) break;
            if (k > 1000000) throw ConvergenceError("bessel_k0: series did not converge");
        }
        return -(log(h) + euler_gamma()) * i0 + s;
    });
}

// ------------------------------------------------------------ zeros

Real bessel_zero(const Real& nu, long n) {
    if (!(nu > -1L)) throw DomainError("bessel_zero: requires nu > -1");
    if (n < 1) throw DomainError("bessel_zero: n must be positive");
    const Real guess = mcmahon_guess(nu, n);
    return detail::guarded(5, [&] {
        const Real tol = detail::eps_working(0);
        Real x = rounded(guess);
        const Real nu1 = nu + 1L;
        int it = 0;
        Real last_step;
        for (; it < 100; ++it) {
            Real j = bessel_j(nu, x);
            Real jp = nu / x * j - bessel_j(nu1, x);
            if (jp.is_zero()) break;
            Real step = j / jp;
            x -= step;
            last_step = abs(step);
            if (last_step <= tol * x) break;
        }
        if (it >= 100 || x.sign() <= 0) {
            throw NumericalError("bessel_zero: Newton failed for nu=" + decimal_string(nu, 10) +
                                 ", n=" + std::to_string(n) + " from McMahon guess " +
                                 decimal_string(guess, 10) + " after " + std::to_string(it) +
                                 " iterations");
        }
        if (abs(x - guess) > Real(1L)) {
            throw NumericalError("bessel_zero: Newton left the basin of zero n=" + std::to_string(n) +
                                 " (guess " + decimal_string(guess, 10) + ", result " +
                                 decimal_string(x, 10) + ")");
        }
        return x;
    });
}

BesselZeroTable bessel_zero_table(const Real& nu, long count) {
    const auto key = std::make_pair(nu_key(nu), current_context().bits());
    std::vector<Real> zeros;
    {
        std::lock_guard<std::mutex> lock(zero_mutex);
        auto it = zero_cache.find(key);
        if (it != zero_cache.end()) zeros = it->second;
    }
    const size_t have = zeros.size();
    for (long n = static_cast<long>(zeros.size()) + 1; n <= count; ++n) {
        zeros.push_back(bessel_zero(nu, n));
        if (zeros.size() >= 2 && !(zeros[zeros.size() - 2] < zeros.back())) {
            throw NumericalError("bessel_zero_table: zeros not strictly increasing at n=" +
                                 std::to_string(n));
        }
    }
    if (zeros.size() > have) {
        std::lock_guard<std::mutex> lock(zero_mutex);
        auto& slot = zero_cache[key];
        if (slot.size() < zeros.size()) slot = zeros;
    }
    BesselZeroTable table{rounded(nu), {}};
    table.zeros.assign(zeros.begin(), zeros.begin() + count);
    return table;
}

// x = beta - arctan(Q(x)/P(x)) with the Hankel P, Q; in v = 1/x, u = 1/beta:
// v = u + u v h(v), h = arctan(Q/P). Solved as a formal power series in u.
std::vector<Real> bessel_zero_tail_sums(const Real& nu, long Q, long p_min, long p_max) {
    if (Q < 20) throw DomainError("bessel_zero_tail_sums: Q must be >= 20");
    if (p_min < 2 || p_max < p_min) throw DomainError("bessel_zero_tail_sums: bad power range");
    return detail::guarded(15, [&] {
        const int W = detail::working_digits();
        const Real shift = Real(Q + 1) + nu / 2L - Real(Rational(1, 4));
        const double log10_inv_u = std::log10(shift.to_double() * 3.141592653589793);
        const int K = std::min(400, static_cast<int>(std::ceil((W + 5) / log10_inv_u)) + 8);
        Series a = hankel_coefficients(nu, K + 2);
        Series P(static_cast<size_t>(K + 1), Real(0L)), Qs(static_cast<size_t>(K + 1), Real(0L));
        for (int k = 0; k <= K; ++k) {
            Real c = a[k];
            if ((k / 2) % 2 == 1) c = -c;
            if (k % 2 == 0) P[k] = c; else Qs[k] = c;
        }
        Series w = series_div(Qs, P, K);
        // h = arctan(w) = sum_j (-1)^j w^(2j+1)/(2j+1)
        Series h(static_cast<size_t>(K + 1), Real(0L));
        {
            Series w2 = series_mul(w, w, K);
            Series power = w;
            for (int j = 0; 2 * j + 1 <= K; ++j) {
                if (j > 0) power = series_mul(power, w2, K);
                for (int k = 0; k <= K; ++k) {
                    Real term = power[k] / (2 * j + 1);
                    if (j % 2) h[k] -= term; else h[k] += term;
                }
            }
        }
        Series v(static_cast<size_t>(K + 1), Real(0L));
        v[1] = Real(1L);
        for (int iter = 0; iter < K / 2 + 3; ++iter) {
            Series hv = series_compose(h, v, K);
            Series vh = series_mul(v, hv, K);
            Series next(static_cast<size_t>(K + 1), Real(0L));
            next[1] = Real(1L);
            for (int k = 2; k <= K; ++k) next[k] += vh[k - 1];
            v = next;
        }
        // v/u = 1 + ...
        Series ratio(static_cast<size_t>(K), Real(0L));
        for (int k = 0; k < K; ++k) ratio[k] = v[k + 1];
        const int KR = K - 1;
        const Real eps = detail::eps_working(0);
        const Real inv_pi = 1L / pi();
        std::vector<Real> out;
        for (long p = p_min; p <= p_max; ++p) {
            Series rp = series_pow(ratio, p, KR);
            Real total(0L);
            for (int k = 0; k <= KR; ++k) {
                if (rp[k].is_zero()) continue;
                const long s = p + k;
                Real term = rp[k] * pow(inv_pi, s) * hurwitz_zeta(s, shift);
                total += term;
                if (k > 0 && abs(term) < eps * abs(total)) break;
            }
            out.push_back(total);
        }
        return out;
    });
}

std::vector<Real> rayleigh_sums(const Real& nu, int nmax) {
    if (!(nu > -1L)) throw DomainError("rayleigh_sums: requires nu > -1");
    if (nmax < 1) return std::vector<Real>(1, Real(0L));
    const PrecisionContext outer = current_context();
    std::vector<Real> sigma;
    {
        PrecisionScope scope(outer.with_extra_guard(10 + nmax));
        std::vector<Real> c(static_cast<size_t>(nmax + 1));
        c[0] = Real(1L);
        for (int k = 1; k <= nmax; ++k) c[k] = c[k - 1] * Real(Rational(-1, 4)) / (k * (nu + k));
        sigma.assign(static_cast<size_t>(nmax + 1), Real(0L));
        for (int n = 1; n <= nmax; ++n) {
            Real acc = -(c[n] * n);
            for (int k = 1; k < n; ++k) acc -= sigma[k] * c[n - k];
            sigma[n] = acc;
        }
    }
    for (auto& s : sigma) s = rounded(s);
    return sigma;
}

Real tanx_eq_x_root(long n) {
    if (n < 1) throw DomainError("tanx_eq_x_root: n must be positive");
    return detail::guarded(5, [&] {
        const Real tol = detail::eps_working(0);
        Real b = (Real(n) + Real(Rational(1, 2))) * pi();
        Real x = b - 1L / b;
        for (int it = 0; it < 100; ++it) {
            Real s = sin(x), c = cos(x);
            Real step = (s - x * c) / (x * s);
            x -= step;
            if (abs(step) <= tol * x) return x;
        }
        throw NumericalError("tanx_eq_x_root: Newton did not converge for n=" + std::to_string(n));
    });
}

}  // namespace zc
