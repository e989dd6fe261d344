#include "identities_common.hpp"
#include "zc/series.hpp"

namespace zc {

using detail::new_report;
using detail::param;

namespace {

Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_ratios(const std::vector<Complex>& omega, const char* who) {
    for (size_t i = 0; i < omega.size(); ++i) {
        if (detail::is_zero(omega[i])) throw ParameterError(std::string(who) + ": omega_i must be nonzero");
        for (size_t j = 0; j < omega.size(); ++j) {
            if (i != j && (omega[j] / omega[i]).im.is_zero()) {
                throw ParameterError(std::string(who) + ": Im(omega_i/omega_j) must be nonzero for i != j");
            }
        }
    }
}

// Limit of the factor as Re z -> +inf (dir > 0) or -inf (dir < 0).
long factor_limit(int dir, const Real& y, const Real& low, const Real& high) {
    if (dir < 0 && y == low) return -1;
    if (dir > 0 && y == high) return 1;
    return 0;
}

// e^{z y} / (e^z - 1) without overflow.
Complex bernoulli_factor(const Complex& z, const Real& y) {
    if (z.re.sign() <= 0) return exp(z * y) / (exp(z) - 1L);
    return exp(z * (y - 1L)) / (1L - exp(-z));
}

// e^{2 z x} / (e^z + 1) without overflow.
Complex euler_factor(const Complex& z, const Real& x) {
    if (z.re.sign() <= 0) return exp(2L * z * x) / (exp(z) + 1L);
    return exp(z * (2L * x - 1L)) / (1L + exp(-z));
}

int sgn(const Real& x) { return x.sign() > 0 ? 1 : (x.sign() < 0 ? -1 : 0); }

// sum over odd m >= 1 of e^{i theta m} m^-s
Complex odd_polylog(long s, const Real& theta) {
    return polylog_unit_circle(s, theta) - polylog_unit_circle(s, 2L * theta) / pow(Real(2L), s);
}

}  // namespace

Complex bernoulli_polynomial_side(long N, const std::vector<Complex>& omega, const std::vector<Real>& y,
                                  Real* scale) {
    const long n = static_cast<long>(omega.size());
    Complex total(0L);
    Real sc(0L);
    for (const auto& k : compositions(n, N + 1, 0)) {
        Complex t(1L);
        for (long i = 0; i < n; ++i) {
            t *= pow(omega[i], k[i] - 1) * (bernoulli_poly(k[i], y[i]) / Real(factorial(k[i])));
        }
        total += t;
        sc += abs(t);
    }
    if (scale) *scale = sc;
    return total;
}

Complex bernoulli_exponential_side(long E, bool ji, const std::vector<Complex>& omega, const std::vector<Real>& y,
                                   long* terms, Real* scale) {
    const long n = static_cast<long>(omega.size());
    const Real two_pi = 2L * pi();
    const Real zero(0L), one(1L);
    Complex total(0L);
    Real magnitude(0L);
    long used = 0;
    for (long i = 0; i < n; ++i) {
        std::vector<Complex> t(n);
        long lim_plus = 1, lim_minus = 1;
        double rate = 1e300;
        for (long j = 0; j < n; ++j) {
            if (j == i) continue;
            t[j] = ji ? omega[j] / omega[i] : omega[i] / omega[j];
            const int s = sgn(t[j].im);
            // Re z = -2 pi m Im t
            lim_plus *= factor_limit(-s, y[j], zero, one);
            lim_minus *= factor_limit(s, y[j], zero, one);
            const double yd = y[j].to_double();
            const double dist = (y[j] == zero || y[j] == one) ? 1.0 : std::min(yd, 1.0 - yd);
            rate = std::min(rate, 2.0 * M_PI * std::abs(t[j].im.to_double()) * dist);
        }
        const long M = detail::terms_for_rate(rate);
        used = std::max(used, M);
        const Complex w_over = omega[i] / imag_unit(two_pi);  // omega_i / (2 pi i)
        const Complex pref = pow(w_over, E);
        std::vector<Complex> parts;
        parts.reserve(static_cast<size_t>(2 * M));
        for (long m = 1; m <= M; ++m) {
            for (int sign : {1, -1}) {
                const long mm = sign * m;
                Complex prod(1L);
                for (long j = 0; j < n; ++j) {
                    if (j == i) continue;
                    prod *= bernoulli_factor(imag_unit(two_pi * mm) * t[j], y[j]);
                }
                const long lim = sign > 0 ? lim_plus : lim_minus;
                const Complex c = expi(two_pi * mm * y[i]) * pow(Real(mm), -E);
                parts.push_back(c * (prod - Complex(lim)));
            }
        }
        Complex s = detail::pairwise_sum(parts);
        Real size(0L);
        for (const auto& c : parts) size += abs(c);
        if (lim_plus != 0 || lim_minus != 0) {
            if (E < 1) throw DomainError("bernoulli_exponential_side: exponent < 1 with an endpoint y diverges");
            const Real theta = two_pi * y[i];
            Complex poly(0L);
            if (lim_plus != 0) poly += Real(lim_plus) * polylog_unit_circle(E, theta);
            if (lim_minus != 0) {
                poly += Real(lim_minus) * detail::sign_pow(E) * polylog_unit_circle(E, -theta);
            }
            s += poly;
            size += abs(poly);
        }
        total -= pref * s / omega[i];
        magnitude += abs(pref / omega[i]) * size;
    }
    if (terms) *terms = used;
    if (scale) *scale = magnitude;
    return total;
}

VerificationReport verify_bernoulli_convolution(long N, const std::vector<Complex>& omega_in,
                                                const std::vector<Real>& y_in, const PrecisionContext& ctx, long M) {
    (void)M;
    const long n = static_cast<long>(omega_in.size());
    if (N < 0) throw ParameterError("bernoulli_convolution: N must be nonnegative");
    if (n < 2) throw ParameterError("bernoulli_convolution: need at least two omegas");
    if (static_cast<long>(y_in.size()) != n) throw ParameterError("bernoulli_convolution: omega and y lengths differ");
    PrecisionScope scope{ctx};
    std::vector<Complex> omega;
    std::vector<Real> y;
    for (const auto& w : omega_in) omega.push_back(rounded(w));
    for (const auto& v : y_in) {
        if (v.sign() < 0 || v > Real(1L)) throw ParameterError("bernoulli_convolution: y_i must lie in [0, 1]");
        y.push_back(rounded(v));
    }
    check_ratios(omega, "bernoulli_convolution");
    auto r = new_report("bernoulli_convolution", ctx, detail::kFastSlack);
    r.parameters = {{"N", param(N)}};
    for (long i = 0; i < n; ++i) {
        r.parameters.emplace_back("omega" + std::to_string(i + 1), param(omega[i]));
        r.parameters.emplace_back("y" + std::to_string(i + 1), param(y[i]));
    }
    Real scale;
    const Complex lhs = bernoulli_polynomial_side(N, omega, y, &scale);
    long terms = 0;
    if (n == 2) {
        Real rscale;
        const Complex rhs = bernoulli_exponential_side(N, true, omega, y, &terms, &rscale);
        r.truncation_terms = terms;
        finalize(r, lhs, rhs, max(scale, rscale));
        return r;
    }
    struct Variant {
        std::string label;
        long E;
        bool ji;
    };
    const std::vector<Variant> variants = {
        {"exponent N, omega_j/omega_i (theorem display)", N, true},
        {"exponent N, omega_i/omega_j (closing display)", N, false},
        {"exponent N+2-n, omega_j/omega_i", N + 2 - n, true},
        {"exponent N+2-n, omega_i/omega_j", N + 2 - n, false},
    };
    Adjudication a;
    a.display = "n-term Bernoulli identity: exponent and ratio convention";
    std::vector<Complex> values;
    std::vector<Real> scales;
    for (const auto& v : variants) {
        try {
            long t = 0;
            Real rs;
            Complex rhs = bernoulli_exponential_side(v.E, v.ji, omega, y, &t, &rs);
            terms = std::max(terms, t);
            values.push_back(rhs);
            scales.push_back(max(scale, rs));
            a.readings.push_back(make_reading(v.label, lhs, rhs, scales.back(), r.required_digits));
        } catch (const DomainError& e) {
            values.push_back(Complex(0L));
            scales.push_back(scale);
            Reading rd;
            rd.label = v.label + " (diverges: " + e.what() + ")";
            rd.lhs = quantize(lhs, ctx.decimal_digits);
            rd.rhs = Complex(0L);
            rd.rel_diff = Real(1L);
            a.readings.push_back(rd);
        }
    }
    adjudicate(a);
    size_t pick = 0;
    for (size_t i = 0; i < a.readings.size(); ++i) {
        if (a.readings[i].passed) {
            pick = i;
            break;
        }
    }
    r.note = "reported right side: " + a.readings[pick].label;
    r.adjudications.push_back(a);
    r.truncation_terms = terms;
    finalize(r, lhs, values[pick], scales[pick]);
    return r;
}

namespace {

Complex euler_polynomial_side(long N, const std::vector<Complex>& omega, const std::vector<Real>& x, Real* scale) {
    const long n = static_cast<long>(omega.size());
    Complex total(0L);
    Real sc(0L);
    for (const auto& k : compositions(n, N + 1, 0)) {
        Complex t(1L);
        for (long i = 0; i < n; ++i) {
            t *= pow(omega[i], k[i] - 1) * (euler_poly(k[i], 2L * x[i]) / Real(factorial(k[i])));
        }
        total += t;
        sc += abs(t);
    }
    if (scale) *scale = sc;
    return total;
}

// 2^p / prod(omega) sum_i sum_{m odd} e^{2 pi i m x_i} / (2 pi i m) / (2 pi i m / omega_i)^e prod_{j != i} g
Complex euler_exponential_side(long p, long e, const std::vector<Complex>& omega, const std::vector<Real>& x,
                               long* terms, Real* scale) {
    const long n = static_cast<long>(omega.size());
    const Real two_pi = 2L * pi();
    const Real zero(0L), half(Rational(1, 2));
    Complex total(0L);
    Real magnitude(0L);
    long used = 0;
    for (long i = 0; i < n; ++i) {
        std::vector<Complex> t(n);
        long lim_plus = 1, lim_minus = 1;
        double rate = 1e300;
        for (long j = 0; j < n; ++j) {
            if (j == i) continue;
            t[j] = omega[j] / omega[i];
            const int s = sgn(t[j].im);
            lim_plus *= factor_limit(-s, x[j], zero, half);
            lim_minus *= factor_limit(s, x[j], zero, half);
            const double xd = 2.0 * x[j].to_double();
            const double dist = (x[j] == zero || x[j] == half) ? 1.0 : std::min(xd, 1.0 - xd);
            rate = std::min(rate, M_PI * std::abs(t[j].im.to_double()) * dist);
        }
        const long M = detail::terms_for_rate(rate);
        used = std::max(used, M);
        const Complex two_pi_i = imag_unit(two_pi);
        const Complex pref = pow(omega[i] / two_pi_i, e) / two_pi_i;  // m-independent part
        std::vector<Complex> parts;
        for (long m = 1; m <= M; m += 2) {
            for (int sign : {1, -1}) {
                const long mm = sign * m;
                Complex prod(1L);
                for (long j = 0; j < n; ++j) {
                    if (j == i) continue;
                    prod *= euler_factor(imag_unit(pi() * mm) * t[j], x[j]);
                }
                const long lim = sign > 0 ? lim_plus : lim_minus;
                parts.push_back(expi(two_pi * mm * x[i]) * pow(Real(mm), -(e + 1)) * (prod - Complex(lim)));
            }
        }
        Complex s = detail::pairwise_sum(parts);
        Real size(0L);
        for (const auto& c : parts) size += abs(c);
        if (lim_plus != 0 || lim_minus != 0) {
            const long sp = e + 1;
            if (sp < 1) throw DomainError("euler_exponential_side: divergent endpoint sum");
            const Real theta = two_pi * x[i];
            Complex ends(0L);
            if (lim_plus != 0) ends += Real(lim_plus) * odd_polylog(sp, theta);
            if (lim_minus != 0) ends += Real(lim_minus) * detail::sign_pow(sp) * odd_polylog(sp, -theta);
            s += ends;
            size += abs(ends);
        }
        total += pref * s;
        magnitude += abs(pref) * size;
    }
    Complex prod_w(1L);
    for (const auto& w : omega) prod_w *= w;
    if (terms) *terms = used;
    const Real f = pow(Real(2L), p) / abs(prod_w);
    if (scale) *scale = f * magnitude;
    return pow(Real(2L), p) * total / prod_w;
}

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(long K, std::vector<Real>& nodes, std::vector<Real>& weights) {
    nodes.assign(static_cast<size_t>(K), Real(0L));
    weights.assign(static_cast<size_t>(K), Real(0L));
    const Real eps = detail::eps_working(-3);
    for (long i = 0; i < K; ++i) {
        Real xk(std::cos(M_PI * (i + 0.75) / (K + 0.5)));
        Real dp;
        for (int it = 0; it < 100; ++it) {
            Real p0(1L), p1 = xk;
            for (long k = 2; k <= K; ++k) {
                Real p2 = ((2 * k - 1) * xk * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = K * (xk * p1 - p0) / (xk * xk - 1L);
            Real dx = p1 / dp;
            xk -= dx;
            if (abs(dx) < eps) break;
        }
        nodes[i] = xk;
        weights[i] = 2L / ((1L - xk * xk) * dp * dp);
    }
}

}  // namespace

VerificationReport verify_euler_convolution(long N, const std::vector<Complex>& omega_in,
                                            const std::vector<Real>& x_in, const PrecisionContext& ctx, long M,
                                            bool quadrature) {
    (void)M;
    const long n = static_cast<long>(omega_in.size());
    if (N < 0) throw ParameterError("euler_convolution: N must be nonnegative");
    if (n < 2) throw ParameterError("euler_convolution: need at least two omegas");
    if (static_cast<long>(x_in.size()) != n) throw ParameterError("euler_convolution: omega and x lengths differ");
    PrecisionScope scope{ctx};
    std::vector<Complex> omega;
    std::vector<Real> x;
    for (const auto& w : omega_in) omega.push_back(rounded(w));
    for (const auto& v : x_in) {
        if (v.sign() < 0 || v > Real(Rational(1, 2))) {
            throw ParameterError("euler_convolution: x_i must lie in [0, 1/2]");
        }
        x.push_back(rounded(v));
    }
    check_ratios(omega, "euler_convolution");
    auto r = new_report("euler_convolution", ctx, detail::kFastSlack);
    r.parameters = {{"N", param(N)}};
    for (long i = 0; i < n; ++i) {
        r.parameters.emplace_back("omega" + std::to_string(i + 1), param(omega[i]));
        r.parameters.emplace_back("x" + std::to_string(i + 1), param(x[i]));
    }
    Real scale;
    const Complex lhs = euler_polynomial_side(N, omega, x, &scale);
    Adjudication a;
    a.display = "Euler identity: power of 2 in the prefactor and exponent of 2 pi i m / omega_i";
    long terms = 0, t1 = 0, t2 = 0;
    Real s1, s2;
    const Complex printed = euler_exponential_side(2 * N + n + 3, N + n - 1, omega, x, &t1, &s1);
    const Complex derived = euler_exponential_side(N + n + 2, N + 1, omega, x, &t2, &s2);
    terms = std::max(t1, t2);
    s1 = max(scale, s1);
    s2 = max(scale, s2);
    a.readings.push_back(
        make_reading("2^(2N+n+3), exponent N+n-1 as printed", lhs, printed, s1, r.required_digits));
    a.readings.push_back(make_reading("2^(N+n+2), exponent N+1 (half-interval integration of the Bernoulli identity)",
                                      lhs, derived, s2, r.required_digits));
    adjudicate(a);
    const size_t pick = a.readings[0].passed ? 0 : 1;
    const Complex rhs = pick == 0 ? printed : derived;
    scale = pick == 0 ? s1 : s2;
    r.note = "reported right side: " + a.readings[pick].label;
    r.adjudications.push_back(a);

    if (quadrature) {
        if (n != 2) throw ParameterError("euler_convolution: quadrature cross-check is implemented for n = 2");
        for (const auto& v : x) {
            if (v.sign() == 0 || v == Real(Rational(1, 2))) {
                throw ParameterError("euler_convolution: quadrature cross-check needs x_i in (0, 1/2)");
            }
        }
        Complex q(0L);
        {
            PrecisionScope qs{PrecisionContext(25)};
            const long K = 64;
            std::vector<Real> nodes, weights;
            gauss_legendre(K, nodes, weights);
            std::vector<Complex> w2 = {rounded(omega[0]), rounded(omega[1])};
            std::vector<Complex> parts;
            for (long a1 = 0; a1 < K; ++a1) {
                for (long a2 = 0; a2 < K; ++a2) {
                    std::vector<Real> yy = {rounded(x[0]) + (nodes[a1] + 1L) / 4L,
                                            rounded(x[1]) + (nodes[a2] + 1L) / 4L};
                    Complex f = bernoulli_exponential_side(N, true, w2, yy);
                    parts.push_back(f * (weights[a1] * weights[a2] / 16L));
                }
            }
            q = detail::pairwise_sum(parts) * pow(Real(2L), N + 1 + n);
        }
        r.checks.push_back(make_check("Gauss-Legendre integral of the Bernoulli identity over [x, x+1/2]^2",
                                      Complex(rounded(q.re), rounded(q.im)), rhs, scale, 15,
                                      "64x64 nodes at 25 digits"));
    }
    r.truncation_terms = terms;
    finalize(r, lhs, rhs, scale);
    return r;
}

}  // namespace zc
