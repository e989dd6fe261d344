#include "identities_common.hpp"
#include "zc/series.hpp"

namespace zc {

using detail::new_report;
using detail::param;
using detail::sign_pow;

namespace {

// sum_q j_q^-(2N+1) I_{nu-1}(c j_q) / I_nu(c j_q), with the ratio's
// asymptotic series summed against zero tail sums beyond Q.
Real bessel_ratio_sum(const Real& nu, long N, const Real& c, long Q, long& used) {
    const double thr = bessel_i_ratio_asymptotic_threshold().to_double();
    const long Qmin = std::max<long>(20, static_cast<long>(std::ceil(thr / (c.to_double() * M_PI))) + 2);
    Q = std::max(Q, Qmin);
    used = Q;
    const long p = 2 * N + 1;
    const BesselZeroTable table = bessel_zero_table(nu, Q);
    std::vector<Real> parts;
    for (long q = 0; q < Q; ++q) {
        const Real& j = table.zeros[q];
        parts.push_back(pow(j, -p) * bessel_i_ratio(nu, c * j));
    }
    Real head = detail::pairwise_sum(parts);
    const int K = detail::working_digits() + 20;
    const std::vector<Real> r = bessel_i_ratio_asymptotic_coefficients(nu, K);
    const std::vector<Real> T = bessel_zero_tail_sums(nu, Q, p, p + K);
    const Real eps = detail::eps_working(2);
    const Real ju = c * table.zeros[Q - 1];
    Real tail(0L);
    Real cpow(1L);
    int small = 0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) cpow /= c;
        tail += r[k] * cpow * T[k];
        small = abs(r[k] * pow(ju, -k)) < eps ? small + 1 : 0;
        if (k > 2 && small >= 2) return head + tail;
    }
    throw ConvergenceError("bessel_zeta: asymptotic tail of the I-ratio sum did not converge");
}

// sum_{q>=1} f / (2q-1)^(2N+1) tanh(pi c (2q-1) / 2)
Real tanh_odd_sum(long N, const Real& c, const Real& f) {
    const long p = 2 * N + 1;
    const Real pc = pi() * c / 2L;
    const long M = detail::terms_for_rate(2.0 * pc.to_double());
    Real corr(0L);
    for (long q = M; q >= 1; --q) {
        const long o = 2 * q - 1;
        corr += 2L / (exp(2L * pc * o) + 1L) / pow(Real(o), p);  // 1 - tanh
    }
    const Real odd_zeta = (1L - pow(Real(2L), -p)) * zeta_int(p);
    return f * (odd_zeta - corr);
}

}  // namespace

VerificationReport verify_bessel_zeta(long N, const Real& nu_in, const Real& alpha_in, const Real& beta_in,
                                      const PrecisionContext& ctx, long M) {
    if (N < 1) throw ParameterError("bessel_zeta: N must be a positive integer");
    if (!(nu_in > -1L)) throw ParameterError("bessel_zeta: nu must be > -1");
    if (alpha_in.sign() <= 0 || beta_in.sign() <= 0) throw ParameterError("bessel_zeta: alpha, beta must be positive");
    PrecisionScope scope{ctx};
    auto r = new_report("bessel_zeta", ctx, detail::kFastSlack);
    const Real nu = rounded(nu_in), alpha = rounded(alpha_in), beta = rounded(beta_in);
    r.parameters = {{"N", param(N)}, {"nu", param(nu)}, {"alpha", param(alpha)}, {"beta", param(beta)}};
    const std::vector<Real> s = rayleigh_sums(nu, static_cast<int>(N + 1));
    Real lhs(0L), scale(0L);
    for (long k = 1; k <= N; ++k) {
        const Real t = sign_pow(k) * pow(alpha, N - k + 1) * pow(beta, k) * s[k] * s[N + 1 - k];
        lhs += t;
        scale += abs(t);
    }
    const Real c1 = sqrt(beta / alpha), c2 = sqrt(alpha / beta);
    long q1 = 0, q2 = 0;
    const Real S1 = bessel_ratio_sum(nu, N, c1, M, q1);
    const Real S2 = bessel_ratio_sum(nu, N, c2, M, q2);
    const Real aN = pow(alpha, N + 1), bN = sign_pow(N + 1) * pow(beta, N + 1);
    const Real t0 = nu * (aN + bN) * s[N + 1];
    const Real t1 = aN / 2L * c1 * S1;
    const Real t2 = bN / 2L * c2 * S2;
    const Real rhs = t0 - t1 - t2;
    scale = max(scale, abs(t0) + abs(t1) + abs(t2));
    r.truncation_terms = std::max(q1, q2);

    const Real half(Rational(1, 2));
    if (nu == half) {
        VerificationReport g = verify_generalized_ramanujan(N, alpha, beta, ctx, 0);
        const Real f = pow(pi(), 2 * N + 2);
        r.checks.push_back(make_check("nu = 1/2: pi^(2N+2) lhs equals Riemann-zeta left side", Complex(lhs * f),
                                      g.lhs, scale * f, r.digits_requested - 5));
        r.checks.push_back(make_check("nu = 1/2: pi^(2N+2) rhs equals Riemann-zeta right side", Complex(rhs * f),
                                      g.rhs, scale * f, r.digits_requested - 5));
    }
    if (nu == Real(Rational(3, 2))) {
        bool ok = true;
        Real worst(0L);
        for (long n = 1; n <= 20; ++n) {
            const Real a = tanx_eq_x_root(n), b = bessel_zero(nu, n);
            worst = max(worst, abs(a - b) / b);
        }
        ok = worst <= pow10(-(ctx.decimal_digits - 5));
        r.checks.push_back(make_exact_check("nu = 3/2: roots of tan x = x equal j_{3/2,n}, n = 1..20", ok,
                                            "max relative gap " + decimal_string(worst, 5)));
    }
    if (nu == -half) {
        // zeta_{B,-1/2}(n) = (2^(2n) - 1) zeta(2n) / pi^(2n)
        Real worst(0L);
        for (long k = 1; k <= N + 1; ++k) {
            const Real d = (pow(Real(2L), 2 * k) - 1L) * zeta_int(2 * k) / pow(pi(), 2 * k);
            worst = max(worst, abs(d - s[k]) / d);
        }
        r.checks.push_back(make_exact_check("nu = -1/2: Rayleigh sums equal (2^(2k)-1) zeta(2k) / pi^(2k)",
                                            worst <= pow10(-(ctx.decimal_digits - 5)),
                                            "max relative gap " + decimal_string(worst, 5)));
        auto Z = [](long k) { return (pow(Real(2L), 2 * k) - 1L) * zeta_int(2 * k); };
        Real cl(0L), cscale(0L);
        for (long k = 1; k <= N; ++k) {
            const Real t = sign_pow(k) * pow(alpha, N - k + 1) * pow(beta, k) * Z(k) * Z(N + 1 - k);
            cl += t;
            cscale += abs(t);
        }
        const Real p = pi();
        const Real f0 = pow(Real(2L), 2 * N), f1 = pow(Real(2L), 2 * N + 1);
        const Real zt = -(aN + bN) / 2L * Z(N + 1);
        const Real stray = f0 * (aN * bN) * Z(N + 1) / pow(p, 2 * N + 2);
        auto tanh_terms = [&](const Real& f) {
            return -aN / 2L * p * c1 * tanh_odd_sum(N, c1, f) - bN / 2L * p * c2 * tanh_odd_sum(N, c2, f);
        };
        const Real th0 = tanh_terms(f0), th1 = tanh_terms(f1);
        Adjudication a;
        a.display = "nu = -1/2 corollary (dissection of the Riemann zeta function)";
        a.readings.push_back(make_reading("as printed, with the 2^(2N) alpha^(N+1) (-beta)^(N+1) term", Complex(cl),
                                          Complex(zt + th0 + stray), cscale, r.required_digits));
        a.readings.push_back(make_reading("as printed without the stray middle term", Complex(cl),
                                          Complex(zt + th0), cscale, r.required_digits));
        a.readings.push_back(make_reading("theorem at nu = -1/2: factor 2^(2N+1), no zeta(2N+2) term", Complex(cl),
                                          Complex(th1), cscale, r.required_digits));
        adjudicate(a);
        r.adjudications.push_back(a);
    }
    finalize(r, Complex(lhs), Complex(rhs), scale);
    return r;
}

namespace {

// sum_{n>=0} [psi(a + i c (b+n)) - psi(a - i c (b+n))] / (b+n)^p, with the
// large-n tail from psi(w + a) ~ log w + sum (-1)^(k+1) B_k(a) / (k w^k).
Complex digamma_difference_sum(const Real& a, const Real& c, const Real& b, long p, long M, long& used) {
    const int W = detail::working_digits();
    const double umin = 0.5 * (W + 5) + 5.0;
    const long Mmin = static_cast<long>(std::ceil(umin / c.to_double())) + 1;
    if (M <= 0) M = Mmin;
    M = std::max(M, Mmin);
    used = M;
    std::vector<Complex> parts;
    for (long n = 0; n < M; ++n) {
        const Real v = b + n;
        const Complex d = digamma(Complex(a, c * v));
        parts.push_back(imag_unit(2L * d.im) * pow(v, -p));  // psi(a+iu) - psi(a-iu) = 2 i Im psi(a+iu)
    }
    Complex head = detail::pairwise_sum(parts);
    const Real start = b + M;
    const Real eps = detail::eps_working(2);
    Complex tail = imag_unit(pi()) * hurwitz_zeta(p, start);
    const Complex ic = imag_unit(c);
    const Real u0 = c * start;
    for (long k = 1; k < 4 * W + 40; k += 2) {
        const Real coef = 2L * bernoulli_poly(k, a) / k;
        if (coef.is_zero()) continue;
        const Complex term = coef * pow(ic, -k) * hurwitz_zeta(p + k, start);
        tail += term;
        if (abs(coef) * pow(u0, -k) < eps) return head + tail;
    }
    throw ConvergenceError("hurwitz: digamma tail expansion did not converge");
}

}  // namespace

VerificationReport verify_hurwitz(long N, const Real& x_in, const Real& y_in, const Real& alpha_in,
                                  const Real& beta_in, const PrecisionContext& ctx, long M) {
    if (N < 1) throw ParameterError("hurwitz: N must be a positive integer");
    if (x_in.sign() <= 0 || y_in.sign() <= 0 || x_in > Real(1L) || y_in > Real(1L)) {
        throw ParameterError("hurwitz: x and y must lie in (0, 1]");
    }
    if (alpha_in.sign() <= 0 || beta_in.sign() <= 0) throw ParameterError("hurwitz: alpha, beta must be positive");
    PrecisionScope scope{ctx};
    auto r = new_report("hurwitz", ctx, detail::kFastSlack);
    const Real x = rounded(x_in), y = rounded(y_in), alpha = rounded(alpha_in), beta = rounded(beta_in);
    r.parameters = {{"N", param(N)}, {"x", param(x)}, {"y", param(y)}, {"alpha", param(alpha)}, {"beta", param(beta)}};
    Real lhs(0L), scale(0L);
    for (long k = 1; k <= N; ++k) {
        const Real t = sign_pow(N + 1 - k) * pow(alpha, N + 1 - k) * pow(beta, k) * hurwitz_zeta(2 * k, x) *
                       hurwitz_zeta(2 * N + 2 - 2 * k, y);
        lhs += t;
        scale += abs(t);
    }
    const Real c = sqrt(alpha / beta), d = sqrt(beta / alpha);
    long m1 = 0, m2 = 0;
    const Complex S1 = digamma_difference_sum(y, c, x, 2 * N + 1, M, m1);
    const Complex S2 = digamma_difference_sum(x, d, y, 2 * N + 1, M, m2);
    const Complex u = imag_unit(c) * S1 * (pow(beta, N + 1) / 2L);
    const Complex v = imag_unit(d) * S2 * (sign_pow(N + 1) * pow(alpha, N + 1) / 2L);
    const Complex rhs = u + v;
    scale = max(scale, abs(u) + abs(v));
    r.truncation_terms = std::max(m1, m2);
    r.checks.push_back(make_check("imaginary residue of the right side", Complex(rhs.re), rhs, scale,
                                  r.digits_requested - 5));
    if (x == Real(1L) && y == Real(1L)) {
        // zeta_H(s; 1) = zeta(s): generalized identity with the roles of alpha and beta exchanged
        VerificationReport g = verify_generalized_ramanujan(N, beta, alpha, ctx, 0);
        r.checks.push_back(make_check("x = y = 1: left side equals the Riemann-zeta left side", Complex(lhs), g.lhs,
                                      scale, r.digits_requested - 5));
        r.checks.push_back(make_check("x = y = 1: right side equals the Riemann-zeta right side", rhs, g.rhs, scale,
                                      r.digits_requested - 5));
    }
    finalize(r, Complex(lhs), rhs, scale);
    return r;
}

// ------------------------------------------------------------ multisection

namespace {

Complex multisection_cot_side(long m, const Complex& z) {
    const long h = (m - 1) / 2;
    const Real p = pi();
    Complex s(0L);
    for (long j = -h; j <= h; ++j) {
        s += sign_pow(j) * cot(z * expi(p * j / m) * p);
    }
    return p * pow(z, m) / (2L * m) * s;
}

}  // namespace

VerificationReport verify_multisection_lemma(long m, const Complex& z_in, const PrecisionContext& ctx, long M) {
    if (m < 1) throw ParameterError("multisection_lemma: m must be a positive odd integer");
    if (m % 2 == 0) throw ParameterError("multisection_lemma: m must be odd");
    PrecisionScope scope{ctx};
    auto r = new_report("multisection_lemma", ctx, detail::kFastSlack);
    const Complex z = rounded(z_in);
    r.parameters = {{"m", param(m)}, {"z", param(z)}};
    if (detail::is_zero(z)) throw ParameterError("multisection_lemma: z must be nonzero");
    const DirichletSeries D = multisection_family(m);
    const Complex Z = pow(z, 2 * m);
    const Complex lhs = psi_truncated(D, Z, ctx, M);
    r.truncation_terms = M;
    const Complex rhs = multisection_cot_side(m, z);
    const Real scale = max(abs(lhs), abs(rhs));

    // residue system: sum_{j=-h}^{h} (-1)^j e^{-i j pi/m} = 0
    {
        const long h = (m - 1) / 2;
        Complex s(0L);
        for (long j = -h; j <= h; ++j) s += sign_pow(j) * expi(-pi() * j / m);
        const bool ok = m == 1 || abs(s) <= pow10(-(ctx.decimal_digits + 5));
        r.checks.push_back(make_exact_check("residue system: sum (-1)^j e^(-i j pi/m) vanishes", ok,
                                            m == 1 ? "m = 1 has the single term 1" : ""));
    }
    Complex reported = rhs;
    if (m == 1) {
        Adjudication a;
        a.display = "multisection identity at m = 1";
        a.readings.push_back(make_reading("as printed", lhs, rhs, scale, r.required_digits));
        const Complex ml = rhs - Complex(Real(Rational(1, 2)));
        a.readings.push_back(make_reading("with the -1/2 constant of the cotangent partial fractions", lhs, ml, scale,
                                          r.required_digits));
        adjudicate(a);
        r.adjudications.push_back(a);
        if (!a.readings[0].passed && a.readings[1].passed) reported = ml;
        r.note = "reported right side: " + (a.resolved() ? a.adopted : a.readings[0].label);
    }
    finalize(r, lhs, reported, scale);
    return r;
}

VerificationReport verify_multisection(long N, long m, const Real& alpha_in, const Real& beta_in,
                                       const PrecisionContext& ctx, long M) {
    if (N < 1) throw ParameterError("multisection: N must be a positive integer");
    if (m < 1 || m % 2 == 0) throw ParameterError("multisection: m must be odd (got " + std::to_string(m) + ")");
    if (alpha_in.sign() <= 0 || beta_in.sign() <= 0) throw ParameterError("multisection: alpha, beta must be positive");
    PrecisionScope scope{ctx};
    auto r = new_report("multisection", ctx, detail::kFastSlack);
    const Real alpha = rounded(alpha_in), beta = rounded(beta_in);
    r.parameters = {{"N", param(N)}, {"m", param(m)}, {"alpha", param(alpha)}, {"beta", param(beta)}};
    Real lhs(0L), scale(0L);
    for (long k = 1; k <= N; ++k) {
        const Real t = pow(alpha, k) * sign_pow(N + 1 - k) * pow(beta, N + 1 - k) * zeta_int(2 * k) *
                       zeta_int(2 * m * (N - k) + m + 1);
        lhs += t;
        scale += abs(t);
    }
    const Real p = pi();
    const Real c = sqrt(beta / alpha);
    const long h = (m - 1) / 2;
    // S1 = sum_n n^-(2N+1) sum_j (-1)^j coth(pi (n c)^(1/m) e^{i j pi/m})
    Complex S1(0L);
    long n_used = 0;
    {
        std::vector<Complex> rot;
        long sj = 0;
        for (long j = -h; j <= h; ++j) {
            rot.push_back(expi(p * j / m));
            sj += (j % 2 == 0) ? 1 : -1;
        }
        const Real eps = detail::eps_working(5);
        // slowest coth term decays like exp(-2 pi cos((m-1) pi / 2m) (n c)^(1/m))
        const double rate = 2.0 * M_PI * std::cos((m - 1) * M_PI / (2.0 * m));
        const double need = (detail::working_digits() + 5) * std::log(10.0);
        double lo = 0.0, hi = 60.0;  // bisection on log n
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double v = (2 * N + 1) * mid + rate * std::exp((mid + std::log(c.to_double())) / m);
            (v < need ? lo : hi) = mid;
        }
        const double estimate = std::exp(hi);
        const long limit = 3000000;
        if (M <= 0 && estimate > limit) {
            throw ResourceError("multisection: complex coth sum needs about " +
                                std::to_string(static_cast<long long>(estimate)) + " terms at m = " +
                                std::to_string(m) + " (limit " + std::to_string(limit) +
                                "); pass an explicit truncation or lower the digits");
        }
        const long cap = M > 0 ? M : limit;
        std::vector<Complex> parts;
        const Real inv_m = Real(1L) / Real(m);
        for (long n = 1; n <= cap; ++n) {
            const Real w = p * pow(c * n, inv_m);
            Complex s(0L);
            for (long j = -h; j <= h; ++j) s += sign_pow(j) * coth_minus_one(rot[j + h] * w);
            const Complex term = s * pow(Real(n), -(2 * N + 1));
            parts.push_back(term);
            n_used = n;
            if (M <= 0 && n > 4 && abs(term) < eps) break;
            if (M <= 0 && n == cap) throw ConvergenceError("multisection: complex coth sum did not converge");
        }
        S1 = detail::pairwise_sum(parts) + Real(sj) * zeta_int(2 * N + 1);
    }
    long M2 = 0;
    Real S2(0L);
    {
        const Real pc = p * sqrt(alpha / beta);
        const long pw = 2 * m * N + 1;
        Real corr(0L);
        for (long n = detail::terms_for_rate(2.0 * pc.to_double()); n >= 1; --n) {
            corr += coth_minus_one(Complex(pc * pow(Real(n), m))).re / pow(Real(n), pw);
            M2 = std::max(M2, n);
        }
        S2 = zeta_int(pw) + corr;
    }
    const Real aN = pow(alpha, N + 1), bN = sign_pow(N + 1) * pow(beta, N + 1);
    const Complex t1 = S1 * (aN * p / (2L * m) * c);
    const Real t2 = bN / 2L * zeta_int(2 * m * N + m + 1);
    const Real t3 = bN * p / 2L * sqrt(alpha / beta) * S2;
    const Complex printed = t1 + Complex(t2 - t3);
    scale = max(scale, abs(t1) + abs(t2) + abs(t3));
    r.truncation_terms = std::max(n_used, M2);
    r.checks.push_back(make_check("conjugate pairing: complex coth sum is real", Complex(S1.re), S1,
                                  abs(S1), r.digits_requested - 5));

    Adjudication a;
    a.display = "multisection theorem: sign of the complex coth term";
    a.readings.push_back(make_reading("as printed", Complex(lhs), printed, scale, r.required_digits));
    const bool flip = ((m + 1) / 2) % 2 == 1;  // (-1)^((m+1)/2) = -1
    Complex adjusted = flip ? Complex(t2 - t3) - t1 : printed;
    if (m == 1) adjusted += Complex(aN * zeta_int(2 * N + 2) / 2L);
    if (flip || m == 1) {
        a.readings.push_back(make_reading(
            "complex coth term times (-1)^((m+1)/2), plus alpha^(N+1) zeta(2N+2)/2 when m = 1", Complex(lhs),
            adjusted, scale, r.required_digits));
    }
    adjudicate(a);
    const Complex rhs = (a.readings[0].passed || a.readings.size() == 1) ? printed : adjusted;
    r.note = "reported right side: " + (a.readings[0].passed || a.readings.size() == 1 ? a.readings[0].label
                                                                                        : a.readings[1].label);
    r.adjudications.push_back(a);
    if (m == 1) {
        VerificationReport g = verify_generalized_ramanujan(N, alpha, beta, ctx, 0);
        r.checks.push_back(make_check("m = 1: left side equals the generalized Ramanujan left side", Complex(lhs),
                                      g.lhs, scale, r.digits_requested - 5));
        r.checks.push_back(make_check("m = 1: adjudicated right side equals the generalized Ramanujan right side",
                                      adjusted, g.rhs, scale, r.digits_requested - 5));
    }
    finalize(r, Complex(lhs), rhs, scale);
    return r;
}

}  // namespace zc
