#include <random>
#include <set>

#include "identities_common.hpp"
#include "zc/series.hpp"

namespace zc {

using detail::new_report;
using detail::param;
using detail::sign_pow;

namespace {

// S(c, s) = sum_{n>=1} (psi(i c n) + psi(-i c n)) / n^s, tail from
// psi(w) ~ log w - 1/(2w) - sum B_2k / (2k w^2k).
Real herglotz_sum(const Real& c, long s, long M, long& used) {
    const int W = detail::working_digits();
    const long Mmin = static_cast<long>(std::ceil((0.5 * (W + 5) + 5.0) / c.to_double())) + 1;
    M = std::max(M, Mmin);
    used = M;
    std::vector<Real> parts;
    for (long n = 1; n <= M; ++n) {
        const Complex d = digamma(Complex(Real(0L), c * n));
        parts.push_back(2L * d.re / pow(Real(n), s));
    }
    const Real head = detail::pairwise_sum(parts);
    const Real a = Real(M + 1);
    Real tail = 2L * log(c) * hurwitz_zeta(s, a) - 2L * hurwitz_zeta_prime(s, a);
    const Real eps = detail::eps_working(2);
    const Real u0 = c * (M + 1);
    for (long k = 1; k < 4 * W + 40; ++k) {
        const Real b = Real(bernoulli_number(2 * k)) / k;
        const Real term = sign_pow(k) * b / pow(c, 2 * k) * hurwitz_zeta(s + 2 * k, a);
        tail -= term;
        if (abs(b) * pow(u0, -2 * k) < eps) return head + tail;
    }
    throw ConvergenceError("herglotz: digamma tail expansion did not converge");
}

}  // namespace

VerificationReport verify_herglotz(long m, const Real& alpha_in, const PrecisionContext& ctx, long M) {
    if (m < 1) throw ParameterError("herglotz: m must be a positive integer");
    if (alpha_in.sign() <= 0) throw ParameterError("herglotz: alpha must be positive");
    PrecisionScope scope{ctx};
    auto r = new_report("herglotz", ctx, detail::kFastSlack);
    const Real alpha = rounded(alpha_in);
    const Real p = pi();
    const Real beta = 4L * p * p / alpha;
    r.parameters = {{"m", param(m)}, {"alpha", param(alpha)}, {"beta", param(beta)}};
    const long s = 2 * m + 1;
    const Real base = 2L * euler_gamma() * zeta_int(s);
    long ua = 0, ub = 0;
    const Real Ha = base + herglotz_sum(alpha / (2L * p), s, M, ua);
    const Real Hb = base + herglotz_sum(beta / (2L * p), s, M, ub);
    r.truncation_terms = std::max(ua, ub);
    const Real ta = pow(alpha, -m) * Ha;
    const Real tb = sign_pow(m) * pow(beta, -m) * Hb;
    const Real lhs = ta + tb;
    Real scale = abs(ta) + abs(tb);
    Real rhs(0L), printed(0L);
    bool printed_pole = false;
    for (long k = 1; k <= m - 1; ++k) {
        const Real w = -2L * sign_pow(k) * zeta_int(2 * k + 1) * pow(alpha, k - m) * pow(beta, -k);
        const Real t = w * zeta_int(2 * m - 2 * k + 1);
        rhs += t;
        scale = max(scale, abs(t));
        if (2 * m - 2 * k - 1 == 1) {
            printed_pole = true;
        } else {
            printed += w * zeta_int(2 * m - 2 * k - 1);
        }
    }
    if (m >= 2) {
        Adjudication a;
        a.display = "Herglotz-Zagier transformation: index of the second zeta factor";
        a.readings.push_back(make_reading("zeta(2m-2k+1)", Complex(lhs), Complex(rhs), scale, r.required_digits));
        Reading pr;
        if (printed_pole) {
            pr.label = "zeta(2m-2k-1) as printed (pole at k = m-1)";
            pr.lhs = quantize(Complex(lhs), r.digits_requested);
            pr.rhs = Complex(0L);
            pr.rel_diff = Real(1L);
            pr.digits_achieved = 0;
            pr.passed = false;
        } else {
            pr = make_reading("zeta(2m-2k-1) as printed", Complex(lhs), Complex(printed), scale, r.required_digits);
        }
        a.readings.push_back(pr);
        adjudicate(a);
        r.adjudications.push_back(a);
    }
    // at m = 1 the transformation reads H(alpha)/alpha = H(beta)/beta
    if (m == 1) {
        r.checks.push_back(make_check("m = 1: H(alpha)/alpha equals H(beta)/beta", Complex(Ha / alpha),
                                      Complex(Hb / beta), abs(Ha / alpha), r.required_digits));
    }
    finalize(r, Complex(lhs), Complex(rhs), scale);
    return r;
}

// ------------------------------------------------------------ master theorem

VerificationReport verify_master_theorem_exact(unsigned long seed, long count, const PrecisionContext& ctx) {
    if (count < 1) throw ParameterError("master_theorem: count must be positive");
    PrecisionScope scope{ctx};
    auto r = new_report("master_theorem", ctx, 0);
    r.parameters = {{"seed", std::to_string(seed)}, {"count", param(count)}};
    std::mt19937_64 rng(seed);
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto random_rational = [&](long span) {
        long p = 0;
        while (p == 0) p = uniform(-span, span);
        return Rational(p, uniform(1, 7));
    };
    long agree = 0;
    long partial_ok = 0, composition_ok = 0, sum_product_ok = 0;
    for (long t = 0; t < count; ++t) {
        const long n = uniform(2, 4);
        const long Np1 = uniform(n, 6);
        std::set<Rational> used;
        std::vector<DirichletSeries> Ds;
        for (long i = 0; i < n; ++i) {
            const long len = uniform(1, 4);
            std::vector<Rational> zs, ws;
            while (static_cast<long>(zs.size()) < len) {
                const Rational x = random_rational(12);
                if (used.insert(x).second) {
                    zs.push_back(x);
                    ws.push_back(random_rational(9));
                }
            }
            Ds.push_back(DirichletSeries::finite(zs, ws, "random" + std::to_string(i)));
        }
        if (convolve_direct_exact(Ds, Np1) == convolve_linearized_exact(Ds, Np1)) ++agree;

        std::vector<Rational> xs(used.begin(), used.end());
        Rational z = random_rational(12);
        while (used.count(z)) z = random_rational(12);
        if (check_partial_fraction(xs, z)) ++partial_ok;
        if (check_composition_rule(Ds[0], Ds[1], z)) ++composition_ok;
        if (check_sum_to_product(xs[0], xs[1], z)) ++sum_product_ok;
    }
    auto exact = [&](const std::string& name, long ok) {
        r.checks.push_back(make_exact_check(name, ok == count, std::to_string(ok) + "/" + std::to_string(count)));
    };
    exact("partial fractions over all zeros", partial_ok);
    exact("composition rule for the first two series", composition_ok);
    exact("sum-to-product for two zeros", sum_product_ok);
    r.truncation_terms = 0;
    r.note = "direct and linearized convolutions agreeing exactly: " + std::to_string(agree) + "/" +
             std::to_string(count);
    finalize(r, Complex(Real(agree)), Complex(Real(count)), Real(count));
    return r;
}

}  // namespace zc
