#include "zc/series.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "internal.hpp"
#include "zc/specfun.hpp"

namespace zc {

// ------------------------------------------------------------ helpers

namespace {

constexpr long kMinTerms = 64;
constexpr long kMaxTerms = 1L << 20;

Rational rational_pow(const Rational& q, long n) {
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= q;
    return r;
}

// Calls f(i, j) for every index of shell n: n for naturals, +-n for
// nonzero integers, {(p, q) : max(p, q) = n} for natural pairs.
template <class F>
void for_shell(const DirichletSeries& D, long n, F&& f) {
    switch (D.index_set) {
        case IndexSet::naturals:
            f(n, 0L);
            break;
        case IndexSet::nonzero_integers:
            f(n, 0L);
            f(-n, 0L);
            break;
        case IndexSet::natural_pairs:
            for (long p = 1; p < n; ++p) {
                f(p, n);
                f(n, p);
            }
            f(n, n);
            break;
    }
}

std::string index_name(const DirichletSeries& D, long i, long j) {
    if (D.index_set == IndexSet::natural_pairs) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return std::to_string(i);
}

Real pole_tolerance() { return pow10(-(detail::requested_digits() - 5)); }

// |shell| over the windows (m/4, m/2] and (m/2, m]; a growing maximum means
// the terms are not decreasing.
void check_divergence(const std::vector<Complex>& shells, const std::string& name) {
    const size_t m = shells.size();
    if (m < 128) return;
    Real early(0L), late(0L);
    for (size_t k = m / 4; k < m / 2; ++k) early = max(early, abs(shells[k]));
    for (size_t k = m / 2; k < m; ++k) late = max(late, abs(shells[k]));
    if (!early.is_zero() && late > early * 2L) {
        throw ConvergenceError("zeta_value: terms of " + name + " are not decreasing (shell " +
                               std::to_string(m) + ")");
    }
}

Complex sum_range(const std::vector<Complex>& v, size_t lo, size_t hi) {
    return detail::pairwise_sum(std::vector<Complex>(v.begin() + static_cast<long>(lo),
                                                     v.begin() + static_cast<long>(hi)));
}

}  // namespace

std::string to_string(ClosedFormTag::Kind kind) {
    switch (kind) {
        case ClosedFormTag::Kind::cot_form: return "cot_form";
        case ClosedFormTag::Kind::coth_form: return "coth_form";
        case ClosedFormTag::Kind::bernoulli_exp_form: return "bernoulli_exp_form";
        case ClosedFormTag::Kind::digamma_pair_form: return "digamma_pair_form";
        case ClosedFormTag::Kind::bessel_ratio_form: return "bessel_ratio_form";
        case ClosedFormTag::Kind::divisor_cot_form: return "divisor_cot_form";
        case ClosedFormTag::Kind::multisection_form: return "multisection_form";
    }
    return "unknown";
}

long DirichletSeries::finite_length() const {
    if (exact) return static_cast<long>(exact_zeros.size());
    return std::max(0L, length);
}

DirichletSeries DirichletSeries::finite(std::vector<Rational> zeros, std::vector<Rational> weights, std::string name) {
    if (zeros.size() != weights.size()) throw ContractViolation("DirichletSeries::finite: length mismatch");
    for (const auto& x : zeros) {
        if (x == 0) throw DomainError("DirichletSeries::finite: zeros must be nonzero");
    }
    DirichletSeries D;
    D.name = std::move(name);
    D.exact = true;
    D.exact_zeros = std::move(zeros);
    D.exact_weights = std::move(weights);
    D.length = static_cast<long>(D.exact_zeros.size());
    auto xs = D.exact_zeros;
    auto as = D.exact_weights;
    D.zero = [xs](long n, long) { return Complex(Real(xs.at(static_cast<size_t>(n - 1)))); };
    D.weight = [as](long n, long) { return Complex(Real(as.at(static_cast<size_t>(n - 1)))); };
    return D;
}

DirichletSeries DirichletSeries::finite_numeric(std::vector<Complex> zeros, std::vector<Complex> weights,
                                                std::string name) {
    if (zeros.size() != weights.size()) throw ContractViolation("DirichletSeries::finite_numeric: length mismatch");
    for (const auto& x : zeros) {
        if (detail::is_zero(x)) throw DomainError("DirichletSeries::finite_numeric: zeros must be nonzero");
    }
    DirichletSeries D;
    D.name = std::move(name);
    D.length = static_cast<long>(zeros.size());
    D.zero = [zeros](long n, long) { return rounded(zeros.at(static_cast<size_t>(n - 1))); };
    D.weight = [weights](long n, long) { return rounded(weights.at(static_cast<size_t>(n - 1))); };
    return D;
}

// ------------------------------------------------------------ closed forms

Complex closed_form_psi(const ClosedFormTag& tag, const Complex& z) {
    using K = ClosedFormTag::Kind;
    const auto& P = tag.parameters;
    auto need = [&](size_t k) {
        if (P.size() < k) throw ContractViolation("closed_form_psi: " + to_string(tag.kind) + " needs " +
                                                  std::to_string(k) + " parameters");
    };
    if (detail::is_zero(z)) return Complex(0L);
    Complex value = detail::guarded(10, [&]() -> Complex {
        switch (tag.kind) {
            case K::cot_form: {
                need(1);
                Complex w = sqrt(P[0] * z);
                return (1L - w * cot(w)) / 2L;
            }
            case K::coth_form: {
                need(1);
                Complex w = sqrt(P[0] * z);
                return (1L - w * coth(w)) / 2L;
            }
            case K::bernoulli_exp_form: {
                need(2);
                const Complex u = P[0] * z;
                const Real& y = P[1].re;
                const int extra = std::max(0, static_cast<int>(-std::log10(detail::to_double(u)))) + 5;
                return detail::guarded(extra, [&]() -> Complex {
                    if (y.is_zero() || y == 1L) {
                        // Fourier series at the jump converges to the mean of both sides.
                        return 1L - u / 2L * coth(u / 2L);
                    }
                    if (u.re.sign() >= 0) return 1L - u * exp(u * (y - 1L)) / (1L - exp(-u));
                    return 1L - u * exp(u * y) / (exp(u) - 1L);
                });
            }
            case K::digamma_pair_form: {
                need(2);
                Complex s = sqrt(z / P[0]);
                const Complex& x = P[1];
                return s / 2L * (digamma(x + s) - digamma(x - s));
            }
            case K::bessel_ratio_form: {
                need(2);
                Complex w = sqrt(P[0] * z);
                const Real& nu = P[1].re;
                return w / 2L * bessel_j(nu + 1L, w) / bessel_j(nu, w);
            }
            case K::divisor_cot_form: {
                need(1);
                const Real tol = pole_tolerance();
                if (abs(z.im) > tol * abs(z) || z.re.sign() <= 0) {
                    throw DomainError("closed_form_psi: divisor_cot_form needs z on the positive real axis");
                }
                Real X = abs(P[0].re) * sqrt(z.re);
                return Complex(-(X * X) * koshliakov_sum(X, 0));
            }
            case K::multisection_form: {
                need(1);
                const long m = P[0].re.to_long();
                if (m < 1 || m % 2 == 0) throw ParameterError("multisection_form: m must be odd");
                Complex s = exp(log(z) / (2L * m));
                const Real p = pi();
                Complex total(0L);
                for (long j = -(m - 1) / 2; j <= (m - 1) / 2; ++j) {
                    Complex term = cot(p * s * expi(p * j / m));
                    if (j % 2 == 0) total += term; else total -= term;
                }
                Complex r = p * pow(s, m) / (2L * m) * total;
                if (m == 1) r -= Real(Rational(1, 2));
                return r;
            }
        }
        throw ContractViolation("closed_form_psi: unknown kind");
    });
    const Real big = pow10(detail::requested_digits() - 5);
    if (!value.re.is_finite() || !value.im.is_finite() || abs(value) > big * max(Real(1L), abs(z))) {
        throw PoleError("psi: " + to_string(tag.kind) + " evaluated at a zero of the series");
    }
    return value;
}

// ------------------------------------------------------------ families

DirichletSeries cot_family(const Real& beta) {
    DirichletSeries D;
    D.name = "cot_family";
    D.zero = [beta](long n, long) { return Complex(pi() * pi() * (n * n) / beta); };
    D.weight = [](long, long) { return Complex(1L); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::cot_form, {Complex(beta)}};
    D.tail = [beta](long N, long M) {
        return Complex(pow(beta / (pi() * pi()), N) * hurwitz_zeta(2 * N, Real(M + 1)));
    };
    return D;
}

DirichletSeries coth_family(const Real& alpha) {
    DirichletSeries D;
    D.name = "coth_family";
    D.zero = [alpha](long n, long) { return Complex(-(pi() * pi() * (n * n)) / alpha); };
    D.weight = [](long, long) { return Complex(1L); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::coth_form, {Complex(alpha)}};
    D.tail = [alpha](long N, long M) {
        return Complex(pow(-alpha / (pi() * pi()), N) * hurwitz_zeta(2 * N, Real(M + 1)));
    };
    return D;
}

DirichletSeries bernoulli_exp_family(const Complex& omega, const Real& y) {
    if (y < 0L || y > 1L) throw DomainError("bernoulli_exp_family: y must lie in [0, 1]");
    DirichletSeries D;
    D.name = "bernoulli_exp_family";
    D.index_set = IndexSet::nonzero_integers;
    D.zero = [omega](long m, long) { return imag_unit(2L * pi() * m) / omega; };
    D.weight = [y](long m, long) { return expi(2L * pi() * m * y); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::bernoulli_exp_form, {omega, Complex(y)}};
    D.tail = [omega, y](long N, long M) {
        // sum_{|m| > M} e^{i theta m} (omega / (2 pi i m))^N, theta = 2 pi y
        return detail::guarded(10, [&]() -> Complex {
            const Real theta = 2L * pi() * y;
            const Real reduced = theta - 2L * pi() * floor(theta / (2L * pi()) + Real(Rational(1, 2)));
            Complex full;
            if (reduced.is_zero()) {
                full = (N % 2 == 0) ? Complex(2L * zeta_int(N)) : Complex(0L);
            } else {
                Complex plus = polylog_unit_circle(N, theta);
                Complex minus = polylog_unit_circle(N, -theta);
                full = (N % 2 == 0) ? plus + minus : plus - minus;
            }
            std::vector<Complex> parts;
            parts.reserve(static_cast<size_t>(M));
            for (long m = 1; m <= M; ++m) {
                Complex e = expi(theta * m);
                Complex pair = (N % 2 == 0) ? e + conj(e) : e - conj(e);
                parts.push_back(pair / pow(Real(m), N));
            }
            Complex tail_sum = full - detail::pairwise_sum(parts);
            return pow(omega / imag_unit(2L * pi()), N) * tail_sum;
        });
    };
    return D;
}

DirichletSeries hurwitz_family(const Real& lambda, const Real& x) {
    if (x.sign() <= 0) throw DomainError("hurwitz_family: x must be positive");
    DirichletSeries D;
    D.name = "hurwitz_family";
    D.zero = [lambda, x](long n, long) {
        Real t = x + (n - 1);
        return Complex(lambda * t * t);
    };
    D.weight = [](long, long) { return Complex(1L); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::digamma_pair_form, {Complex(lambda), Complex(x)}};
    D.tail = [lambda, x](long N, long M) { return Complex(hurwitz_zeta(2 * N, x + M) / pow(lambda, N)); };
    return D;
}

DirichletSeries bessel_family(const Real& nu, const Real& lambda) {
    if (!(nu > -1L)) throw DomainError("bessel_family: requires nu > -1");
    DirichletSeries D;
    D.name = "bessel_family";
    D.zero = [nu, lambda](long n, long) {
        BesselZeroTable t = bessel_zero_table(nu, n);
        const Real& j = t.zeros.at(static_cast<size_t>(n - 1));
        return Complex(j * j / lambda);
    };
    D.weight = [](long, long) { return Complex(1L); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::bessel_ratio_form, {Complex(lambda), Complex(nu)}};
    D.tail = [nu, lambda](long N, long M) {
        if (M < 20) throw ResourceError("bessel_family: tail needs at least 20 tabulated zeros");
        return Complex(pow(lambda, N) * bessel_zero_tail_sums(nu, M, 2 * N, 2 * N).front());
    };
    return D;
}

DirichletSeries divisor_family(const Real& alpha) {
    DirichletSeries D;
    D.name = "divisor_family";
    D.index_set = IndexSet::natural_pairs;
    D.zero = [alpha](long p, long q) {
        Real pq = Real(p) * q;
        return Complex(-(pq * pq) / (alpha * alpha));
    };
    D.weight = [](long, long) { return Complex(1L); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::divisor_cot_form, {Complex(alpha)}};
    D.tail = [alpha](long N, long M) {
        // full box minus [1, M]^2: 2 zeta h - h^2, h = zeta_H(2N, M+1)
        Real z = zeta_int(2 * N);
        Real h = hurwitz_zeta(2 * N, Real(M + 1));
        return Complex(pow(-(alpha * alpha), N) * (2L * z * h - h * h));
    };
    return D;
}

DirichletSeries multisection_family(long m) {
    if (m < 1 || m % 2 == 0) throw ParameterError("multisection_family: m must be odd");
    DirichletSeries D;
    D.name = "multisection_family";
    D.zero = [m](long p, long) { return Complex(pow(Real(p), 2 * m)); };
    D.weight = [m](long p, long) { return Complex(-pow(Real(p), m - 1)); };
    D.psi_closed_form = ClosedFormTag{ClosedFormTag::Kind::multisection_form, {Complex(Real(m))}};
    D.tail = [m](long N, long M) { return Complex(-hurwitz_zeta(2 * m * N - m + 1, Real(M + 1))); };
    return D;
}

// ------------------------------------------------------------ numeric mode

SeriesValue zeta_value(const DirichletSeries& D, long N, const PrecisionContext& ctx, long M) {
    if (N < 1) throw ContractViolation("zeta_value: N must be >= 1");
    if (M < 0) throw ContractViolation("zeta_value: M must be >= 0");
    PrecisionScope scope{ctx};
    SeriesValue out;
    out.tail_estimate = Real(0L);
    if (D.exact) {
        out.value = Complex(Real(zeta_value_exact(D, N)));
        out.terms = D.finite_length();
        return out;
    }
    auto shell_value = [&](long n) {
        Complex s(0L);
        for_shell(D, n, [&](long i, long j) {
            Complex x = D.zero(i, j);
            if (detail::is_zero(x)) throw ContractViolation("zeta_value: zero x_" + index_name(D, i, j) + " vanishes");
            s += D.weight(i, j) / pow(x, N);
        });
        return s;
    };
    std::vector<Complex> shells;
    auto extend = [&](long upto) {
        for (long n = static_cast<long>(shells.size()) + 1; n <= upto; ++n) shells.push_back(shell_value(n));
    };
    if (D.is_finite()) {
        extend(D.finite_length());
        out.value = detail::pairwise_sum(shells);
        out.terms = D.finite_length();
        return out;
    }
    const Real target = pow10(-(ctx.decimal_digits + 5));
    long m = M > 0 ? M : kMinTerms;
    extend(m);
    if (M == 0 && !D.tail) {
        while (true) {
            check_divergence(shells, D.name);
            Complex total = detail::pairwise_sum(shells);
            Complex block = sum_range(shells, shells.size() / 2, shells.size());
            if (abs(block) < target * max(Real(1L), abs(total)) || m >= kMaxTerms) break;
            m *= 2;
            extend(m);
        }
    }
    out.value = detail::pairwise_sum(shells);
    out.terms = m;
    if (D.tail) {
        out.value += D.tail(N, m);
    } else {
        out.tail_estimate = abs(sum_range(shells, shells.size() / 2, shells.size()));
        out.flagged = out.tail_estimate > pow10(-ctx.decimal_digits) * max(Real(1L), abs(out.value));
    }
    return out;
}

Complex psi_truncated(const DirichletSeries& D, const Complex& z, const PrecisionContext& ctx, long M) {
    if (M < 0) throw ContractViolation("psi: M must be >= 0");
    PrecisionScope scope{ctx};
    const Real tol = pole_tolerance();
    auto shell_value = [&](long n) {
        Complex s(0L);
        for_shell(D, n, [&](long i, long j) {
            Complex x = D.zero(i, j);
            Complex gap = x - z;
            if (abs(gap) <= tol * abs(x)) {
                throw PoleError("psi: z coincides with zero x_" + index_name(D, i, j) + " of " + D.name);
            }
            s += D.weight(i, j) * z / gap;
        });
        return s;
    };
    std::vector<Complex> shells;
    auto extend = [&](long upto) {
        for (long n = static_cast<long>(shells.size()) + 1; n <= upto; ++n) shells.push_back(shell_value(n));
    };
    if (D.is_finite()) {
        extend(D.finite_length());
        return detail::pairwise_sum(shells);
    }
    if (detail::is_zero(z)) return Complex(0L);
    const Real target = pow10(-(ctx.decimal_digits + 5));
    long m = M > 0 ? M : kMinTerms;
    if (D.tail) {
        if (M == 0) {
            // the tail expansion in z converges when |z| < |x_{m+1}|
            const Real az = abs(z);
            auto first_of_shell = [&](long n) {
                return D.index_set == IndexSet::natural_pairs ? abs(D.zero(1, n)) : abs(D.zero(n, 0));
            };
            while (first_of_shell(m + 1) < 16L * az && m < kMaxTerms) m *= 2;
        }
        extend(m);
        Complex total = detail::pairwise_sum(shells);
        const Real eps = detail::eps_working(2);
        Complex zpow(1L);
        int small_run = 0;
        for (long N = 1;; ++N) {
            zpow *= z;
            Complex term = zpow * D.tail(N, m);
            total += term;
            if (abs(term) < eps * max(Real(1L), abs(total))) {
                if (++small_run >= 2) break;
            } else {
                small_run = 0;
            }
            if (N > 5000) throw ConvergenceError("psi: tail expansion of " + D.name + " did not converge");
        }
        return total;
    }
    extend(m);
    if (M == 0) {
        while (true) {
            Complex total = detail::pairwise_sum(shells);
            Complex block = sum_range(shells, shells.size() / 2, shells.size());
            if (abs(block) < target * max(Real(1L), abs(total))) break;
            if (m >= kMaxTerms) {
                throw ConvergenceError("psi: truncated sum of " + D.name + " did not converge");
            }
            m *= 2;
            extend(m);
        }
    }
    return detail::pairwise_sum(shells);
}

Complex psi(const DirichletSeries& D, const Complex& z, const PrecisionContext& ctx, long M) {
    if (D.psi_closed_form && !D.exact) {
        PrecisionScope scope{ctx};
        return closed_form_psi(*D.psi_closed_form, rounded(z));
    }
    return psi_truncated(D, z, ctx, M);
}

DirichletSeries modified_series(const DirichletSeries& D, const std::vector<DirichletSeries>& factors,
                                const PrecisionContext& ctx, long M, DirichletSeries::TailHook tail) {
    if (factors.empty()) return D;
    bool all_exact = D.exact;
    for (const auto& F : factors) all_exact = all_exact && F.exact;
    if (all_exact) return modified_series_exact(D, factors);
    DirichletSeries R = D;
    R.exact = false;
    R.exact_zeros.clear();
    R.exact_weights.clear();
    R.psi_closed_form.reset();
    R.tail = std::move(tail);
    R.name = D.name;
    for (const auto& F : factors) R.name += "*psi[" + F.name + "]";
    R.weight = [D, factors, ctx, M](long i, long j) {
        const Complex x = D.zero(i, j);
        Complex w = D.weight(i, j);
        for (const auto& F : factors) {
            try {
                w *= psi(F, x, ctx, M);
            } catch (const PoleError& e) {
                throw PoleError("modified_series: zero x_" + index_name(D, i, j) + " of " + D.name +
                                " collides with a zero of " + F.name + " (" + e.what() + ")");
            }
        }
        return w;
    };
    return R;
}

Complex convolve_direct(const std::vector<DirichletSeries>& Ds, long N_plus_1, const PrecisionContext& ctx, long M) {
    const long n = static_cast<long>(Ds.size());
    if (n < 2) throw ContractViolation("convolve_direct: needs at least two series");
    if (N_plus_1 < 2) throw ContractViolation("convolve_direct: N+1 must be >= 2");
    PrecisionScope scope{ctx};
    const long kmax = N_plus_1 - (n - 1);
    if (kmax < 1) return Complex(0L);
    std::vector<std::vector<Complex>> values(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        for (long k = 1; k <= kmax; ++k) values[i].push_back(zeta_value(Ds[i], k, ctx, M).value);
    }
    std::vector<Complex> parts;
    for (const auto& comp : compositions(n, N_plus_1, 1)) {
        Complex prod(1L);
        for (long i = 0; i < n; ++i) prod *= values[i][comp[i] - 1];
        parts.push_back(prod);
    }
    return detail::pairwise_sum(parts);
}

Complex convolve_linearized(const std::vector<DirichletSeries>& Ds, long N_plus_1, const PrecisionContext& ctx,
                            long M, const std::vector<DirichletSeries::TailHook>& tails) {
    const size_t n = Ds.size();
    if (n < 2) throw ContractViolation("convolve_linearized: needs at least two series");
    if (N_plus_1 < 2) throw ContractViolation("convolve_linearized: N+1 must be >= 2");
    if (!tails.empty() && tails.size() != n) throw ContractViolation("convolve_linearized: one tail hook per series");
    PrecisionScope scope{ctx};
    std::vector<Complex> parts;
    for (size_t i = 0; i < n; ++i) {
        std::vector<DirichletSeries> others;
        for (size_t k = 0; k < n; ++k) {
            if (k != i) others.push_back(Ds[k]);
        }
        DirichletSeries Mi = modified_series(Ds[i], others, ctx, M, tails.empty() ? nullptr : tails[i]);
        parts.push_back(zeta_value(Mi, N_plus_1, ctx, M).value);
    }
    return detail::pairwise_sum(parts);
}

// ------------------------------------------------------------ exact mode

namespace {

void require_exact(const DirichletSeries& D, const char* who) {
    if (!D.exact) throw ContractViolation(std::string(who) + ": series " + D.name + " is not in exact mode");
}

}  // namespace

Rational zeta_value_exact(const DirichletSeries& D, long N) {
    require_exact(D, "zeta_value_exact");
    if (N < 1) throw ContractViolation("zeta_value_exact: N must be >= 1");
    Rational total = 0;
    for (size_t i = 0; i < D.exact_zeros.size(); ++i) {
        total += D.exact_weights[i] / rational_pow(D.exact_zeros[i], N);
    }
    return total;
}

Rational psi_exact(const DirichletSeries& D, const Rational& z) {
    require_exact(D, "psi_exact");
    Rational total = 0;
    for (size_t i = 0; i < D.exact_zeros.size(); ++i) {
        const Rational& x = D.exact_zeros[i];
        if (x == z) {
            throw PoleError("psi_exact: z = " + to_string(z) + " equals zero x_" + std::to_string(i + 1) + " of " +
                            D.name);
        }
        total += D.exact_weights[i] * z / (x - z);
    }
    return total;
}

DirichletSeries modified_series_exact(const DirichletSeries& D, const std::vector<DirichletSeries>& factors) {
    require_exact(D, "modified_series_exact");
    std::vector<Rational> w = D.exact_weights;
    std::string name = D.name;
    for (const auto& F : factors) {
        require_exact(F, "modified_series_exact");
        name += "*psi[" + F.name + "]";
        for (size_t i = 0; i < w.size(); ++i) {
            try {
                w[i] *= psi_exact(F, D.exact_zeros[i]);
            } catch (const PoleError& e) {
                throw PoleError("modified_series: zero x_" + std::to_string(i + 1) + " of " + D.name +
                                " collides with a zero of " + F.name + " (" + e.what() + ")");
            }
        }
    }
    return DirichletSeries::finite(D.exact_zeros, std::move(w), name);
}

std::vector<std::vector<long>> compositions(long parts, long total, long lo) {
    std::vector<std::vector<long>> out;
    if (parts < 1) return out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining_parts, long remaining) -> void {
        if (remaining_parts == 1) {
            if (remaining >= lo) {
                cur.push_back(remaining);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (long k = lo; k <= remaining - lo * (remaining_parts - 1); ++k) {
            cur.push_back(k);
            self(self, remaining_parts - 1, remaining - k);
            cur.pop_back();
        }
    };
    rec(rec, parts, total);
    return out;
}

Rational convolve_direct_exact(const std::vector<DirichletSeries>& Ds, long N_plus_1) {
    const long n = static_cast<long>(Ds.size());
    if (n < 2) throw ContractViolation("convolve_direct: needs at least two series");
    Rational total = 0;
    for (const auto& comp : compositions(n, N_plus_1, 1)) {
        Rational prod = 1;
        for (long i = 0; i < n; ++i) prod *= zeta_value_exact(Ds[i], comp[i]);
        total += prod;
    }
    return total;
}

Rational convolve_linearized_exact(const std::vector<DirichletSeries>& Ds, long N_plus_1) {
    const size_t n = Ds.size();
    if (n < 2) throw ContractViolation("convolve_linearized: needs at least two series");
    Rational total = 0;
    for (size_t i = 0; i < n; ++i) {
        std::vector<DirichletSeries> others;
        for (size_t k = 0; k < n; ++k) {
            if (k != i) others.push_back(Ds[k]);
        }
        total += zeta_value_exact(modified_series_exact(Ds[i], others), N_plus_1);
    }
    return total;
}

DirichletSeries concatenate_exact(const DirichletSeries& A, const DirichletSeries& B) {
    require_exact(A, "concatenate_exact");
    require_exact(B, "concatenate_exact");
    std::vector<Rational> xs = A.exact_zeros, as = A.exact_weights;
    xs.insert(xs.end(), B.exact_zeros.begin(), B.exact_zeros.end());
    as.insert(as.end(), B.exact_weights.begin(), B.exact_weights.end());
    return DirichletSeries::finite(std::move(xs), std::move(as), A.name + "+" + B.name);
}

bool check_sum_to_product(const Rational& x, const Rational& y, const Rational& z) {
    if (x == 0 || y == 0 || z == 0) throw DomainError("check_sum_to_product: arguments must be nonzero");
    if (x == y || x == z || y == z) throw DomainError("check_sum_to_product: arguments must be distinct");
    const Rational lhs = (z / (y - z)) * (y / (x - y)) + (z / (x - z)) * (x / (y - x));
    const Rational rhs = (z / (y - z)) * (z / (x - z));
    return lhs == rhs;
}

bool check_composition_rule(const DirichletSeries& Dx, const DirichletSeries& Dy, const Rational& z) {
    require_exact(Dx, "check_composition_rule");
    require_exact(Dy, "check_composition_rule");
    const Rational lhs = psi_exact(modified_series_exact(Dx, {Dy}), z) + psi_exact(modified_series_exact(Dy, {Dx}), z);
    const Rational rhs = psi_exact(Dx, z) * psi_exact(Dy, z);
    return lhs == rhs;
}

bool check_partial_fraction(const std::vector<Rational>& xs, const Rational& z) {
    if (xs.empty()) throw DomainError("check_partial_fraction: empty zero list");
    std::set<Rational> seen;
    for (const auto& x : xs) {
        if (x == 0) throw DomainError("check_partial_fraction: zeros must be nonzero");
        if (!seen.insert(x).second) throw DomainError("check_partial_fraction: repeated zero " + to_string(x));
        if (x == z) throw PoleError("check_partial_fraction: z equals a zero");
    }
    Rational lhs = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        Rational term = z / (xs[i] - z);
        for (size_t k = 0; k < xs.size(); ++k) {
            if (k != i) term *= xs[i] / (xs[k] - xs[i]);
        }
        lhs += term;
    }
    Rational rhs = 1;
    for (const auto& x : xs) rhs *= z / (x - z);
    return lhs == rhs;
}

bool check_associativity(const DirichletSeries& Dx, const DirichletSeries& Dy, const DirichletSeries& Dz,
                         long N_plus_1) {
    // W = zeta_y * zeta_x linearized, as one series over the union of zeros
    const DirichletSeries W = concatenate_exact(modified_series_exact(Dy, {Dx}), modified_series_exact(Dx, {Dy}));
    const Rational nested = zeta_value_exact(modified_series_exact(Dz, {W}), N_plus_1) +
                            zeta_value_exact(modified_series_exact(W, {Dz}), N_plus_1);
    const Rational linear3 = convolve_linearized_exact({Dx, Dy, Dz}, N_plus_1);
    const Rational direct3 = convolve_direct_exact({Dx, Dy, Dz}, N_plus_1);
    return nested == linear3 && linear3 == direct3;
}

}  // namespace zc
