#pragma once

// Dirichlet series zeta_{x,a}(N) = sum_n a_n / x_n^N given by zeros x_n and
// weights a_n, their generating functions psi_{x,a}(z) = sum_n a_n z/(x_n - z),
// modified weights, and n-fold convolutions with their linearization.
//
// Two modes: numeric (infinite sequences given by providers, truncated with
// tail hooks) and exact (finite sequences of rationals).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zc/numerics.hpp"

namespace zc {

enum class IndexSet { naturals, nonzero_integers, natural_pairs };

/// Analytic expression for psi, one per family.
struct ClosedFormTag {
    enum class Kind {
        cot_form,            // x_n = n^2 pi^2 / beta:   (1 - sqrt(beta z) cot sqrt(beta z)) / 2
        coth_form,           // x_n = -n^2 pi^2 / alpha: (1 - sqrt(alpha z) coth sqrt(alpha z)) / 2
        bernoulli_exp_form,  // x_m = 2 pi i m / w, a_m = e^{2 pi i m y}: 1 - w z e^{w z y}/(e^{w z} - 1)
        digamma_pair_form,   // x_n = lambda (n-1+x)^2: (s/2)(psi(x+s) - psi(x-s)), s = sqrt(z/lambda)
        bessel_ratio_form,   // x_n = j_{nu,n}^2 / lambda: (w/2) J_{nu+1}(w)/J_nu(w), w = sqrt(lambda z)
        divisor_cot_form,    // x_{p,q} = -p^2 q^2 / alpha^2: -X^2 S_0(X), X = alpha sqrt(z)
        multisection_form,   // x_p = p^(2m), a_p = -p^(m-1): (pi s^m / 2m) sum_j (-1)^j cot(pi s e^{i j pi/m})
                             //   - [m = 1]/2, s = z^(1/(2m))
    };
    Kind kind;
    std::vector<Complex> parameters;
};

std::string to_string(ClosedFormTag::Kind kind);

/// Evaluates the closed form of `tag` at z. Throws DomainError where the
/// expression is not implemented for the argument (e.g. divisor form off the
/// positive axis).
Complex closed_form_psi(const ClosedFormTag& tag, const Complex& z);

struct DirichletSeries {
    using Provider = std::function<Complex(long, long)>;
    using TailHook = std::function<Complex(long N, long M)>;

    std::string name;
    IndexSet index_set = IndexSet::naturals;
    Provider zero;    // (n, m) -> x; m is used only for natural_pairs
    Provider weight;  // (n, m) -> a
    std::optional<ClosedFormTag> psi_closed_form;
    /// sum over indices beyond the truncation M of a_n x_n^(-N).
    TailHook tail;

    long length = -1;  // number of indices for finite numeric series, -1 if infinite

    bool exact = false;
    std::vector<Rational> exact_zeros;
    std::vector<Rational> exact_weights;

    /// Finite exact series; zeros must be nonzero.
    static DirichletSeries finite(std::vector<Rational> zeros, std::vector<Rational> weights,
                                  std::string name = "finite");
    /// Finite numeric series (exact == false, naturals over the listed entries).
    static DirichletSeries finite_numeric(std::vector<Complex> zeros, std::vector<Complex> weights,
                                          std::string name = "finite");
    /// Number of indices for finite series, 0 for infinite ones.
    long finite_length() const;
    bool is_finite() const { return exact || length >= 0; }
};

// ------------------------------------------------------------ families

/// x_n = n^2 pi^2 / beta, a_n = 1 (zeta_x(N) = (beta/pi^2)^N zeta(2N)).
DirichletSeries cot_family(const Real& beta);
/// x_n = -n^2 pi^2 / alpha, a_n = 1.
DirichletSeries coth_family(const Real& alpha);
/// x_m = 2 pi i m / omega, a_m = e^{2 pi i m y}, m != 0.
DirichletSeries bernoulli_exp_family(const Complex& omega, const Real& y);
/// x_n = lambda (n - 1 + x)^2, n >= 1 (Hurwitz zeta in the variable 2N).
DirichletSeries hurwitz_family(const Real& lambda, const Real& x);
/// x_n = j_{nu,n}^2 / lambda.
DirichletSeries bessel_family(const Real& nu, const Real& lambda);
/// x_{p,q} = -p^2 q^2 / alpha^2 over natural pairs.
DirichletSeries divisor_family(const Real& alpha);
/// x_p = p^(2m), a_p = -p^(m-1), m odd.
DirichletSeries multisection_family(long m);

// ------------------------------------------------------------ evaluation

struct SeriesValue {
    Complex value;
    Real tail_estimate;
    long terms = 0;
    bool flagged = false;  // tail estimate above 10^-digits
};

/// zeta_{x,a}(N). M = 0 selects the doubling policy (64, 128, ... up to 2^20).
SeriesValue zeta_value(const DirichletSeries& D, long N, const PrecisionContext& ctx, long M = 0);
/// psi_{x,a}(z); closed form when tagged, else truncated sum plus tail hooks.
Complex psi(const DirichletSeries& D, const Complex& z, const PrecisionContext& ctx, long M = 0);
/// Truncated path only (ignores the closed form).
Complex psi_truncated(const DirichletSeries& D, const Complex& z, const PrecisionContext& ctx, long M);

/// Weights a_n * prod_k psi_{factor_k}(x_n), same zeros. `tail` becomes the
/// tail hook of the result (the modified weights have no generic tail).
DirichletSeries modified_series(const DirichletSeries& D, const std::vector<DirichletSeries>& factors,
                                const PrecisionContext& ctx, long M = 0,
                                DirichletSeries::TailHook tail = {});

/// sum over compositions k_1 + ... + k_n = N+1, k_i >= 1, of prod zeta_i(k_i).
Complex convolve_direct(const std::vector<DirichletSeries>& Ds, long N_plus_1, const PrecisionContext& ctx,
                        long M = 0);
/// sum_i zeta_{x^(i), a^(i) prod_{k != i} psi_{x^(k)}}(N+1). `tails[i]`, when
/// given, is the tail hook of the i-th modified series.
Complex convolve_linearized(const std::vector<DirichletSeries>& Ds, long N_plus_1,
                            const PrecisionContext& ctx, long M = 0,
                            const std::vector<DirichletSeries::TailHook>& tails = {});

// ------------------------------------------------------------ exact mode

Rational zeta_value_exact(const DirichletSeries& D, long N);
Rational psi_exact(const DirichletSeries& D, const Rational& z);
DirichletSeries modified_series_exact(const DirichletSeries& D, const std::vector<DirichletSeries>& factors);
Rational convolve_direct_exact(const std::vector<DirichletSeries>& Ds, long N_plus_1);
Rational convolve_linearized_exact(const std::vector<DirichletSeries>& Ds, long N_plus_1);
/// Concatenation of finite exact series (sum of the two Dirichlet series).
DirichletSeries concatenate_exact(const DirichletSeries& A, const DirichletSeries& B);

/// All compositions of `total` into `parts` parts, each >= lo.
std::vector<std::vector<long>> compositions(long parts, long total, long lo);

/// (z/(y-z))(y/(x-y)) + (z/(x-z))(x/(y-x)) == (z/(y-z))(z/(x-z)).
bool check_sum_to_product(const Rational& x, const Rational& y, const Rational& z);
/// psi_{x, a psi_y}(z) + psi_{y, b psi_x}(z) == psi_{x,a}(z) psi_{y,b}(z).
bool check_composition_rule(const DirichletSeries& Dx, const DirichletSeries& Dy, const Rational& z);
/// sum_i (z/(x_i - z)) prod_{k != i} x_i/(x_k - x_i) == prod_l z/(x_l - z).
bool check_partial_fraction(const std::vector<Rational>& xs, const Rational& z);
/// Two nested n=2 linearizations of zeta_z * (zeta_y * zeta_x) equal the
/// direct n=3 linearization (and the direct convolution).
bool check_associativity(const DirichletSeries& Dx, const DirichletSeries& Dy, const DirichletSeries& Dz,
                         long N_plus_1);

}  // namespace zc
