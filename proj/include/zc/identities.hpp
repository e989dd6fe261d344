#pragma once

// Verifiers for the convolution identities. Each evaluates both sides at the
// context's precision and returns a finalized VerificationReport.
// M = 0 selects the truncation automatically; otherwise it is the number of
// terms summed directly before the analytic tail completion.

#include <string>
#include <vector>

#include "zc/numerics.hpp"
#include "zc/report.hpp"

namespace zc {

// ------------------------------------------------------------ Lambert-type

/// sum_{m>=1} m^(-s) / (e^{2 t m} - 1), t > 0 (s may be negative).
Real lambert_sum(long s, const Real& t, long* terms = nullptr);
/// 2^(2n) sum_{k=0}^{n+1} (-1)^(k-1) B_2k B_{2n-2k+2} / ((2k)! (2n-2k+2)!), the
/// coefficient of pi^(2n+1) in the Lerch formula (7/180 for n = 1).
Rational lerch_coefficient(long n);

VerificationReport verify_ramanujan_classic(long n, const Real& alpha, const PrecisionContext& ctx, long M = 0);
VerificationReport verify_lerch(long n, const PrecisionContext& ctx, long M = 0);
VerificationReport verify_ramanujan_zeta_form(long n, const Real& alpha, const PrecisionContext& ctx, long M = 0);
VerificationReport verify_generalized_ramanujan(long N, const Real& alpha, const Real& beta,
                                                const PrecisionContext& ctx, long M = 0);
VerificationReport verify_eta_invariance(const Real& alpha, const PrecisionContext& ctx, long M = 0);
VerificationReport verify_herglotz(long m, const Real& alpha, const PrecisionContext& ctx, long M = 0);

// ------------------------------------------------------------ Bernoulli / Euler

VerificationReport verify_bernoulli_convolution(long N, const std::vector<Complex>& omega,
                                                const std::vector<Real>& y, const PrecisionContext& ctx,
                                                long M = 0);
/// With `quadrature`, also integrates the Bernoulli identity's exponential
/// side over y_i in [x_i, x_i + 1/2] (Gauss-Legendre) and compares.
VerificationReport verify_euler_convolution(long N, const std::vector<Complex>& omega, const std::vector<Real>& x,
                                            const PrecisionContext& ctx, long M = 0, bool quadrature = false);

/// Exponential side of the Bernoulli identity with exponent `E` and ratio
/// convention omega_j/omega_i (`ji` true) or omega_i/omega_j. `scale`
/// receives the summed magnitude of the terms.
Complex bernoulli_exponential_side(long E, bool ji, const std::vector<Complex>& omega, const std::vector<Real>& y,
                                   long* terms = nullptr, Real* scale = nullptr);
/// Bernoulli-polynomial side: sum over compositions k_i >= 0 of N+1 of
/// prod omega_i^(k_i - 1) B_{k_i}(y_i) / k_i!.
Complex bernoulli_polynomial_side(long N, const std::vector<Complex>& omega, const std::vector<Real>& y,
                                  Real* scale = nullptr);

// ------------------------------------------------------------ divisor sums

enum class ShiftConvention {
    reciprocal,  // zeta(2k + c) with tau_{-c}
    printed,     // zeta(2k - c) with tau_c
};

VerificationReport verify_zeta_square(long N, const Real& alpha, const Real& beta, const PrecisionContext& ctx,
                                      long M = 0);
VerificationReport verify_shifted_zeta(long N, long c, long d, const Real& alpha, const Real& beta,
                                       const PrecisionContext& ctx, long M = 0,
                                       ShiftConvention convention = ShiftConvention::reciprocal);
VerificationReport verify_dixit_gupta_equivalence(long N, const Real& alpha, const PrecisionContext& ctx,
                                                  long M = 0);
/// sum tau_0(n) n^-s = zeta(s)^2 (hyperbola tail completion).
VerificationReport verify_tau_dirichlet_lemma(long s, const PrecisionContext& ctx, long M = 0);
/// sum tau_0(n) log n n^-s = -2 zeta(s) zeta'(s).
VerificationReport verify_tau_log_lemma(long s, const PrecisionContext& ctx, long M = 0);
/// Partial-fraction and K_0 representations of the Koshliakov kernel.
VerificationReport verify_koshliakov_kernel(const Real& x, const PrecisionContext& ctx);

/// sum_n tau_{-c}(n) n^(-2N) S_d(lambda n) with the large-n tail in closed
/// form; S_d(x) = sum_m tau_{-d}(m) / (m^2 + x^2). `M` is raised if needed so
/// that lambda (M + 1) exceeds the asymptotic cutoff.
Real divisor_outer_sum(long c, long d, const Real& lambda, long N, long& M);

// ------------------------------------------------------------ Bessel / Hurwitz / multisection

VerificationReport verify_bessel_zeta(long N, const Real& nu, const Real& alpha, const Real& beta,
                                      const PrecisionContext& ctx, long M = 0);
VerificationReport verify_hurwitz(long N, const Real& x, const Real& y, const Real& alpha, const Real& beta,
                                  const PrecisionContext& ctx, long M = 0);
VerificationReport verify_multisection_lemma(long m, const Complex& z, const PrecisionContext& ctx, long M = 0);
VerificationReport verify_multisection(long N, long m, const Real& alpha, const Real& beta,
                                       const PrecisionContext& ctx, long M = 0);

// ------------------------------------------------------------ master theorem

/// `count` random finite exact instances (n in {2,3,4}, <= 4 zeros each,
/// N+1 <= 6); direct and linearized convolutions must agree exactly.
VerificationReport verify_master_theorem_exact(unsigned long seed, long count, const PrecisionContext& ctx);

}  // namespace zc
