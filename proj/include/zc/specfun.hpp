#pragma once

// Special and arithmetic functions used by the identity verifiers.
//
// All functions evaluate at the current PrecisionScope and return values
// rounded into it; internal work is done with extra guard digits where
// cancellation is expected.

#include <vector>

#include "zc/numerics.hpp"

namespace zc {

// ------------------------------------------------------------ Bernoulli / Euler

/// Exact B_n (B_1 = -1/2). Memoized; thread safe.
Rational bernoulli_number(long n);
/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_poly(long n, const Rational& x);
Real bernoulli_poly(long n, const Real& x);
/// E_n(x) from the generating function 2 e^(xz) / (e^z + 1).
Rational euler_poly(long n, const Rational& x);
Real euler_poly(long n, const Real& x);
/// Exact zeta(-n) for n >= 0.
Rational zeta_nonpositive(long n);
/// Exact rational r with zeta(2k) = r * pi^(2k), k >= 1.
Rational zeta_even_rational(long k);

// ------------------------------------------------------------ zeta family

/// zeta(s) for integer s >= 2. Cached per (s, precision).
Real zeta_int(long s);
/// zeta'(s) for integer s >= 2.
Real zeta_prime_int(long s);
/// zeta_H(s; x) = sum_{p>=0} (p+x)^(-s) for integer s >= 2, x > 0.
Real hurwitz_zeta(long s, const Real& x);
/// d/ds zeta_H(s; x) at integer s >= 2, x > 0.
Real hurwitz_zeta_prime(long s, const Real& x);
/// Complex digamma function; PoleError at nonpositive integers.
Complex digamma(const Complex& z);
/// Li_s(e^(i theta)) for integer s >= 1 and real theta.
Complex polylog_unit_circle(long s, const Real& theta);

// ------------------------------------------------------------ Bessel

/// J_nu(z) by power series. RangeError when |z| exceeds the series bound.
Complex bessel_j(const Real& nu, const Complex& z);
Real bessel_j(const Real& nu, const Real& x);
/// I_nu(z) by power series.
Complex bessel_i(const Real& nu, const Complex& z);
/// I_(nu-1)(z) / I_nu(z); continued fraction, or the Hankel expansion for
/// large Re z. Requires nu > -1 and z != 0.
Complex bessel_i_ratio(const Real& nu, const Complex& z);
Real bessel_i_ratio(const Real& nu, const Real& x);
/// Real argument above which bessel_i_ratio switches to the asymptotic form.
Real bessel_i_ratio_asymptotic_threshold();
/// Coefficients r_k with I_(nu-1)(t)/I_nu(t) ~ sum_k r_k t^(-k), k = 0..K.
std::vector<Real> bessel_i_ratio_asymptotic_coefficients(const Real& nu, int K);
/// K_0(z), principal branch. BranchError on the negative real axis.
Complex bessel_k0(const Complex& z);

struct BesselZeroTable {
    Real order;
    std::vector<Real> zeros;  // zeros[i] = j_{nu, i+1}
};

/// n-th positive zero of J_nu, nu > -1. Newton from the McMahon guess.
Real bessel_zero(const Real& nu, long n);
/// First `count` positive zeros of J_nu (cached).
BesselZeroTable bessel_zero_table(const Real& nu, long count);
/// sum_{q>Q} j_{nu,q}^(-p) for p = p_min..p_max, via the McMahon expansion
/// of the zeros summed against Hurwitz zeta values. Requires Q >= 20.
std::vector<Real> bessel_zero_tail_sums(const Real& nu, long Q, long p_min, long p_max);
/// Rayleigh sums sigma_n = sum_q j_{nu,q}^(-2n), n = 1..nmax (index 0 unused).
std::vector<Real> rayleigh_sums(const Real& nu, int nmax);
/// n-th positive root of tan x = x.
Real tanx_eq_x_root(long n);

// ------------------------------------------------------------ divisor sums

/// sigma_s(n) = sum_{d | n} d^s, exact, by trial division.
Integer divisor_sigma(long s, long n);
/// sigma_s(n) for n = 1..M by a sieve (index 0 unused).
std::vector<Integer> divisor_sigma_table(long s, long M);
/// tau_(-c)(n) = sigma_c(n) / n^c for n = 1..M (index 0 unused).
std::vector<Real> divisor_tau_neg_table(long c, long M);

/// S_c(x) = sum_n tau_(-c)(n) / (n^2 + x^2), x > 0, c >= 0. Above
/// koshliakov_cutoff() even c use the closed asymptotic form, whose
/// remainder is below 10^-(digits+5).
Real koshliakov_sum(const Real& x, long c = 0, bool allow_asymptotic = true);
/// Argument above which koshliakov_sum switches to its asymptotic form.
Real koshliakov_cutoff();

enum class OmegaMethod { partial_fraction, bessel_k0 };

/// Koshliakov kernel Omega(x), x > 0.
Real koshliakov_omega(const Real& x, OmegaMethod method);

}  // namespace zc
