#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "zc/errors.hpp"
#include "zc/specfun.hpp"

using namespace zc;

namespace {
Real nu03() { return parse_decimal("0.3"); }
}  // namespace

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bernoulli_number(20) == Rational(-174611, 330));
}

TEST_CASE("Bernoulli and Euler polynomials") {
    CHECK(bernoulli_poly(2, Rational(1, 3)) == Rational(-1, 18));
    CHECK(bernoulli_poly(5, Rational(1, 3)) == Rational(-5, 243));
    CHECK(bernoulli_poly(4, Rational(1)) == bernoulli_number(4));
    CHECK(euler_poly(1, Rational(0)) == Rational(-1, 2));
    CHECK(euler_poly(5, Rational(1, 3)) == Rational(-121, 486));
    // E_n(x) + E_n(x+1) = 2 x^n
    for (long n = 0; n <= 8; ++n) {
        const Rational x(2, 7);
        Rational xn = 1;
        for (long k = 0; k < n; ++k) xn *= x;
        CHECK(euler_poly(n, x) + euler_poly(n, x + 1) == 2 * xn);
    }
    PrecisionScope s{PrecisionContext(40)};
    CHECK(agree_digits(bernoulli_poly(5, Real(Rational(1, 3))), Real(Rational(-5, 243)), 40));
}

TEST_CASE("zeta at integers") {
    CHECK(zeta_nonpositive(0) == Rational(-1, 2));
    CHECK(zeta_nonpositive(1) == Rational(-1, 12));
    CHECK(zeta_nonpositive(2) == Rational(0));
    CHECK(zeta_nonpositive(3) == Rational(1, 120));
    CHECK(zeta_even_rational(1) == Rational(1, 6));
    CHECK(zeta_even_rational(2) == Rational(1, 90));
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(zeta_int(3), oracle::zeta3, 50));
    CHECK(oracle::agrees(zeta_int(5), oracle::zeta5, 50));
    CHECK(agree_digits(zeta_int(4), pow(pi(), 4) / 90L, 50));
    CHECK(oracle::agrees(zeta_prime_int(2), oracle::zeta_prime2, 48));
    CHECK(oracle::agrees(zeta_prime_int(3), "-0.1981262428856368533306818215032857968755427934638350033469", 48));
}

TEST_CASE("Hurwitz zeta") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(hurwitz_zeta(3, Real(Rational(1, 3))), oracle::hurwitz3_third, 48));
    CHECK(oracle::agrees(hurwitz_zeta(4, parse_decimal("0.7")),
                         "4.31319161307128859437033796134844380410836220578583244868438", 48));
    CHECK(oracle::agrees(hurwitz_zeta_prime(3, Real(Rational(5, 2))), oracle::hurwitz_prime3_5half, 45));
    CHECK(agree_digits(hurwitz_zeta(5, Real(1L)), zeta_int(5), 50));
}

TEST_CASE("Hurwitz dissection of the Riemann zeta function") {
    PrecisionScope s{PrecisionContext(40)};
    for (long m : {2L, 3L, 5L}) {
        for (long sx : {2L, 3L, 6L}) {
            Real sum(0L);
            for (long r = 1; r <= m; ++r) sum += hurwitz_zeta(sx, Real(Rational(r, m)));
            CHECK(agree_digits(sum / pow(Real(m), sx), zeta_int(sx), 38));
        }
    }
}

TEST_CASE("digamma oracles") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(digamma(Complex(parse_decimal("0.5"), Real(2L))),
                         "0.6821866993494242681419403776088693203277796312817146661",
                         "1.57078537102397632450647692457838924904469602463842383", 48));
    CHECK(oracle::agrees(digamma(Complex(parse_decimal("-2.5"), parse_decimal("0.3"))),
                         "1.108003013475465571243071749259396810775163431705826393",
                         "2.214546064693218319946301213190423330534853956249254934", 48));
    CHECK(agree_digits(digamma(Complex(Real(1L))), Complex(-euler_gamma()), 50));
    CHECK_THROWS_AS(digamma(Complex(Real(-3L))), PoleError);
}

TEST_CASE("digamma reflection and recurrence at random points") {
    PrecisionScope s{PrecisionContext(40)};
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int k = 0; k < 10; ++k) {
        const Complex z(Real(u(rng)), Real(u(rng)));
        const Complex one(Real(1L));
        // psi(z + 1) = psi(z) + 1/z
        CHECK(agree_digits(digamma(z + 1L), digamma(z) + one / z, 36));
        // psi(1 - z) - psi(z) = pi cot(pi z)
        CHECK(agree_digits(digamma(one - z) - digamma(z), pi() * cot(pi() * z), 36));
    }
}

TEST_CASE("polylogarithm edge values") {
    PrecisionScope s{PrecisionContext(40)};
    CHECK(agree_digits(polylog_unit_circle(2, Real(0L)), Complex(zeta_int(2)), 38));
    CHECK(agree_digits(polylog_unit_circle(3, pi()), Complex(-zeta_int(3) * 3L / 4L), 38));
}

TEST_CASE("Bessel J and I") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(bessel_j(Real(0L), Real(1L)), oracle::j0_at_1, 48));
    CHECK(oracle::agrees(bessel_j(Real(Rational(5, 2)), Real(3L)),
                         "0.412710032209715993437496795941862714987261116245316225406614", 48));
    CHECK(oracle::agrees(bessel_i_ratio(parse_decimal("0.3"), Real(2L)), oracle::i_ratio_03_2, 48));
    CHECK(oracle::agrees(bessel_i_ratio(Real(1L), Complex(Real(1L), Real(2L))),
                         "0.7852430305217578671893118917037759328833980276954799688",
                         "-0.316990771395116209707065222304761737764453700293832778", 48));
    // Large arguments take the asymptotic branch.
    CHECK(oracle::agrees(bessel_i_ratio(nu03(), Real(100L)),
                         "0.997991918742054566331226863821927148682604718596552449588949", 48));
    CHECK(oracle::agrees(bessel_i_ratio(nu03(), Complex(Real(120L), Real(5L))),
                         "0.998330648723073007942985319827709133342693662257332661561334",
                         "0.0000697913037325010117138042550723182804749361306814578958588694", 48));
}

TEST_CASE("Bessel K0") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(bessel_k0(Complex(Real(1L))).re, oracle::k0_at_1, 48));
    CHECK(oracle::agrees(bessel_k0(Complex(Real(2L), Real(1L))),
                         "0.03798772291598645925495274330008729825900687337854410762",
                         "-0.1017135754613908733006948666713985147254521379477615476", 45));
    CHECK_THROWS_AS(bessel_k0(Complex(Real(-1L))), BranchError);
}

TEST_CASE("first zero of J0 against a bisection oracle") {
    PrecisionScope s{PrecisionContext(45)};
    Real lo(2L), hi(3L);
    const Real tol = pow10(-44);
    while (hi - lo > tol) {
        const Real mid = (lo + hi) / 2L;
        if (bessel_j(Real(0L), mid).sign() > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const Real z = bessel_zero(Real(0L), 1);
    CHECK(agree_digits(z, (lo + hi) / 2L, 40));
    CHECK(oracle::agrees(z, oracle::j0_zero1, 44));
}

TEST_CASE("Bessel zeros and roots of tan x = x") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(bessel_zero(Real(1L), 3), oracle::j1_zero3, 48));
    CHECK(oracle::agrees(bessel_zero(Real(Rational(5, 2)), 2), oracle::j5half_zero2, 48));
    CHECK(oracle::agrees(tanx_eq_x_root(1), oracle::tan_root1, 48));
    CHECK(oracle::agrees(tanx_eq_x_root(5), oracle::tan_root5, 48));
    const BesselZeroTable t = bessel_zero_table(Real(Rational(1, 2)), 30);
    REQUIRE(t.zeros.size() == 30);
    for (long n = 1; n <= 30; ++n) CHECK(agree_digits(t.zeros[n - 1], pi() * n, 48));
}

TEST_CASE("Rayleigh sums and zero tail sums") {
    PrecisionScope s{PrecisionContext(40)};
    // nu = 1/2: j_q = q pi, so sigma_n = zeta(2n) / pi^(2n).
    const std::vector<Real> r = rayleigh_sums(Real(Rational(1, 2)), 4);
    for (int n = 1; n <= 4; ++n) CHECK(agree_digits(r[n], zeta_int(2 * n) / pow(pi(), 2 * n), 38));
    // nu = 0: sigma_1 = 1/4, sigma_2 = 1/32.
    const std::vector<Real> r0 = rayleigh_sums(Real(0L), 2);
    CHECK(agree_digits(r0[1], Real(Rational(1, 4)), 38));
    CHECK(agree_digits(r0[2], Real(Rational(1, 32)), 38));
    // Tail sums at nu = 1/2 equal Hurwitz tails.
    const std::vector<Real> T = bessel_zero_tail_sums(Real(Rational(1, 2)), 20, 3, 5);
    for (long p = 3; p <= 5; ++p) {
        CHECK(agree_digits(T[p - 3], hurwitz_zeta(p, Real(21L)) / pow(pi(), p), 36));
    }
}

TEST_CASE("divisor functions") {
    CHECK(divisor_sigma(0, 12) == 6);
    CHECK(divisor_sigma(1, 12) == 28);
    CHECK(divisor_sigma(2, 10) == 130);
    const std::vector<Integer> t = divisor_sigma_table(1, 100);
    for (long n = 1; n <= 100; ++n) CHECK(t[n] == divisor_sigma(1, n));
}

TEST_CASE("divisor sums are multiplicative on coprime pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> u(1, 3000);
    int pairs = 0;
    while (pairs < 100) {
        const long m = u(rng), n = u(rng);
        if (std::gcd(m, n) != 1) continue;
        ++pairs;
        for (long s : {0L, 1L, 3L}) CHECK(divisor_sigma(s, m * n) == divisor_sigma(s, m) * divisor_sigma(s, n));
    }
    PrecisionScope s{PrecisionContext(30)};
    const std::vector<Real> tn = divisor_tau_neg_table(1, 12);
    CHECK(agree_digits(tn[12], Real(Rational(28, 12)), 30));
}

TEST_CASE("Koshliakov sum and kernel") {
    PrecisionScope s{PrecisionContext(30)};
    const Real x = koshliakov_cutoff() * Real(1.5);
    CHECK(agree_digits(koshliakov_sum(x, 0, true), koshliakov_sum(x, 0, false), 28));
    for (const char* xs : {"0.25", "1", "3"}) {
        const Real v = parse_decimal(xs);
        CHECK(agree_digits(koshliakov_omega(v, OmegaMethod::partial_fraction),
                           koshliakov_omega(v, OmegaMethod::bessel_k0), 25));
    }
}
