#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "zc/errors.hpp"
#include "zc/series.hpp"
#include "zc/specfun.hpp"

using namespace zc;

namespace {

DirichletSeries unit(std::vector<long> zeros, const std::string& name = "finite") {
    std::vector<Rational> xs, as;
    for (long x : zeros) {
        xs.emplace_back(x);
        as.emplace_back(1);
    }
    return DirichletSeries::finite(xs, as, name);
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    long p = 0;
    while (p == 0) p = num(rng);
    return Rational(p, den(rng));
}

std::vector<Rational> distinct_rationals(std::mt19937_64& rng, size_t n, const std::set<Rational>& avoid = {}) {
    std::set<Rational> seen = avoid;
    std::vector<Rational> out;
    while (out.size() < n) {
        const Rational r = random_rational(rng);
        if (seen.insert(r).second) out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("exact zeta values and convolutions") {
    CHECK(zeta_value_exact(unit({2, 3}), 2) == Rational(13, 36));
    const DirichletSeries x = unit({2}, "x"), y = unit({3}, "y"), z = unit({5}, "z");
    CHECK(convolve_direct_exact({x, y}, 3) == Rational(5, 36));
    CHECK(convolve_linearized_exact({x, y}, 3) == Rational(5, 36));
    CHECK(convolve_direct_exact({x, y, z}, 4) == convolve_linearized_exact({x, y, z}, 4));
    CHECK(compositions(3, 3, 1).size() == 1);
    CHECK(compositions(3, 4, 1).size() == 3);
    CHECK_THROWS_AS(convolve_linearized_exact({x, unit({2}, "x again")}, 3), PoleError);
}

TEST_CASE("modified weights in exact mode") {
    const DirichletSeries m = modified_series_exact(unit({2}), {unit({5})});
    REQUIRE(m.exact_weights.size() == 1);
    CHECK(m.exact_weights[0] == Rational(2, 3));
    const DirichletSeries same = modified_series_exact(unit({2, 3}), {});
    CHECK(same.exact_weights == unit({2, 3}).exact_weights);
    CHECK(psi_exact(unit({2, 3}), Rational(0)) == Rational(0));
    CHECK_THROWS_AS(psi_exact(unit({2, 3}), Rational(3)), PoleError);
}

TEST_CASE("sum to product identity") {
    CHECK(check_sum_to_product(Rational(2), Rational(3), Rational(1)));
    CHECK_THROWS_AS(check_sum_to_product(Rational(2), Rational(2), Rational(1)), DomainError);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
        const auto v = distinct_rationals(rng, 3);
        CHECK(check_sum_to_product(v[0], v[1], v[2]));
    }
}

TEST_CASE("composition rule") {
    CHECK(check_composition_rule(unit({2, 7}), unit({3, 5}), Rational(1)));
    const DirichletSeries empty = DirichletSeries::finite({}, {});
    CHECK(check_composition_rule(unit({2, 7}), empty, Rational(1)));
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<size_t> len(1, 4);
    for (int k = 0; k < 500; ++k) {
        const Rational z = random_rational(rng);
        const auto xs = distinct_rationals(rng, len(rng), {z});
        std::set<Rational> avoid(xs.begin(), xs.end());
        avoid.insert(z);
        const auto ys = distinct_rationals(rng, len(rng), avoid);
        std::vector<Rational> as, bs;
        for (size_t i = 0; i < xs.size(); ++i) as.push_back(random_rational(rng));
        for (size_t i = 0; i < ys.size(); ++i) bs.push_back(random_rational(rng));
        CHECK(check_composition_rule(DirichletSeries::finite(xs, as), DirichletSeries::finite(ys, bs), z));
    }
}

TEST_CASE("partial fraction decomposition") {
    CHECK(check_partial_fraction({Rational(2)}, Rational(7, 3)));
    CHECK(check_partial_fraction({Rational(2), Rational(3), Rational(5)}, Rational(1)));
    CHECK_THROWS_AS(check_partial_fraction({Rational(2), Rational(2)}, Rational(1)), DomainError);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<size_t> len(1, 6);
    for (int k = 0; k < 500; ++k) {
        const Rational z = random_rational(rng);
        CHECK(check_partial_fraction(distinct_rationals(rng, len(rng), {z}), z));
    }
}

TEST_CASE("associativity of nested linearizations") {
    CHECK(check_associativity(unit({2, 7}), unit({3}), unit({5, 11}), 4));
    CHECK(check_associativity(unit({2}), unit({3}), unit({5}), 5));
}

TEST_CASE("numeric zeta values") {
    const PrecisionContext ctx(30);
    PrecisionScope s{ctx};
    // x_n = n^2 pi^2 / beta: (beta / pi^2)^k zeta(2k)
    const Real beta(3L);
    for (long k = 1; k <= 3; ++k) {
        const SeriesValue v = zeta_value(cot_family(beta), k, ctx);
        CHECK(agree_digits(v.value, Complex(pow(beta / (pi() * pi()), k) * zeta_int(2 * k)), 28));
        CHECK_FALSE(v.flagged);
    }
    // x_n = n^2 (Hurwitz family at x = 1, lambda = 1): zeta(2)
    CHECK(agree_digits(zeta_value(hurwitz_family(Real(1L), Real(1L)), 1, ctx).value, Complex(zeta_int(2)), 28));
    // Finite numeric series
    const DirichletSeries f = DirichletSeries::finite_numeric({Complex(Real(2L)), Complex(Real(3L))},
                                                              {Complex(Real(1L)), Complex(Real(1L))});
    CHECK(agree_digits(zeta_value(f, 2, ctx).value, Complex(Real(Rational(13, 36))), 30));
}

TEST_CASE("generating function closed forms") {
    const PrecisionContext ctx(30);
    PrecisionScope s{ctx};
    const Real beta(2L);
    CHECK(agree_digits(psi(cot_family(beta), Complex(Real(0L)), ctx), Complex(Real(0L)), 30));
    const Complex quarter(pi() * pi() / (4L * beta));
    CHECK(agree_digits(psi(cot_family(beta), quarter, ctx), Complex(Real(Rational(1, 2))), 28));
    CHECK_THROWS_AS(psi(cot_family(beta), Complex(pi() * pi() / beta), ctx), PoleError);
}

TEST_CASE("closed-form and truncated generating functions agree") {
    const PrecisionContext ctx(25);
    PrecisionScope s{ctx};
    const Complex z(parse_decimal("0.3"), parse_decimal("0.2"));
    const std::vector<DirichletSeries> families = {
        cot_family(Real(2L)),
        coth_family(Real(3L)),
        hurwitz_family(Real(2L), parse_decimal("0.4")),
        bessel_family(Real(0L), Real(1L)),
        multisection_family(3),
        bernoulli_exp_family(Complex(Real(1L), Real(2L)), parse_decimal("0.3")),
    };
    for (const auto& D : families) {
        CAPTURE(D.name);
        CHECK(agree_digits(psi(D, z, ctx), psi_truncated(D, z, ctx, 400), 20));
    }
}

TEST_CASE("numeric convolution: direct and linearized agree") {
    const PrecisionContext ctx(30);
    PrecisionScope s{ctx};
    auto c = [](const char* re, const char* im) { return Complex(parse_decimal(re), parse_decimal(im)); };
    const DirichletSeries a = DirichletSeries::finite_numeric({c("2", "1"), c("-3", "0.5"), c("1.5", "-2")},
                                                              {c("1", "0"), c("0.5", "0.5"), c("-2", "1")});
    const DirichletSeries b = DirichletSeries::finite_numeric({c("4", "0"), c("0.7", "3")}, {c("1", "-1"), c("3", "0")});
    const DirichletSeries d = DirichletSeries::finite_numeric({c("-1", "-1")}, {c("2", "0")});
    for (long N1 : {2L, 3L, 5L}) {
        CHECK(agree_digits(convolve_direct({a, b}, N1, ctx), convolve_linearized({a, b}, N1, ctx), 28));
        CHECK(agree_digits(convolve_direct({a, b, d}, N1 + 1, ctx), convolve_linearized({a, b, d}, N1 + 1, ctx), 28));
    }
}

TEST_CASE("closed-form tags are named") {
    CHECK(to_string(ClosedFormTag::Kind::cot_form) == "cot_form");
    CHECK(to_string(ClosedFormTag::Kind::multisection_form) == "multisection_form");
}
