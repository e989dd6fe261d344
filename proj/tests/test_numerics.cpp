#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "zc/errors.hpp"
#include "zc/numerics.hpp"
#include "zc/specfun.hpp"

using namespace zc;

TEST_CASE("precision scopes nest and restore") {
    const PrecisionContext outer = current_context();
    {
        PrecisionScope a{PrecisionContext(60)};
        CHECK(current_context().decimal_digits == 60);
        {
            PrecisionScope b{PrecisionContext(15)};
            CHECK(current_context().decimal_digits == 15);
            CHECK(Real(1L).context().decimal_digits == 15);
        }
        CHECK(current_context().decimal_digits == 60);
    }
    CHECK(current_context() == outer);
    CHECK_THROWS_AS(PrecisionContext(5), ContractViolation);
}

TEST_CASE("pi and decimal rendering") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(pi(), oracle::pi, 50));
    CHECK(decimal_string(pi(), 10) == "3.141592654");
    CHECK(decimal_string(Real(Rational(1, 8)), 3) == "0.125");
}

TEST_CASE("decimal strings round-trip at full digits") {
    PrecisionScope s{PrecisionContext(40)};
    for (const Real& x : {pi(), Real(Rational(-1, 3)), exp(Real(100L)), exp(Real(-100L))}) {
        const std::string t = decimal_string(x, 40);
        CHECK(decimal_string(parse_decimal(t), 40) == t);
    }
}

TEST_CASE("cancellation-free elementary functions") {
    PrecisionScope s{PrecisionContext(50)};
    CHECK(oracle::agrees(expm1(parse_decimal("1e-20")), "1.000000000000000000005000000000000000000016666666666667e-20",
                         50));
    CHECK(oracle::agrees(log1p(parse_decimal("-1e-15")),
                         "-1.000000000000000500000000000000333333333333333583333333e-15", 50));
    CHECK(oracle::agrees(coth_minus_one(Complex(Real(2L), Real(1L))),
                         "-0.01567077354180897052811181831053555180609693493166954411",
                         "-0.03279775553375259406276454657658306293415802335493211557", 45));
}

TEST_CASE("polylogarithm on the unit circle") {
    PrecisionScope s{PrecisionContext(45)};
    CHECK(oracle::agrees(polylog_unit_circle(2, Real(1L)), "0.3241377400533298172410934750062737471203652015192455272",
                         "1.013959132360768504294574338885914687561179280077717317", 40));
    CHECK(oracle::agrees(polylog_unit_circle(3, parse_decimal("0.3")),
                         "1.080349993520963106772908470022303831171911687616151189",
                         "0.4250443853486975830763150738700187418712486588760996503", 40));
}

TEST_CASE("digits from relative differences") {
    PrecisionScope s{PrecisionContext(30)};
    CHECK(digits_from_relative(Real(0L), 30) == 30);
    CHECK(digits_from_relative(parse_decimal("3e-12"), 30) == 11);
    CHECK(digits_from_relative(parse_decimal("1e-80"), 30) == 30);
    CHECK(digits_from_relative(Real(5L), 30) == 0);
}

TEST_CASE("complex arithmetic basics") {
    PrecisionScope s{PrecisionContext(30)};
    const Complex z(Real(3L), Real(4L));
    CHECK(abs(z) == Real(5L));
    CHECK(agree_digits(z * conj(z), Complex(Real(25L)), 30));
    CHECK(agree_digits(exp(imag_unit(pi())), Complex(Real(-1L)), 30));
    CHECK(agree_digits(sqrt(Complex(Real(-4L))), imag_unit(Real(2L)), 30));
}
