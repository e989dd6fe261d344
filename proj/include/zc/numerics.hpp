#pragma once

// Arbitrary-precision substrate: binary big-floats (MPFR) with explicit
// precision contexts, exact rationals (GMP), and comparison utilities.
//
// Every Real produced by a constructor or by arithmetic takes the precision
// of the innermost PrecisionScope active on the calling thread. Copies keep
// the precision and context of their source. Rounding is always
// round-to-nearest-even (MPFR_RNDN).

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>

#include "zc/errors.hpp"

namespace zc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Requested output digits plus guard digits; fixes the working precision.
struct PrecisionContext {
    int decimal_digits = 30;
    int guard_digits = 20;

    PrecisionContext() = default;
    /// Throws ContractViolation unless digits >= 10 and guard >= 1.
    explicit PrecisionContext(int digits, int guard = 20);

    int working_digits() const { return decimal_digits + guard_digits; }
    mpfr_prec_t bits() const;
    /// Same requested digits with `extra` more guard digits.
    PrecisionContext with_extra_guard(int extra) const;

    bool operator==(const PrecisionContext&) const = default;
};

/// Context of the innermost active scope on this thread (default: 30+20).
const PrecisionContext& current_context();

/// RAII guard that makes `ctx` the working context for the current thread.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionContext& ctx);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    PrecisionContext saved_;
};

class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    explicit Real(double v);
    explicit Real(const Rational& q);
    explicit Real(const Integer& z);
    /// Rounds `x` into `ctx`.
    Real(const Real& x, const PrecisionContext& ctx);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    /// Parses a decimal literal ("1.25", "-3e-4") at the current precision.
    static Real parse(const std::string& text);

    const PrecisionContext& context() const { return ctx_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const;
    long to_long() const;  // truncates toward zero
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Base-2 exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
    long exponent2() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long o);
    Real& operator-=(long o);
    Real& operator*=(long o);
    Real& operator/=(long o);

private:
    void init_current();
    mpfr_t v_;
    PrecisionContext ctx_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, long b);
bool operator==(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real coth(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real gamma(const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real hypot(const Real& x, const Real& y);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
/// Copy of `x` rounded into the current context.
Real rounded(const Real& x);

/// Cached per precision; safe to call concurrently.
Real pi();
Real euler_gamma();
Real log2_const();
/// 10^e at the current precision.
Real pow10(long e);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(long r) : re(r), im(0L) {}
    Complex(const Real& r) : re(r), im(0L) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    const PrecisionContext& context() const { return re.context(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator+(long a, const Complex& b);
Complex operator-(long a, const Complex& b);
Complex operator*(long a, const Complex& b);
Complex operator/(long a, const Complex& b);

/// i·x
Complex imag_unit(const Real& x = Real(1L));
Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex expi(const Real& theta);  // e^{i theta}
Complex polar(const Real& r, const Real& theta);
Complex exp(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);
Complex pow(const Complex& z, const Real& a);  // principal branch
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex tan(const Complex& z);
Complex cot(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex tanh(const Complex& z);
Complex coth(const Complex& z);
/// coth(z) - 1 without cancellation; requires Re z > 0.
Complex coth_minus_one(const Complex& z);
Complex rounded(const Complex& z);

/// |a-b| <= 10^-d * max(1, |a|, |b|). Both values must carry the same
/// context and that context must request at least d digits.
bool agree_digits(const Complex& a, const Complex& b, int d);
bool agree_digits(const Real& a, const Real& b, int d);

/// Correctly rounded d-significant-digit rendering; d must not exceed the
/// context's requested digits. Fixed notation for moderate exponents,
/// otherwise "d.ddd...e±X".
std::string decimal_string(const Real& x, int d);
/// Inverse of decimal_string at the current precision.
Real parse_decimal(const std::string& text);

/// floor(-log10(r)) for r > 0, `cap` when r == 0.
int digits_from_relative(const Real& r, int cap);

std::string to_string(const Rational& q);
Rational make_rational(long p, long q = 1);

}  // namespace zc
