#include "zc/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace zc {

namespace {

constexpr mpfr_rnd_t RND = MPFR_RNDN;

thread_local PrecisionContext tl_context{};

}  // namespace

// ---------------------------------------------------------------- contexts

PrecisionContext::PrecisionContext(int digits, int guard)
    : decimal_digits(digits), guard_digits(guard) {
    if (digits < 10) {
        throw ContractViolation("PrecisionContext: decimal_digits must be >= 10, got " +
                                std::to_string(digits));
    }
    if (guard < 1) {
        throw ContractViolation("PrecisionContext: guard_digits must be >= 1, got " +
                                std::to_string(guard));
    }
}

mpfr_prec_t PrecisionContext::bits() const {
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 4;
}

PrecisionContext PrecisionContext::with_extra_guard(int extra) const {
    PrecisionContext c = *this;
    c.guard_digits += extra;
    return c;
}

const PrecisionContext& current_context() { return tl_context; }

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : saved_(tl_context) {
    tl_context = ctx;
}

PrecisionScope::~PrecisionScope() { tl_context = saved_; }

// ---------------------------------------------------------------- Real

void Real::init_current() {
    ctx_ = tl_context;
    mpfr_init2(v_, ctx_.bits());
}

Real::Real() {
    init_current();
    mpfr_set_zero(v_, 1);
}

Real::Real(int v) {
    init_current();
    mpfr_set_si(v_, v, RND);
}

Real::Real(long v) {
    init_current();
    mpfr_set_si(v_, v, RND);
}

Real::Real(unsigned long v) {
    init_current();
    mpfr_set_ui(v_, v, RND);
}

Real::Real(double v) {
    init_current();
    mpfr_set_d(v_, v, RND);
}

Real::Real(const Rational& q) {
    init_current();
    mpfr_set_q(v_, q.backend().data(), RND);
}

Real::Real(const Integer& z) {
    init_current();
    mpfr_set_z(v_, z.backend().data(), RND);
}

Real::Real(const Real& x, const PrecisionContext& ctx) : ctx_(ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set(v_, x.v_, RND);
}

Real::Real(const Real& o) : ctx_(o.ctx_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, RND);
}

Real::Real(Real&& o) noexcept : ctx_(o.ctx_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        ctx_ = o.ctx_;
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, RND);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        std::swap(ctx_, o.ctx_);
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(const std::string& text) { return parse_decimal(text); }

double Real::to_double() const { return mpfr_get_d(v_, RND); }

long Real::to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }

long Real::exponent2() const {
    if (mpfr_zero_p(v_)) return -(1L << 40);
    return static_cast<long>(mpfr_get_exp(v_));
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, RND);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, RND);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, RND);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, RND);
    return *this;
}
Real& Real::operator+=(long o) {
    mpfr_add_si(v_, v_, o, RND);
    return *this;
}
Real& Real::operator-=(long o) {
    mpfr_sub_si(v_, v_, o, RND);
    return *this;
}
Real& Real::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, RND);
    return *this;
}
Real& Real::operator/=(long o) {
    mpfr_div_si(v_, v_, o, RND);
    return *this;
}

#define ZC_BINARY(op, fn)                                  \
    Real operator op(const Real& a, const Real& b) {       \
        Real r;                                            \
        fn(r.raw(), a.raw(), b.raw(), RND);                \
        return r;                                          \
    }
ZC_BINARY(+, mpfr_add)
ZC_BINARY(-, mpfr_sub)
ZC_BINARY(*, mpfr_mul)
ZC_BINARY(/, mpfr_div)
#undef ZC_BINARY

#define ZC_BINARY_SI(op, fn)                               \
    Real operator op(const Real& a, long b) {              \
        Real r;                                            \
        fn(r.raw(), a.raw(), b, RND);                      \
        return r;                                          \
    }
ZC_BINARY_SI(+, mpfr_add_si)
ZC_BINARY_SI(-, mpfr_sub_si)
ZC_BINARY_SI(*, mpfr_mul_si)
ZC_BINARY_SI(/, mpfr_div_si)
#undef ZC_BINARY_SI

Real operator+(long a, const Real& b) { return b + a; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator-(long a, const Real& b) {
    Real r;
    mpfr_si_sub(r.raw(), a, b.raw(), RND);
    return r;
}
Real operator/(long a, const Real& b) {
    Real r;
    mpfr_si_div(r.raw(), a, b.raw(), RND);
    return r;
}

Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.raw(), a.raw(), RND);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.raw(), b.raw());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const Real& a, long b) {
    if (mpfr_nan_p(a.raw())) return std::partial_ordering::unordered;
    int c = mpfr_cmp_si(a.raw(), b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) {
    return !mpfr_nan_p(a.raw()) && mpfr_cmp_si(a.raw(), b) == 0;
}

#define ZC_UNARY(name, fn)              \
    Real name(const Real& x) {          \
        Real r;                         \
        fn(r.raw(), x.raw(), RND);      \
        return r;                       \
    }
ZC_UNARY(abs, mpfr_abs)
ZC_UNARY(sqrt, mpfr_sqrt)
ZC_UNARY(exp, mpfr_exp)
ZC_UNARY(expm1, mpfr_expm1)
ZC_UNARY(log, mpfr_log)
ZC_UNARY(log1p, mpfr_log1p)
ZC_UNARY(sin, mpfr_sin)
ZC_UNARY(cos, mpfr_cos)
ZC_UNARY(tan, mpfr_tan)
ZC_UNARY(cot, mpfr_cot)
ZC_UNARY(sinh, mpfr_sinh)
ZC_UNARY(cosh, mpfr_cosh)
ZC_UNARY(tanh, mpfr_tanh)
ZC_UNARY(coth, mpfr_coth)
ZC_UNARY(atan, mpfr_atan)
ZC_UNARY(gamma, mpfr_gamma)
#undef ZC_UNARY

Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real ceil(const Real& x) {
    Real r;
    mpfr_ceil(r.raw(), x.raw());
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r;
    mpfr_pow(r.raw(), x.raw(), y.raw(), RND);
    return r;
}

Real pow(const Real& x, long n) {
    Real r;
    mpfr_pow_si(r.raw(), x.raw(), n, RND);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.raw(), y.raw(), x.raw(), RND);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r;
    mpfr_hypot(r.raw(), x.raw(), y.raw(), RND);
    return r;
}

Real ldexp(const Real& x, long e) {
    Real r;
    mpfr_mul_2si(r.raw(), x.raw(), e, RND);
    return r;
}

Real min(const Real& a, const Real& b) { return (b < a) ? rounded(b) : rounded(a); }
Real max(const Real& a, const Real& b) { return (a < b) ? rounded(b) : rounded(a); }

Real rounded(const Real& x) { return Real(x, current_context()); }

// ---------------------------------------------------------------- constants

namespace {

using ConstFn = int (*)(mpfr_ptr, mpfr_rnd_t);

Real cached_constant(std::map<mpfr_prec_t, Real>& cache, std::mutex& mu, ConstFn fn) {
    const mpfr_prec_t bits = current_context().bits();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it == cache.end()) {
        Real v;
        fn(v.raw(), RND);
        it = cache.emplace(bits, std::move(v)).first;
    }
    return rounded(it->second);
}

}  // namespace

Real pi() {
    static std::map<mpfr_prec_t, Real> cache;
    static std::mutex mu;
    return cached_constant(cache, mu, mpfr_const_pi);
}

Real euler_gamma() {
    static std::map<mpfr_prec_t, Real> cache;
    static std::mutex mu;
    return cached_constant(cache, mu, mpfr_const_euler);
}

Real log2_const() {
    static std::map<mpfr_prec_t, Real> cache;
    static std::mutex mu;
    return cached_constant(cache, mu, mpfr_const_log2);
}

Real pow10(long e) {
    Real r;
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), RND);
    if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), RND);
    return r;
}

// ---------------------------------------------------------------- Complex

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}
Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
Complex& Complex::operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    *this = *this / o;
    return *this;
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
    if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex operator+(const Complex& a, const Real& b) { return {a.re + b, rounded(a.im)}; }
Complex operator-(const Complex& a, const Real& b) { return {a.re - b, rounded(a.im)}; }
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator+(const Real& a, const Complex& b) { return {a + b.re, rounded(b.im)}; }
Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
Complex operator+(const Complex& a, long b) { return {a.re + b, rounded(a.im)}; }
Complex operator-(const Complex& a, long b) { return {a.re - b, rounded(a.im)}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
Complex operator+(long a, const Complex& b) { return b + a; }
Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator/(long a, const Complex& b) { return Complex(Real(a)) / b; }

Complex imag_unit(const Real& x) { return {Real(0L), rounded(x)}; }
Complex conj(const Complex& z) { return {rounded(z.re), -z.im}; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex expi(const Real& theta) {
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), RND);
    return {c, s};
}

Complex polar(const Real& r, const Real& theta) { return expi(theta) * r; }

Complex exp(const Complex& z) { return expi(z.im) * exp(z.re); }

Complex log(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) throw PoleError("log: argument is zero");
    return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return {sqrt(z.re), Real(0L)};
        return {Real(0L), sqrt(-z.re)};
    }
    Real r = abs(z);
    if (z.re.sign() >= 0) {
        Real t = sqrt((r + z.re) / 2L);
        return {t, z.im / (2L * t)};
    }
    Real t = sqrt((r - z.re) / 2L);
    Real u = abs(z.im) / (2L * t);
    return {u, z.im.sign() < 0 ? -t : t};
}

Complex pow(const Complex& z, long n) {
    if (n < 0) return Complex(1L) / pow(z, -n);
    Complex result(1L);
    Complex base = z;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Complex pow(const Complex& z, const Real& a) {
    if (z.re.is_zero() && z.im.is_zero()) {
        if (a.sign() > 0) return Complex(0L);
        throw PoleError("pow: zero base with nonpositive exponent");
    }
    return exp(log(z) * a);
}

Complex sin(const Complex& z) {
    Real s, c, sh, ch;
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), RND);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), RND);
    return {s * ch, c * sh};
}

Complex cos(const Complex& z) {
    Real s, c, sh, ch;
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), RND);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), RND);
    return {c * ch, -(s * sh)};
}

Complex sinh(const Complex& z) {
    Real s, c, sh, ch;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), RND);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.re.raw(), RND);
    return {sh * c, ch * s};
}

Complex cosh(const Complex& z) {
    Real s, c, sh, ch;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), RND);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.re.raw(), RND);
    return {ch * c, sh * s};
}

Complex tan(const Complex& z) { return sin(z) / cos(z); }

Complex cot(const Complex& z) {
    // cot(z) = i coth(i z)
    Complex iz{-z.im, rounded(z.re)};
    Complex c = coth(iz);
    return {-c.im, rounded(c.re)};
}

Complex tanh(const Complex& z) { return Complex(1L) / coth(z); }

Complex coth(const Complex& z) {
    if (z.re.sign() > 0) return coth_minus_one(z) + 1L;
    if (z.re.sign() < 0) return -(coth_minus_one(-z) + 1L);
    if (z.im.is_zero()) throw PoleError("coth: pole at 0");
    // purely imaginary: coth(iy) = -i cot(y)
    Real c = cot(z.im);
    if (!c.is_finite()) throw PoleError("coth: pole on the imaginary axis");
    return {Real(0L), -c};
}

Complex coth_minus_one(const Complex& z) {
    if (z.re.sign() <= 0) throw DomainError("coth_minus_one: requires Re z > 0");
    Complex q = exp(-2L * z);  // |q| < 1
    Complex den = 1L - q;
    if (den.re.is_zero() && den.im.is_zero()) throw PoleError("coth: pole");
    return (q * 2L) / den;
}

Complex rounded(const Complex& z) { return {rounded(z.re), rounded(z.im)}; }

// ---------------------------------------------------------------- comparison & text

bool agree_digits(const Complex& a, const Complex& b, int d) {
    if (!(a.re.context() == a.im.context()) || !(b.re.context() == b.im.context())) {
        throw ContractViolation("agree_digits: complex parts carry different contexts");
    }
    if (!(a.context() == b.context())) {
        throw ContractViolation("agree_digits: mismatched precision contexts");
    }
    if (d < 1 || d > a.context().decimal_digits) {
        throw ContractViolation("agree_digits: d=" + std::to_string(d) +
                                " exceeds the context's decimal_digits=" +
                                std::to_string(a.context().decimal_digits));
    }
    PrecisionScope scope(a.context());
    Real diff = abs(a - b);
    Real scale = max(Real(1L), max(abs(a), abs(b)));
    return diff <= pow10(-d) * scale;
}

bool agree_digits(const Real& a, const Real& b, int d) {
    return agree_digits(Complex(a, Real(0L, a.context())), Complex(b, Real(0L, b.context())), d);
}

std::string decimal_string(const Real& x, int d) {
    if (d < 1 || d > x.context().decimal_digits) {
        throw ContractViolation("decimal_string: d=" + std::to_string(d) +
                                " exceeds the context's decimal_digits=" +
                                std::to_string(x.context().decimal_digits));
    }
    if (!x.is_finite()) {
        if (mpfr_nan_p(x.raw())) return "nan";
        return x.sign() < 0 ? "-inf" : "inf";
    }
    if (x.is_zero()) {
        return d == 1 ? std::string("0") : "0." + std::string(static_cast<size_t>(d - 1), '0');
    }
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(d), x.raw(), RND);
    std::string s(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!s.empty() && s[0] == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    // value = 0.s * 10^e
    std::string out;
    if (e > 0 && e <= d) {
        out = s.substr(0, static_cast<size_t>(e));
        if (static_cast<size_t>(e) < s.size()) out += "." + s.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -5) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + s;
    } else {
        out = s.substr(0, 1);
        if (s.size() > 1) out += "." + s.substr(1);
        out += "e" + std::to_string(static_cast<long>(e) - 1);
    }
    return sign + out;
}

Real parse_decimal(const std::string& text) {
    Real r;
    if (text.empty() || mpfr_set_str(r.raw(), text.c_str(), 10, RND) != 0) {
        throw DomainError("parse_decimal: not a decimal literal: '" + text + "'");
    }
    return r;
}

int digits_from_relative(const Real& r, int cap) {
    if (r.is_zero()) return cap;
    if (!r.is_finite()) return 0;
    Real l;
    mpfr_log10(l.raw(), r.raw(), RND);
    long v = floor(-l).to_long();
    if (v < 0) return 0;
    return static_cast<int>(std::min<long>(v, cap));
}

std::string to_string(const Rational& q) { return q.str(); }

Rational make_rational(long p, long q) {
    if (q == 0) throw DomainError("make_rational: zero denominator");
    return Rational(p, q);
}

}  // namespace zc
