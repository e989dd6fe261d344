#include "zc/catalog.hpp"

#include <cctype>
#include <chrono>
#include <sstream>

#include "internal.hpp"
#include "zc/errors.hpp"
#include "zc/identities.hpp"

namespace zc {

std::string to_string(ParamType t) {
    switch (t) {
        case ParamType::integer: return "integer";
        case ParamType::real: return "real";
        case ParamType::complex: return "complex";
        case ParamType::real_list: return "list of reals";
        case ParamType::complex_list: return "list of complex";
        case ParamType::boolean: return "boolean";
        case ParamType::text: return "text";
    }
    return "?";
}

// ------------------------------------------------------------ expressions

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(const std::string& text) : s_(text) {}

    Complex parse() {
        Complex v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParameterError("cannot parse expression '" + s_ + "': " + why + " at position " +
                             std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        const size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    Complex expr() {
        Complex v = term();
        for (;;) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }
    Complex term() {
        Complex v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                Complex d = unary();
                if (detail::is_zero(d)) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    Complex unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    Complex power() {
        Complex b = atom();
        if (!accept('^')) return b;
        Complex e = unary();
        if (!e.im.is_zero()) fail("complex exponent");
        if (e.re.is_integer()) {
            const long n = e.re.to_long();
            if (n < 0 && detail::is_zero(b)) fail("zero to a negative power");
            return pow(b, n);
        }
        if (!b.im.is_zero() || b.re.sign() <= 0) fail("non-integer power of a non-positive number");
        return Complex(pow(b.re, e.re));
    }
    Complex atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (accept('(')) {
            Complex v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (accept_word("pi")) return Complex(pi());
        if (accept_word("sqrt")) {
            if (!accept('(')) fail("sqrt needs '('");
            Complex v = expr();
            if (!accept(')')) fail("missing ')'");
            if (v.im.is_zero() && v.re.sign() >= 0) return Complex(sqrt(v.re));
            return sqrt(v);
        }
        if (accept_word("i")) return imag_unit();
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
                size_t q = pos_ + 1;
                if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
                if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                    pos_ = q;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                }
            }
            Real v;
            try {
                v = parse_decimal(s_.substr(start, pos_ - start));
            } catch (const Error&) {
                fail("bad number");
            }
            if (pos_ < s_.size() && s_[pos_] == 'i' &&
                (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
                ++pos_;
                return imag_unit(v);
            }
            return Complex(v);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

Complex evaluate_expression(const std::string& text) { return ExpressionParser(text).parse(); }

Real evaluate_real_expression(const std::string& text) {
    const Complex v = evaluate_expression(text);
    if (!v.im.is_zero()) throw ParameterError("expected a real value, got complex '" + text + "'");
    return v.re;
}

long evaluate_integer(const std::string& text) {
    PrecisionScope scope{PrecisionContext(30)};
    const Real v = evaluate_real_expression(text);
    if (!v.is_integer() || abs(v) > Real(1000000000000L)) throw ParameterError("expected an integer, got '" + text + "'");
    return v.to_long();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        const size_t a = s.find_first_not_of(" \t");
        const size_t b = s.find_last_not_of(" \t");
        s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
    }
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

// ------------------------------------------------------------ parameter access

namespace {

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParameterError("expected a boolean (true/false), got '" + v + "'");
}

void check_type(const ParamSpec& p, const std::string& v) {
    PrecisionScope scope{PrecisionContext(30)};
    switch (p.type) {
        case ParamType::integer: evaluate_integer(v); break;
        case ParamType::real: evaluate_real_expression(v); break;
        case ParamType::complex: evaluate_expression(v); break;
        case ParamType::real_list:
            for (const auto& e : split_list(v)) evaluate_real_expression(e);
            break;
        case ParamType::complex_list:
            for (const auto& e : split_list(v)) evaluate_expression(e);
            break;
        case ParamType::boolean: parse_bool(v); break;
        case ParamType::text: break;
    }
}

// Typed view of a completed parameter map, evaluated at the current precision.
struct Args {
    const ParamMap& m;
    long integer(const std::string& k) const { return evaluate_integer(m.at(k)); }
    Real real(const std::string& k) const { return evaluate_real_expression(m.at(k)); }
    Complex complex(const std::string& k) const { return evaluate_expression(m.at(k)); }
    std::vector<Real> reals(const std::string& k) const {
        std::vector<Real> v;
        for (const auto& e : split_list(m.at(k))) v.push_back(evaluate_real_expression(e));
        return v;
    }
    std::vector<Complex> complexes(const std::string& k) const {
        std::vector<Complex> v;
        for (const auto& e : split_list(m.at(k))) v.push_back(evaluate_expression(e));
        return v;
    }
    bool flag(const std::string& k) const { return parse_bool(m.at(k)); }
    const std::string& text(const std::string& k) const { return m.at(k); }
};

using PT = ParamType;
constexpr long kSlack = 5;

std::vector<IdentitySpec> build_catalog() {
    std::vector<IdentitySpec> c;
    auto add = [&](std::string name, std::vector<ParamSpec> schema, std::string anchor, long slack,
                   std::function<VerificationReport(const Args&, const PrecisionContext&, long)> f) {
        c.push_back({std::move(name), std::move(schema), std::move(anchor), slack,
                     [f](const ParamMap& m, const PrecisionContext& ctx, long M) { return f(Args{m}, ctx, M); }});
    };

    add("ramanujan_classic", {{"n", PT::integer, "n != 0", "1"}, {"alpha", PT::real, "alpha > 0", "2"}},
        "Ramanujan's formula for zeta(2n+1) with Lambert series; αβ=π² (beta = pi^2/alpha is derived)", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_ramanujan_classic(a.integer("n"), a.real("alpha"), ctx, M);
        });
    add("lerch", {{"n", PT::integer, "n >= 0", "1"}},
        "Lerch's formula: zeta(2n+1) from a Bernoulli convolution and a Lambert series at alpha = beta = pi", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) { return verify_lerch(a.integer("n"), ctx, M); });
    add("ramanujan_zeta_form", {{"n", PT::integer, "n >= 0", "1"}, {"alpha", PT::real, "alpha > 0", "2"}},
        "Ramanujan's formula rewritten with zeta(2n+2)/(2 alpha) corrections and a product of even zeta values; "
        "αβ=π²",
        kSlack, [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_ramanujan_zeta_form(a.integer("n"), a.real("alpha"), ctx, M);
        });
    add("generalized_ramanujan",
        {{"N", PT::integer, "N >= 1", "2"},
         {"alpha", PT::real, "alpha > 0", "1"},
         {"beta", PT::real, "beta > 0", "3"}},
        "Convolution of even zeta values against coth sums, arbitrary α,β>0 (depends only on mu = beta/alpha)",
        kSlack, [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_generalized_ramanujan(a.integer("N"), a.real("alpha"), a.real("beta"), ctx, M);
        });
    add("eta_invariance", {{"alpha", PT::real, "alpha > 0", "2"}},
        "Dedekind eta invariance as the n = -1 case of Ramanujan's formula; αβ=π²", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_eta_invariance(a.real("alpha"), ctx, M);
        });
    add("herglotz", {{"m", PT::integer, "m >= 1", "1"}, {"alpha", PT::real, "alpha > 0", "5"}},
        "Higher Herglotz function transformation (Vlasenko-Zagier); αβ=4π²", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_herglotz(a.integer("m"), a.real("alpha"), ctx, M);
        });
    add("bernoulli_convolution",
        {{"N", PT::integer, "N >= 0", "2"},
         {"omega", PT::complex_list, "n >= 2 entries, Im(omega_i/omega_j) != 0", "1, 1+2i"},
         {"y", PT::real_list, "same length as omega, entries in [0, 1]", "1/3, 1/4"}},
        "n-fold convolution of Bernoulli polynomials against exponential sums; Im(ω_i/ω_j)≠0", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_bernoulli_convolution(a.integer("N"), a.complexes("omega"), a.reals("y"), ctx, M);
        });
    add("euler_convolution",
        {{"N", PT::integer, "N >= 0", "2"},
         {"omega", PT::complex_list, "n >= 2 entries, Im(omega_i/omega_j) != 0", "1, 1+2i"},
         {"x", PT::real_list, "same length as omega, entries in [0, 1/2]", "1/3, 1/4"},
         {"quadrature", PT::boolean, "n = 2 only", "false"}},
        "Euler-polynomial convolution over odd m, from half-interval integration of the Bernoulli identity",
        kSlack, [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_euler_convolution(a.integer("N"), a.complexes("omega"), a.reals("x"), ctx, M,
                                            a.flag("quadrature"));
        });
    add("zeta_square",
        {{"N", PT::integer, "N >= 1", "1"},
         {"alpha", PT::real, "alpha > 0", "1"},
         {"beta", PT::real, "beta > 0", "2"}},
        "Convolution of zeta^2 values against double divisor sums tau_0 x tau_0; arbitrary α>0, β>0", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_zeta_square(a.integer("N"), a.real("alpha"), a.real("beta"), ctx, M);
        });
    add("shifted_zeta",
        {{"N", PT::integer, "N >= 1", "1"},
         {"c", PT::integer, "c >= 0, even", "2"},
         {"d", PT::integer, "d >= 0, even", "2"},
         {"alpha", PT::real, "alpha != 0", "1"},
         {"beta", PT::real, "beta != 0", "2"},
         {"convention", PT::text, "reciprocal | printed", "reciprocal"}},
        "Shifted products zeta(2k+c) zeta(2N+2-2k+d) against tau_{-c} x tau_{-d} double sums; α, β nonzero",
        kSlack, [](const Args& a, const PrecisionContext& ctx, long M) {
            const std::string& conv = a.text("convention");
            ShiftConvention sc;
            if (conv == "reciprocal") {
                sc = ShiftConvention::reciprocal;
            } else if (conv == "printed") {
                sc = ShiftConvention::printed;
            } else {
                throw ParameterError("shifted_zeta: convention must be 'reciprocal' or 'printed'");
            }
            return verify_shifted_zeta(a.integer("N"), a.integer("c"), a.integer("d"), a.real("alpha"),
                                       a.real("beta"), ctx, M, sc);
        });
    add("dixit_gupta_equivalence", {{"N", PT::integer, "N >= 1", "1"}, {"alpha", PT::real, "alpha > 0", "2"}},
        "Koshliakov-kernel form of the zeta^2 identity and its rearrangement into double divisor sums; αβ=π²",
        kSlack, [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_dixit_gupta_equivalence(a.integer("N"), a.real("alpha"), ctx, M);
        });
    add("tau_dirichlet_lemma", {{"s", PT::integer, "s >= 2", "3"}},
        "Divisor Dirichlet series: sum tau_0(n) n^-s = zeta(s)^2", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_tau_dirichlet_lemma(a.integer("s"), ctx, M);
        });
    add("tau_log_lemma", {{"s", PT::integer, "s >= 2", "3"}},
        "Logarithmic divisor series: sum tau_0(n) log(n) n^-s = -2 zeta(s) zeta'(s)", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_tau_log_lemma(a.integer("s"), ctx, M);
        });
    add("koshliakov_kernel", {{"x", PT::real, "x > 0", "1"}},
        "Koshliakov kernel Omega(x): partial-fraction form against the K_0 Bessel form", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long) { return verify_koshliakov_kernel(a.real("x"), ctx); });
    add("bessel_zeta",
        {{"N", PT::integer, "N >= 1", "2"},
         {"nu", PT::real, "nu > -1", "0"},
         {"alpha", PT::real, "alpha > 0", "1"},
         {"beta", PT::real, "beta > 0", "2"}},
        "Convolution of Bessel zeta values (zeros of J_nu) against I_(nu-1)/I_nu ratio sums", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_bessel_zeta(a.integer("N"), a.real("nu"), a.real("alpha"), a.real("beta"), ctx, M);
        });
    add("hurwitz",
        {{"N", PT::integer, "N >= 1", "2"},
         {"x", PT::real, "0 < x <= 1", "1/3"},
         {"y", PT::real, "0 < y <= 1", "1/4"},
         {"alpha", PT::real, "alpha > 0", "1"},
         {"beta", PT::real, "beta > 0", "2"}},
        "Convolution of Hurwitz zeta values against digamma differences at y +- i sqrt(alpha/beta)(x+n)", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_hurwitz(a.integer("N"), a.real("x"), a.real("y"), a.real("alpha"), a.real("beta"), ctx,
                                  M);
        });
    add("multisection_lemma", {{"m", PT::integer, "m odd, m >= 1", "3"}, {"z", PT::complex, "z != 0", "0.3+0.1i"}},
        "Multisection of the cotangent: sum z^(2m) p^(m-1)/(z^(2m) - p^(2m)) as a finite cotangent sum; m odd",
        kSlack, [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_multisection_lemma(a.integer("m"), a.complex("z"), ctx, M);
        });
    add("multisection",
        {{"N", PT::integer, "N >= 1", "1"},
         {"m", PT::integer, "m odd", "3"},
         {"alpha", PT::real, "alpha > 0", "1"},
         {"beta", PT::real, "beta > 0", "2"}},
        "Convolution of zeta(2k) zeta(2m(N-k)+m+1) against complex coth sums; m odd", kSlack,
        [](const Args& a, const PrecisionContext& ctx, long M) {
            return verify_multisection(a.integer("N"), a.integer("m"), a.real("alpha"), a.real("beta"), ctx, M);
        });
    add("master_theorem",
        {{"seed", PT::integer, "seed >= 0", "1"}, {"count", PT::integer, "count >= 1", "200"}},
        "Linearization of n-fold convolutions of Dirichlet series, exact rational instances", 0,
        [](const Args& a, const PrecisionContext& ctx, long) {
            const long seed = a.integer("seed");
            if (seed < 0) throw ParameterError("master_theorem: seed must be nonnegative");
            return verify_master_theorem_exact(static_cast<unsigned long>(seed), a.integer("count"), ctx);
        });
    return c;
}

}  // namespace

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> c = build_catalog();
    return c;
}

const IdentitySpec* find_identity(const std::string& name) {
    for (const auto& s : catalog()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::string schema_text(const IdentitySpec& spec) {
    std::ostringstream os;
    for (size_t i = 0; i < spec.schema.size(); ++i) {
        const auto& p = spec.schema[i];
        if (i) os << ", ";
        os << p.name << ": " << to_string(p.type) << " (" << p.constraint << "; default " << p.default_value << ")";
    }
    return os.str();
}

ParamMap complete_parameters(const IdentitySpec& spec, const ParamMap& given) {
    ParamMap out;
    for (const auto& [k, v] : given) {
        bool known = false;
        for (const auto& p : spec.schema) known = known || p.name == k;
        if (!known) {
            throw ParameterError(spec.name + ": unknown parameter '" + k + "'; schema: " + schema_text(spec));
        }
    }
    for (const auto& p : spec.schema) {
        auto it = given.find(p.name);
        const std::string v = it == given.end() ? p.default_value : it->second;
        try {
            check_type(p, v);
        } catch (const ParameterError& e) {
            throw ParameterError(spec.name + ": parameter '" + p.name + "': " + e.what() +
                                 "; schema: " + schema_text(spec));
        }
        out[p.name] = v;
    }
    return out;
}

VerificationReport run_identity(const std::string& name, const ParamMap& params, int digits, long terms,
                                bool timing) {
    const IdentitySpec* spec = find_identity(name);
    if (!spec) throw ParameterError("unknown identity '" + name + "'");
    if (digits < 10) throw ParameterError("digits must be at least 10");
    if (terms < 0) throw ParameterError("terms must be positive");
    const ParamMap full = complete_parameters(*spec, params);
    const PrecisionContext ctx(digits);
    PrecisionScope scope{ctx};
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = spec->verifier(full, ctx, terms);
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = timing ? static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()) : 0;
    return r;
}

}  // namespace zc
