#include "zc/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace zc {

using ojson = nlohmann::ordered_json;

Real relative_difference(const Complex& a, const Complex& b, const Real& scale) {
    Real d = abs(a - b);
    Real s = max(max(abs(a), abs(b)), abs(scale));
    if (s.is_zero()) return d.is_zero() ? Real(0L) : Real(1L);
    return d / s;
}

Real quantize(const Real& x, int d) {
    if (!x.is_finite()) return x;
    return parse_decimal(decimal_string(x, d));
}

Complex quantize(const Complex& z, int d) { return Complex(quantize(z.re, d), quantize(z.im, d)); }

namespace {

long digits_of(const Real& rel) {
    const int cap = current_context().decimal_digits;
    return std::max(0, digits_from_relative(rel, cap));
}

}  // namespace

void finalize(VerificationReport& r, const Complex& lhs, const Complex& rhs, const Real& scale) {
    const int d = static_cast<int>(r.digits_requested);
    Real rel = relative_difference(lhs, rhs, scale);
    r.digits_achieved = rel.is_zero() ? r.digits_requested : digits_of(rel);
    r.lhs = quantize(lhs, d);
    r.rhs = quantize(rhs, d);
    r.abs_diff = quantize(abs(lhs - rhs), d);
    r.rel_diff = quantize(rel, d);
    r.passed = r.digits_achieved >= r.required_digits;
}

Check make_check(const std::string& name, const Complex& a, const Complex& b, const Real& scale, long required,
                 const std::string& detail) {
    Check c;
    c.name = name;
    Real rel = relative_difference(a, b, scale);
    c.digits_achieved = rel.is_zero() ? current_context().decimal_digits : digits_of(rel);
    c.rel_diff = quantize(rel, current_context().decimal_digits);
    c.required_digits = required;
    c.passed = c.digits_achieved >= required;
    c.detail = detail;
    return c;
}

Check make_exact_check(const std::string& name, bool ok, const std::string& detail) {
    Check c;
    c.name = name;
    c.rel_diff = Real(ok ? 0L : 1L);
    c.digits_achieved = ok ? current_context().decimal_digits : 0;
    c.required_digits = current_context().decimal_digits;
    c.passed = ok;
    c.detail = detail;
    return c;
}

Reading make_reading(const std::string& label, const Complex& lhs, const Complex& rhs, const Real& scale,
                     long required) {
    const int d = current_context().decimal_digits;
    Reading rd;
    rd.label = label;
    Real rel = relative_difference(lhs, rhs, scale);
    rd.digits_achieved = rel.is_zero() ? d : digits_of(rel);
    rd.lhs = quantize(lhs, d);
    rd.rhs = quantize(rhs, d);
    rd.rel_diff = quantize(rel, d);
    rd.passed = rd.digits_achieved >= required;
    return rd;
}

void adjudicate(Adjudication& a) {
    a.adopted.clear();
    for (const Reading& r : a.readings) {
        if (r.passed) {
            a.adopted = r.label;
            return;
        }
    }
}

// ------------------------------------------------------------ JSON

namespace {

std::string num(const Real& x, int d) {
    if (!x.is_finite()) return x.to_double() > 0 ? "inf" : (x.to_double() < 0 ? "-inf" : "nan");
    return decimal_string(x, d);
}

ojson complex_json(const Complex& z, int d) { return ojson{{"re", num(z.re, d)}, {"im", num(z.im, d)}}; }

Complex complex_from(const ojson& j) {
    return Complex(parse_decimal(j.at("re").get<std::string>()), parse_decimal(j.at("im").get<std::string>()));
}

ojson report_json(const VerificationReport& r) {
    const int d = static_cast<int>(r.digits_requested);
    PrecisionScope scope{PrecisionContext(std::max(d, 10))};
    ojson j;
    j["version"] = kArtifactVersion;
    j["identity_name"] = r.identity_name;
    ojson params = ojson::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["lhs"] = complex_json(r.lhs, d);
    j["rhs"] = complex_json(r.rhs, d);
    j["abs_diff"] = num(r.abs_diff, d);
    j["rel_diff"] = num(r.rel_diff, d);
    j["truncation_terms"] = r.truncation_terms;
    j["digits_requested"] = r.digits_requested;
    j["digits_achieved"] = r.digits_achieved;
    j["required_digits"] = r.required_digits;
    j["passed"] = r.passed;
    j["elapsed_ms"] = r.elapsed_ms;
    ojson checks = ojson::array();
    for (const Check& c : r.checks) {
        checks.push_back(ojson{{"name", c.name},
                               {"rel_diff", num(c.rel_diff, d)},
                               {"digits_achieved", c.digits_achieved},
                               {"required_digits", c.required_digits},
                               {"passed", c.passed},
                               {"detail", c.detail}});
    }
    j["checks"] = checks;
    ojson adjs = ojson::array();
    for (const Adjudication& a : r.adjudications) {
        ojson readings = ojson::array();
        for (const Reading& rd : a.readings) {
            readings.push_back(ojson{{"label", rd.label},
                                     {"lhs", complex_json(rd.lhs, d)},
                                     {"rhs", complex_json(rd.rhs, d)},
                                     {"rel_diff", num(rd.rel_diff, d)},
                                     {"digits_achieved", rd.digits_achieved},
                                     {"passed", rd.passed}});
        }
        adjs.push_back(ojson{{"display", a.display}, {"readings", readings}, {"adopted", a.adopted}});
    }
    j["adjudications"] = adjs;
    j["note"] = r.note;
    return j;
}

}  // namespace

std::string to_json(const VerificationReport& r, bool pretty) { return report_json(r).dump(pretty ? 2 : -1); }

std::string to_json(const std::vector<VerificationReport>& rs, bool pretty) {
    ojson j;
    j["version"] = kArtifactVersion;
    ojson arr = ojson::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    j["reports"] = arr;
    return j.dump(pretty ? 2 : -1);
}

VerificationReport report_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw ParameterError(std::string("report_from_json: ") + e.what());
    }
    try {
        VerificationReport r;
        r.digits_requested = j.at("digits_requested").get<long>();
        PrecisionScope scope{PrecisionContext(static_cast<int>(std::max<long>(r.digits_requested, 10)))};
        r.identity_name = j.at("identity_name").get<std::string>();
        for (const auto& [k, v] : j.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
        r.lhs = complex_from(j.at("lhs"));
        r.rhs = complex_from(j.at("rhs"));
        r.abs_diff = parse_decimal(j.at("abs_diff").get<std::string>());
        r.rel_diff = parse_decimal(j.at("rel_diff").get<std::string>());
        r.truncation_terms = j.at("truncation_terms").get<long>();
        r.digits_achieved = j.at("digits_achieved").get<long>();
        r.required_digits = j.at("required_digits").get<long>();
        r.passed = j.at("passed").get<bool>();
        r.elapsed_ms = j.at("elapsed_ms").get<long>();
        for (const auto& c : j.at("checks")) {
            Check ck;
            ck.name = c.at("name").get<std::string>();
            ck.rel_diff = parse_decimal(c.at("rel_diff").get<std::string>());
            ck.digits_achieved = c.at("digits_achieved").get<long>();
            ck.required_digits = c.at("required_digits").get<long>();
            ck.passed = c.at("passed").get<bool>();
            ck.detail = c.at("detail").get<std::string>();
            r.checks.push_back(ck);
        }
        for (const auto& a : j.at("adjudications")) {
            Adjudication ad;
            ad.display = a.at("display").get<std::string>();
            ad.adopted = a.at("adopted").get<std::string>();
            for (const auto& rd : a.at("readings")) {
                Reading x;
                x.label = rd.at("label").get<std::string>();
                x.lhs = complex_from(rd.at("lhs"));
                x.rhs = complex_from(rd.at("rhs"));
                x.rel_diff = parse_decimal(rd.at("rel_diff").get<std::string>());
                x.digits_achieved = rd.at("digits_achieved").get<long>();
                x.passed = rd.at("passed").get<bool>();
                ad.readings.push_back(x);
            }
            r.adjudications.push_back(ad);
        }
        r.note = j.value("note", std::string());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("report_from_json: ") + e.what());
    }
}

// ------------------------------------------------------------ CSV and table

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string params_string(const VerificationReport& r) {
    std::string s;
    for (const auto& [k, v] : r.parameters) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

}  // namespace

std::string csv_header() {
    return "identity_name,parameters,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,rel_diff,truncation_terms,"
           "digits_requested,digits_achieved,required_digits,passed,elapsed_ms";
}

std::string to_csv_row(const VerificationReport& r) {
    const int d = static_cast<int>(r.digits_requested);
    PrecisionScope scope{PrecisionContext(std::max(d, 10))};
    std::ostringstream os;
    os << csv_field(r.identity_name) << ',' << csv_field(params_string(r)) << ',' << num(r.lhs.re, d) << ','
       << num(r.lhs.im, d) << ',' << num(r.rhs.re, d) << ',' << num(r.rhs.im, d) << ',' << num(r.abs_diff, d)
       << ',' << num(r.rel_diff, d) << ',' << r.truncation_terms << ',' << r.digits_requested << ','
       << r.digits_achieved << ',' << r.required_digits << ',' << (r.passed ? "true" : "false") << ','
       << r.elapsed_ms;
    return os.str();
}

std::string to_table(const VerificationReport& r) {
    const int d = static_cast<int>(r.digits_requested);
    PrecisionScope scope{PrecisionContext(std::max(d, 10))};
    std::ostringstream os;
    auto row = [&](const std::string& k, const std::string& v) {
        os << "  " << std::left << std::setw(18) << k << v << '\n';
    };
    os << r.identity_name << "  [" << (r.passed ? "PASS" : "FAIL") << "]\n";
    for (const auto& [k, v] : r.parameters) row(k, v);
    row("lhs", num(r.lhs.re, d) + (r.lhs.im.is_zero() ? "" : " + i*" + num(r.lhs.im, d)));
    row("rhs", num(r.rhs.re, d) + (r.rhs.im.is_zero() ? "" : " + i*" + num(r.rhs.im, d)));
    row("abs_diff", num(r.abs_diff, 6));
    row("rel_diff", num(r.rel_diff, 6));
    row("digits", std::to_string(r.digits_achieved) + " achieved / " + std::to_string(r.required_digits) +
                      " required (" + std::to_string(r.digits_requested) + " requested)");
    row("terms", std::to_string(r.truncation_terms));
    row("elapsed_ms", std::to_string(r.elapsed_ms));
    for (const Check& c : r.checks) {
        os << "  check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.digits_achieved << " / "
           << c.required_digits << " digits)";
        if (!c.detail.empty()) os << " " << c.detail;
        os << '\n';
    }
    for (const Adjudication& a : r.adjudications) {
        os << "  adjudication: " << a.display << '\n';
        for (const Reading& rd : a.readings) {
            os << "    " << (rd.passed ? "pass " : "fail ") << rd.label << " (" << rd.digits_achieved
               << " digits)\n";
        }
        os << "    adopted: " << (a.adopted.empty() ? "none" : a.adopted) << '\n';
    }
    if (!r.note.empty()) os << "  note: " << r.note << '\n';
    return os.str();
}

}  // namespace zc
