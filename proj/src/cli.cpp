#include "zc/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "zc/errors.hpp"

namespace zc {

OutputFormat parse_output_format(const std::string& s) {
    if (s == "table") return OutputFormat::table;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw ParameterError("output must be table, json or csv (got '" + s + "')");
}

// ------------------------------------------------------------ manifest parsing

namespace {

struct TomlValue {
    std::string text;  // scalar text, or array elements joined by ", "
    bool is_string = false;
    bool is_table = false;
    std::vector<std::pair<std::string, TomlValue>> table;
};

class TomlLine {
public:
    TomlLine(const std::string& s, long line) : s_(s), line_(line) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw ParameterError("manifest line " + std::to_string(line_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size() || s_[pos_] == '#';
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string key() {
        skip();
        if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) return quoted();
        const size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '-' || s_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ == start) fail("expected a key");
        return s_.substr(start, pos_ - start);
    }
    std::string quoted() {
        const char q = s_[pos_++];
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != q) {
            char c = s_[pos_++];
            if (q == '"' && c == '\\' && pos_ < s_.size()) {
                const char e = s_[pos_++];
                c = e == 'n' ? '\n' : e == 't' ? '\t' : e;
            }
            out += c;
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }
    TomlValue value() {
        skip();
        if (pos_ >= s_.size()) fail("missing value");
        TomlValue v;
        const char c = s_[pos_];
        if (c == '"' || c == '\'') {
            v.text = quoted();
            v.is_string = true;
            return v;
        }
        if (c == '[') {
            ++pos_;
            std::vector<std::string> items;
            if (!accept(']')) {
                do {
                    items.push_back(value().text);
                } while (accept(','));
                if (!accept(']')) fail("expected ']'");
            }
            for (size_t i = 0; i < items.size(); ++i) v.text += (i ? ", " : "") + items[i];
            return v;
        }
        if (c == '{') {
            ++pos_;
            v.is_table = true;
            if (!accept('}')) {
                do {
                    std::string k = key();
                    if (!accept('=')) fail("expected '=' in inline table");
                    v.table.emplace_back(k, value());
                } while (accept(','));
                if (!accept('}')) fail("expected '}'");
            }
            return v;
        }
        const size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '}' && s_[pos_] != '#') ++pos_;
        v.text = s_.substr(start, pos_ - start);
        while (!v.text.empty() && (v.text.back() == ' ' || v.text.back() == '\t')) v.text.pop_back();
        if (v.text.empty()) fail("missing value");
        return v;
    }

private:
    std::string s_;
    long line_;
    size_t pos_ = 0;
};

long to_long_value(const TomlValue& v, const std::string& key, long line) {
    try {
        size_t used = 0;
        const long n = std::stol(v.text, &used);
        if (used == v.text.size()) return n;
    } catch (const std::exception&) {
    }
    throw ParameterError("manifest line " + std::to_string(line) + ": '" + key + "' must be an integer");
}

}  // namespace

RunManifest parse_manifest(const std::string& text) {
    RunManifest m;
    int default_digits = 30;
    bool digits_seen_in_entry = false;
    std::vector<bool> entry_has_digits;
    enum class Section { top, entry, params } section = Section::top;
    std::istringstream in(text);
    std::string raw;
    long lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        TomlLine line(raw, lineno);
        if (line.at_end()) continue;
        if (line.accept('[')) {
            if (line.accept('[')) {
                const std::string k = line.key();
                if (!line.accept(']') || !line.accept(']')) line.fail("expected ']]'");
                if (k != "entry") line.fail("unknown array of tables '" + k + "'");
                m.entries.emplace_back();
                entry_has_digits.push_back(false);
                section = Section::entry;
            } else {
                const std::string k = line.key();
                if (!line.accept(']')) line.fail("expected ']'");
                if (k != "entry.params" || m.entries.empty()) line.fail("unexpected table '" + k + "'");
                section = Section::params;
            }
            if (!line.at_end()) line.fail("trailing characters");
            continue;
        }
        const std::string k = line.key();
        if (!line.accept('=')) line.fail("expected '='");
        const TomlValue v = line.value();
        if (!line.at_end()) line.fail("trailing characters");
        switch (section) {
            case Section::top:
                if (k == "digits") {
                    default_digits = static_cast<int>(to_long_value(v, k, lineno));
                } else if (k == "output") {
                    m.output = parse_output_format(v.text);
                } else if (k == "parallelism") {
                    m.parallelism = static_cast<int>(to_long_value(v, k, lineno));
                    if (m.parallelism < 1) line.fail("parallelism must be positive");
                } else {
                    line.fail("unknown top-level key '" + k + "'");
                }
                break;
            case Section::entry: {
                ManifestEntry& e = m.entries.back();
                if (k == "name") {
                    e.name = v.text;
                } else if (k == "digits") {
                    e.digits = static_cast<int>(to_long_value(v, k, lineno));
                    entry_has_digits.back() = true;
                    digits_seen_in_entry = true;
                } else if (k == "terms") {
                    e.terms = to_long_value(v, k, lineno);
                    if (e.terms < 0) line.fail("terms must be positive");
                } else if (k == "params") {
                    if (!v.is_table) line.fail("params must be an inline table");
                    for (const auto& [pk, pv] : v.table) e.params[pk] = pv.text;
                } else {
                    line.fail("unknown entry key '" + k + "'");
                }
                break;
            }
            case Section::params: m.entries.back().params[k] = v.text; break;
        }
    }
    (void)digits_seen_in_entry;
    for (size_t i = 0; i < m.entries.size(); ++i) {
        if (!entry_has_digits[i]) m.entries[i].digits = default_digits;
        if (m.entries[i].name.empty()) {
            throw ParameterError("manifest entry " + std::to_string(i + 1) + " has no name");
        }
    }
    if (m.entries.empty()) throw ParameterError("manifest has no [[entry]] tables");
    return m;
}

// ------------------------------------------------------------ running

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const ContractViolation*>(&e)) {
        return kExitUsage;
    }
    return kExitNumerical;
}

std::string list_catalog() {
    std::ostringstream os;
    os << catalog().size() << " identities\n";
    for (const auto& s : catalog()) {
        os << s.name << "\n";
        os << "  anchor: " << s.anchor << "\n";
        os << "  slack: " << s.slack << " digits\n";
        os << "  parameters:\n";
        for (const auto& p : s.schema) {
            os << "    " << p.name << ": " << to_string(p.type) << ", " << p.constraint << " (default "
               << p.default_value << ")\n";
        }
    }
    return os.str();
}

namespace {

void emit(const std::vector<VerificationReport>& rs, OutputFormat f, bool single, std::ostream& out) {
    switch (f) {
        case OutputFormat::json: out << (single ? to_json(rs.front()) : to_json(rs)) << "\n"; break;
        case OutputFormat::csv:
            out << csv_header() << "\n";
            for (const auto& r : rs) out << to_csv_row(r) << "\n";
            break;
        case OutputFormat::table:
            for (const auto& r : rs) out << to_table(r) << "\n";
            break;
    }
}

// Report standing in for an entry that raised instead of producing one.
VerificationReport error_report(const ManifestEntry& e, const std::exception& ex) {
    VerificationReport r;
    r.identity_name = e.name;
    for (const auto& [k, v] : e.params) r.parameters.emplace_back(k, v);
    r.digits_requested = e.digits;
    r.required_digits = e.digits;
    r.truncation_terms = e.terms;
    r.passed = false;
    r.note = std::string("error: ") + ex.what();
    return r;
}

}  // namespace

int run_single(const std::string& name, const ParamMap& params, int digits, long terms, OutputFormat output,
               bool timing, std::ostream& out, std::ostream& err) {
    const IdentitySpec* spec = find_identity(name);
    if (!spec) {
        err << "error: unknown identity '" << name << "'\n\n" << list_catalog();
        return kExitUsage;
    }
    try {
        const VerificationReport r = run_identity(name, params, digits, terms, timing);
        emit({r}, output, true, out);
        return r.passed ? kExitPass : kExitFail;
    } catch (const std::exception& e) {
        const int code = exit_code_for(e);
        err << "error: " << e.what() << "\n";
        if (code == kExitUsage) err << "schema for " << name << ": " << schema_text(*spec) << "\n";
        return code;
    }
}

int run_manifest(const RunManifest& m, bool timing, std::ostream& out, std::ostream& err) {
    // names and parameter types are validated before any computation
    for (size_t i = 0; i < m.entries.size(); ++i) {
        const ManifestEntry& e = m.entries[i];
        const IdentitySpec* spec = find_identity(e.name);
        if (!spec) {
            err << "error: manifest entry " << i + 1 << ": unknown identity '" << e.name << "'\n\n" << list_catalog();
            return kExitUsage;
        }
        try {
            complete_parameters(*spec, e.params);
            if (e.digits < 10) throw ParameterError("digits must be at least 10");
        } catch (const std::exception& ex) {
            err << "error: manifest entry " << i + 1 << ": " << ex.what() << "\n";
            return kExitUsage;
        }
    }
    const size_t n = m.entries.size();
    std::vector<VerificationReport> reports(n);
    std::vector<std::string> errors(n);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < n; i = next++) {
            const ManifestEntry& e = m.entries[i];
            try {
                reports[i] = run_identity(e.name, e.params, e.digits, e.terms, timing);
            } catch (const std::exception& ex) {
                reports[i] = error_report(e, ex);
                errors[i] = ex.what();
            }
        }
    };
    const int width = std::max(1, std::min<int>(m.parallelism, static_cast<int>(n)));
    std::vector<std::thread> pool;
    for (int t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    emit(reports, m.output, false, out);
    size_t passed = 0;
    for (size_t i = 0; i < n; ++i) {
        if (reports[i].passed) {
            ++passed;
        } else {
            err << "FAILED entry " << i + 1 << " (" << m.entries[i].name << ")"
                << (errors[i].empty() ? "" : ": " + errors[i]) << "\n";
        }
    }
    err << passed << "/" << n << " entries passed\n";
    return passed == n ? kExitPass : kExitFail;
}

// ------------------------------------------------------------ command line

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arbitrary-precision verification of convolution identities for Dirichlet series", "zetaconv"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List the identity catalog with parameter schemas");

    auto* verify = app.add_subcommand("verify", "Verify one identity: verify <name> [--param value]...");
    std::string name;
    int digits = 30;
    long terms = 0;
    std::string output = "table";
    bool timing = false;
    verify->add_option("name", name, "Identity name (see list)")->required();
    verify->add_option("--digits", digits, "Decimal digits of precision (>= 10)");
    verify->add_option("--terms", terms, "Truncation override (0 = automatic)");
    verify->add_option("--output", output, "table, json or csv");
    verify->add_flag("--timing", timing, "Record elapsed_ms in the report");
    verify->allow_extras();

    auto* run = app.add_subcommand("run", "Run a TOML manifest of verifications");
    std::string manifest_path;
    std::string run_output;
    int parallel = 0;
    bool run_timing = false;
    run->add_option("manifest", manifest_path, "Manifest file")->required();
    run->add_option("--output", run_output, "Override the manifest's output format");
    run->add_option("-j,--parallel", parallel, "Override the manifest's parallelism");
    run->add_flag("--timing", run_timing, "Record elapsed_ms in the reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (*list) {
        out << list_catalog();
        return kExitPass;
    }
    if (*verify) {
        OutputFormat fmt;
        try {
            fmt = parse_output_format(output);
        } catch (const ParameterError& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        ParamMap params;
        const std::vector<std::string> extras = verify->remaining();
        for (size_t i = 0; i < extras.size(); ++i) {
            const std::string& a = extras[i];
            if (a.rfind("--", 0) != 0 || a.size() < 3) {
                err << "error: unexpected argument '" << a << "'; parameters are given as --name value\n";
                return kExitUsage;
            }
            const size_t eq = a.find('=');
            if (eq != std::string::npos) {
                params[a.substr(2, eq - 2)] = a.substr(eq + 1);
            } else if (i + 1 < extras.size()) {
                params[a.substr(2)] = extras[++i];
            } else {
                err << "error: parameter '" << a << "' has no value\n";
                return kExitUsage;
            }
        }
        return run_single(name, params, digits, terms, fmt, timing, out, err);
    }
    // run
    std::ifstream in(manifest_path);
    if (!in) {
        err << "error: cannot open manifest '" << manifest_path << "'\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    RunManifest m;
    try {
        m = parse_manifest(buf.str());
        if (!run_output.empty()) m.output = parse_output_format(run_output);
        if (parallel > 0) m.parallelism = parallel;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return run_manifest(m, run_timing, out, err);
}

}  // namespace zc
