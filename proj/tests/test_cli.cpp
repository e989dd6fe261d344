#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "zc/catalog.hpp"
#include "zc/cli.hpp"
#include "zc/errors.hpp"

using namespace zc;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "zetaconv");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("constant expressions") {
    PrecisionScope s{PrecisionContext(30)};
    CHECK(agree_digits(evaluate_real_expression("pi^2/6"), pi() * pi() / 6L, 30));
    CHECK(agree_digits(evaluate_real_expression("2*sqrt(2)"), 2L * sqrt(Real(2L)), 30));
    CHECK(agree_digits(evaluate_real_expression("-(1/4)^-2"), Real(-16L), 30));
    CHECK(agree_digits(evaluate_real_expression("1.5e2"), Real(150L), 30));
    CHECK(agree_digits(evaluate_expression("1+2i"), Complex(Real(1L), Real(2L)), 30));
    CHECK(agree_digits(evaluate_expression("(3 - i)*i"), Complex(Real(1L), Real(3L)), 30));
    CHECK(agree_digits(evaluate_expression("sqrt(-4)"), Complex(Real(0L), Real(2L)), 30));
    CHECK(evaluate_integer("2^3 - 1") == 7);
    CHECK_THROWS_AS(evaluate_integer("1.5"), ParameterError);
    CHECK_THROWS_AS(evaluate_expression("1 +"), ParameterError);
    CHECK_THROWS_AS(evaluate_expression("foo"), ParameterError);
    CHECK_THROWS_AS(evaluate_expression("1/0"), ParameterError);
    CHECK_THROWS_AS(evaluate_real_expression("i"), ParameterError);
}

TEST_CASE("list splitting") {
    CHECK(split_list("1, 1+2i, sqrt(2)") == std::vector<std::string>{"1", "1+2i", "sqrt(2)"});
    CHECK(split_list("(1, 2), 3").size() == 2);
    CHECK(split_list("").empty());
}

TEST_CASE("catalog and parameter completion") {
    CHECK(catalog().size() == 19);
    const IdentitySpec* spec = find_identity("ramanujan_classic");
    REQUIRE(spec != nullptr);
    CHECK(find_identity("no_such_identity") == nullptr);
    const ParamMap p = complete_parameters(*spec, {{"n", "2"}});
    CHECK(p.at("n") == "2");
    CHECK(p.count("alpha") == 1);
    CHECK_THROWS_AS(complete_parameters(*spec, {{"bogus", "1"}}), ParameterError);
    CHECK_THROWS_AS(complete_parameters(*spec, {{"n", "x"}}), ParameterError);
    const IdentitySpec* ms = find_identity("multisection");
    REQUIRE(ms != nullptr);
    CHECK(schema_text(*ms).find("m odd") != std::string::npos);
}

TEST_CASE("manifest parsing") {
    const std::string text = R"(# comment
digits = 25
output = "json"
parallelism = 3

[[entry]]
name = "lerch"
params = { n = 3 }

[[entry]]
name = "bernoulli_convolution"
digits = 20
terms = 100
[entry.params]
N = 2
omega = ["1", "1+2i"]
y = [0.25, 0.5]
)";
    const RunManifest m = parse_manifest(text);
    CHECK(m.output == OutputFormat::json);
    CHECK(m.parallelism == 3);
    REQUIRE(m.entries.size() == 2);
    CHECK(m.entries[0].name == "lerch");
    CHECK(m.entries[0].digits == 25);
    CHECK(m.entries[0].params.at("n") == "3");
    CHECK(m.entries[1].digits == 20);
    CHECK(m.entries[1].terms == 100);
    CHECK(m.entries[1].params.at("omega") == "1, 1+2i");
    CHECK(split_list(m.entries[1].params.at("y")).size() == 2);
    CHECK_THROWS_AS(parse_manifest("[[entry]]\nname = \"lerch\"\nparams = {n = }\n"), ParameterError);
    CHECK_THROWS_AS(parse_manifest("output = 'xml'\n"), ParameterError);
    CHECK_THROWS_AS(parse_manifest("[[entry]]\nparams = { n = 1 }\n"), ParameterError);
}

TEST_CASE("JSON round trip is exact") {
    const VerificationReport r = run_identity("lerch", {{"n", "1"}}, 40, 0);
    const std::string j = to_json(r);
    const VerificationReport back = report_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.lhs.re == r.lhs.re);
    CHECK(back.rhs.re == r.rhs.re);
    CHECK(back.rel_diff == r.rel_diff);
    CHECK(back.passed == r.passed);
    CHECK(back.checks.size() == r.checks.size());
}

TEST_CASE("reports are reproducible without timing") {
    const std::string a = to_json(run_identity("eta_invariance", {{"alpha", "0.7"}}, 30, 0));
    const std::string b = to_json(run_identity("eta_invariance", {{"alpha", "0.7"}}, 30, 0));
    CHECK(a == b);
    CHECK(run_identity("lerch", {{"n", "1"}}, 20, 0).elapsed_ms == 0);
}

TEST_CASE("command line exit codes") {
    const Invocation ok = invoke({"verify", "ramanujan_classic", "--n", "1", "--alpha", "3.14159"});
    CHECK(ok.code == kExitPass);
    CHECK(ok.out.find("ramanujan_classic") != std::string::npos);

    const Invocation eq = invoke({"verify", "lerch", "--n=3", "--output", "json"});
    CHECK(eq.code == kExitPass);
    CHECK(report_from_json(eq.out).identity_name == "lerch");

    const Invocation even = invoke({"verify", "multisection", "--m", "4"});
    CHECK(even.code == kExitUsage);
    CHECK(even.err.find("odd") != std::string::npos);

    const Invocation unknown = invoke({"verify", "nonsense"});
    CHECK(unknown.code == kExitUsage);
    CHECK(unknown.err.find("ramanujan_classic") != std::string::npos);

    CHECK(invoke({"verify", "lerch", "--n", "0"}).code == kExitUsage);
    CHECK(invoke({"verify", "lerch", "--n", "2"}).code == kExitFail);
    CHECK(invoke({"verify", "lerch", "--n"}).code == kExitUsage);
    CHECK(invoke({"verify", "lerch", "--output", "xml"}).code == kExitUsage);
    CHECK(invoke({"list"}).code == kExitPass);
    CHECK(invoke({}).code == kExitUsage);
}

TEST_CASE("exit codes for error classes") {
    CHECK(exit_code_for(ParameterError("x")) == kExitUsage);
    CHECK(exit_code_for(DomainError("x")) == kExitUsage);
    CHECK(exit_code_for(ConvergenceError("x")) == kExitNumerical);
    CHECK(exit_code_for(ResourceError("x")) == kExitNumerical);
    CHECK(exit_code_for(RangeError("x")) == kExitNumerical);
}

TEST_CASE("manifest with a bad entry flags it and runs the rest") {
    RunManifest m;
    m.parallelism = 2;
    m.entries.push_back({"lerch", {{"n", "1"}}, 20, 0});
    m.entries.push_back({"multisection", {{"m", "2"}}, 20, 0});
    m.entries.push_back({"eta_invariance", {{"alpha", "2"}}, 20, 0});
    std::ostringstream out, err;
    CHECK(run_manifest(m, false, out, err) == kExitFail);
    CHECK(err.str().find("FAILED entry 2 (multisection)") != std::string::npos);
    CHECK(err.str().find("2/3 entries passed") != std::string::npos);
}
