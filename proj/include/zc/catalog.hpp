#pragma once

// Named verifiers with parameter schemas, and the constant-expression grammar
// used for parameters on the command line and in manifests:
//   expr := term (('+' | '-') term)*      term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power     power := atom ('^' unary)?
//   atom := number ['i'] | 'pi' | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zc/numerics.hpp"
#include "zc/report.hpp"

namespace zc {

using ParamMap = std::map<std::string, std::string>;

enum class ParamType { integer, real, complex, real_list, complex_list, boolean, text };

std::string to_string(ParamType t);

struct ParamSpec {
    std::string name;
    ParamType type;
    std::string constraint;     // human-readable domain constraint
    std::string default_value;  // used when the parameter is omitted
};

struct IdentitySpec {
    std::string name;
    std::vector<ParamSpec> schema;
    std::string anchor;  // where the identity comes from, with its defining constraint
    long slack;          // digits below the request tolerated by the pass criterion
    std::function<VerificationReport(const ParamMap&, const PrecisionContext&, long terms)> verifier;
};

const std::vector<IdentitySpec>& catalog();
/// nullptr when absent.
const IdentitySpec* find_identity(const std::string& name);

/// Evaluates a constant expression at the current precision. ParameterError
/// on syntax errors.
Complex evaluate_expression(const std::string& text);
Real evaluate_real_expression(const std::string& text);
long evaluate_integer(const std::string& text);
/// Comma-separated list of expressions (commas inside parentheses are kept).
std::vector<std::string> split_list(const std::string& text);

/// One-line schema summary, e.g. "n: integer (n != 0), alpha: real (alpha > 0)".
std::string schema_text(const IdentitySpec& spec);

/// Fills defaults and rejects unknown keys; throws ParameterError with the
/// schema echoed.
ParamMap complete_parameters(const IdentitySpec& spec, const ParamMap& given);

/// Looks up `name`, validates the parameters, and runs the verifier at
/// `digits` with truncation `terms` (0 = automatic). elapsed_ms is recorded
/// only when `timing` is set so that reports are reproducible.
VerificationReport run_identity(const std::string& name, const ParamMap& params, int digits, long terms,
                                bool timing = false);

}  // namespace zc
