#pragma once

// Verification reports: both sides of an identity, their discrepancy, and the
// precision and truncation under which it was measured. JSON, CSV and table
// renderings; JSON parses back to an identical report.

#include <string>
#include <utility>
#include <vector>

#include "zc/numerics.hpp"

namespace zc {

inline constexpr const char* kArtifactVersion = "zetaconv 1.0.0";

/// Auxiliary numerical check attached to a report (consistency, lemma, ...).
struct Check {
    std::string name;
    Real rel_diff;
    long digits_achieved = 0;
    long required_digits = 0;
    bool passed = false;
    std::string detail;
};

/// One candidate reading of an ambiguous display.
struct Reading {
    std::string label;
    Complex lhs;
    Complex rhs;
    Real rel_diff;
    long digits_achieved = 0;
    bool passed = false;
};

/// Numerical adjudication of a display that admits several readings.
struct Adjudication {
    std::string display;
    std::vector<Reading> readings;
    std::string adopted;  // label of the first passing reading, empty if none
    bool resolved() const { return !adopted.empty(); }
};

struct VerificationReport {
    std::string identity_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    Complex lhs;
    Complex rhs;
    Real abs_diff;
    Real rel_diff;
    long truncation_terms = 0;
    long digits_requested = 0;
    long digits_achieved = 0;
    long required_digits = 0;
    bool passed = false;
    long elapsed_ms = 0;
    std::vector<Check> checks;
    std::vector<Adjudication> adjudications;
    std::string note;
};

/// |a - b| / max(|a|, |b|, scale); zero when all three vanish.
Real relative_difference(const Complex& a, const Complex& b, const Real& scale);

/// Fills lhs, rhs, abs_diff, rel_diff and digits_achieved (quantized to the
/// requested digits) and sets `passed` against required_digits. Must run in
/// a scope whose context requests report.digits_requested digits.
void finalize(VerificationReport& report, const Complex& lhs, const Complex& rhs, const Real& scale);

/// Builds a check comparing two values; passes at `required` digits.
Check make_check(const std::string& name, const Complex& a, const Complex& b, const Real& scale, long required,
                 const std::string& detail = "");
/// Builds a boolean check (exact comparisons).
Check make_exact_check(const std::string& name, bool ok, const std::string& detail = "");

Reading make_reading(const std::string& label, const Complex& lhs, const Complex& rhs, const Real& scale,
                     long required);
/// Sets `adopted` to the first passing reading.
void adjudicate(Adjudication& a);

/// Quantizes z to d significant digits (decimal round trip).
Complex quantize(const Complex& z, int d);
Real quantize(const Real& x, int d);

std::string to_json(const VerificationReport& r, bool pretty = true);
std::string to_json(const std::vector<VerificationReport>& rs, bool pretty = true);
VerificationReport report_from_json(const std::string& text);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_table(const VerificationReport& r);

}  // namespace zc
