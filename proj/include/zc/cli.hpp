#pragma once

// Command-line front end: single verifications, TOML manifests run on a
// worker pool, and the catalog listing.
//
// Exit codes: 0 all reports pass; 1 a report (or manifest entry) failed;
// 2 usage, parameter or parse error; 3 numerical failure (convergence,
// resource, range).

#include <iosfwd>
#include <string>
#include <vector>

#include "zc/catalog.hpp"

namespace zc {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class OutputFormat { table, json, csv };

/// ParameterError for anything other than table/json/csv.
OutputFormat parse_output_format(const std::string& s);

struct ManifestEntry {
    std::string name;
    ParamMap params;
    int digits = 30;
    long terms = 0;
};

struct RunManifest {
    std::vector<ManifestEntry> entries;
    OutputFormat output = OutputFormat::table;
    int parallelism = 1;
};

/// Subset of TOML: comments, top-level keys (digits, output, parallelism),
/// [[entry]] tables with name/digits/terms, parameters either as an inline
/// table `params = {...}` or a following [entry.params] table. Values are
/// strings, integers, floats, booleans, or arrays (joined with commas).
/// ParameterError with the line number on malformed input.
RunManifest parse_manifest(const std::string& text);

/// Maps an exception from a verifier to an exit code (2 or 3).
int exit_code_for(const std::exception& e);

std::string list_catalog();

int run_single(const std::string& name, const ParamMap& params, int digits, long terms, OutputFormat output,
               bool timing, std::ostream& out, std::ostream& err);

/// Runs every entry (parameters are type-checked for all entries before any
/// computation), printing results in manifest order.
int run_manifest(const RunManifest& manifest, bool timing, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] is the program name).
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace zc
