#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hacc/analysis.hpp"

namespace hacc {

inline constexpr const char* tool_name = "hacc";
inline constexpr const char* tool_version = "0.1.0";

enum class report_format { json, tsv };

/// How a parameter value entered the run (command-line flag, preset name,
/// elicitation from annotations, a file, or the engine default).
struct param_source {
    std::string source = "default";
    std::string detail;  // preset name, file path, derivation rule
};

struct report_doc {
    // metadata: everything needed to reproduce the run
    std::map<std::string, std::string> inputs;  // role -> digest
    std::optional<std::uint64_t> seed;
    std::string rng;
    std::string timestamp;  // empty unless the caller supplies one

    std::map<std::string, double> metrics;

    std::optional<double> tau;
    param_source tau_source;
    std::map<std::string, double> priorities;
    param_source priorities_source;
    std::optional<double> complexity_const;
    param_source complexity_source;
    std::string penalty = "standard";
    std::string positive_label;

    struct named_sweep {
        std::string name;
        sweep_table table;
    };
    std::vector<named_sweep> sweeps;
};

/// Deterministic serialization: keys sorted, numbers with at most 12
/// significant digits, newline terminated. Identical documents produce
/// identical bytes.
std::string emit_report(const report_doc& report, report_format format);

/// Bare sweep-table serialization used by the sweep subcommand.
std::string emit_sweep(const sweep_table& table, report_format format);

std::uint64_t fnv1a64(const std::string& bytes);

/// "fnv1a64:<16 hex digits>" over the file's bytes.
std::string digest_file(const std::string& path);

}  // namespace hacc
