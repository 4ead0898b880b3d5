#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/error_series.hpp"
#include "stirling/formula_catalog.hpp"

namespace stirling {

enum class Subcommand { Expand, Optimize, Rate, Table, Compare };
enum class OutputFormat { Markdown, Csv, Json };

Subcommand parse_subcommand(std::string_view name);
OutputFormat parse_format(std::string_view name);

struct RunConfig {
    Subcommand subcommand = Subcommand::Table;
    FamilyId family = FamilyId::MorticiAB;
    std::map<std::string, Rational> fix;  // pins otherwise-free family parameters
    std::vector<FormulaId> formulas;       // compare; empty means the whole catalog
    int order = 10;
    int precision = kDefaultDigits;
    std::optional<std::vector<long>> n_values;
    std::optional<OutputFormat> format;
    int sig_digits = 5;
    std::optional<std::string> output_path;
    long max_n = 100000;

    // Throws DomainError on an invalid combination.
    void validate() const;

    FamilySpec family_spec() const;
    std::vector<long> effective_n_values() const;
    OutputFormat effective_format() const;
};

// Report text for a validated config. Throws on failure.
std::string render_report(const RunConfig& config);

// Runs a config end to end: writes the report to `out` (or to
// config.output_path) and diagnostics to `err`. Returns the exit status:
// 0 on success, 1 when a computation fails or the output cannot be
// written, 2 for an invalid configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace stirling
