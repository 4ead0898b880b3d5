// Command-line front end: expand, optimize, rate, table, compare.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stirling/errors.hpp"
#include "stirling/report.hpp"

namespace {

struct Options {
    std::string family = "mortici-ab";
    std::vector<std::string> fix;
    std::vector<std::string> formulas;
    int order = 10;
    int precision = stirling::kDefaultDigits;
    std::vector<long> n_values;
    std::string format;
    int sig_digits = 5;
    std::string output;
    long max_n = 100000;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--precision", o.precision, "Working precision in decimal digits")->capture_default_str();
    sub->add_option("--format", o.format, "Output format: markdown, csv or json");
    sub->add_option("--sig-digits", o.sig_digits, "Significant digits for numeric entries")->capture_default_str();
    sub->add_option("--output,-o", o.output, "Write the report to this file instead of stdout");
}

void add_family(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "mortici-ab, mortici-a or sqrt-correction")->capture_default_str();
    sub->add_option("--order", o.order, "Series order (terms through x^order)")->capture_default_str();
    sub->add_option("--fix", o.fix, "Pin a parameter, e.g. --fix alpha=1/12 (repeatable)");
}

void add_n(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n_values, "Comma-separated n values")->delimiter(',');
    sub->add_option("--max-n", o.max_n, "Largest n accepted")->capture_default_str();
}

stirling::RunConfig to_config(const std::string& name, const Options& o) {
    stirling::RunConfig cfg;
    cfg.subcommand = stirling::parse_subcommand(name);
    cfg.family = stirling::parse_family(o.family);
    for (const auto& f : o.fix) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw stirling::DomainError("--fix expects name=value, got '" + f + "'");
        cfg.fix[f.substr(0, eq)] = stirling::Rational::parse(f.substr(eq + 1));
    }
    for (const auto& f : o.formulas) cfg.formulas.push_back(stirling::parse_formula(f));
    cfg.order = o.order;
    cfg.precision = o.precision;
    if (!o.n_values.empty()) cfg.n_values = o.n_values;
    if (!o.format.empty()) cfg.format = stirling::parse_format(o.format);
    cfg.sig_digits = o.sig_digits;
    if (!o.output.empty()) cfg.output_path = o.output;
    cfg.max_n = o.max_n;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expansion, optimization and numeric checking of Stirling-type factorial formulas"};
    app.require_subcommand(1);
    Options o;

    auto* expand = app.add_subcommand("expand", "Print the consecutive-error difference series of a family");
    add_family(expand, o);
    add_common(expand, o);

    auto* optimize = app.add_subcommand("optimize", "Eliminate leading coefficients and report the rate");
    add_family(optimize, o);
    add_common(optimize, o);

    auto* rate = app.add_subcommand("rate", "Symbolic rate next to the empirical log-log estimate");
    add_family(rate, o);
    add_n(rate, o);
    add_common(rate, o);

    auto* table = app.add_subcommand("table", "Relative errors mu_n, rho_n, tau_n");
    add_n(table, o);
    add_common(table, o);

    auto* compare = app.add_subcommand("compare", "Relative errors of every catalog formula");
    compare->add_option("--formula", o.formulas, "Restrict to these formulas (comma-separated or repeated)")->delimiter(',');
    add_n(compare, o);
    add_common(compare, o);

    CLI11_PARSE(app, argc, argv);

    stirling::RunConfig cfg;
    try {
        cfg = to_config(app.get_subcommands().front()->get_name(), o);
    } catch (const stirling::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return stirling::run(cfg, std::cout, std::cerr);
}
