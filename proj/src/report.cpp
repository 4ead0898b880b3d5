#include "stirling/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stirling/errors.hpp"
#include "stirling/rate_analysis.hpp"

namespace stirling {

namespace {

using nlohmann::json;

const std::vector<long> kDefaultN{10, 50, 100, 500};
const std::vector<long> kDefaultRateN{100, 200, 400, 800, 1600};

FormulaId optimal_formula(FamilyId id) {
    switch (id) {
        case FamilyId::MorticiAB: return FormulaId::MorticiEq2Opt;
        case FamilyId::MorticiA: return FormulaId::MorticiEq1;
        case FamilyId::SqrtCorrection: return FormulaId::Eq5;
    }
    throw DomainError("unknown family");
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

struct ErrorRow {
    long n;
    FormulaId formula;
    std::string value;
};

std::vector<ErrorRow> error_rows(const std::vector<long>& ns, const std::vector<FormulaId>& formulas,
                                 const RunConfig& cfg) {
    std::vector<ErrorRow> rows;
    for (long n : ns) {
        for (FormulaId f : formulas) {
            const ErrorRecord r = relative_error(f, n, cfg.precision);
            rows.push_back({n, f, r.relative_error.to_scientific(cfg.sig_digits)});
        }
    }
    return rows;
}

std::string error_rows_long(const std::vector<ErrorRow>& rows, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "n,formula_id,relative_error\n";
        for (const auto& r : rows) os << r.n << ',' << describe(r.formula).key << ',' << r.value << '\n';
        return os.str();
    }
    json records = json::array();
    for (const auto& r : rows) {
        records.push_back({{"n", r.n}, {"formula_id", describe(r.formula).key}, {"relative_error", r.value}});
    }
    return json{{"records", records}}.dump(2) + "\n";
}

std::string render_expand(const RunConfig& cfg) {
    const LaurentSeries s = build_difference_series(cfg.family_spec(), cfg.order);
    switch (cfg.effective_format()) {
        case OutputFormat::Markdown: return s.str() + "\n";
        case OutputFormat::Csv: {
            std::ostringstream os;
            os << "exponent,coefficient\n";
            for (int k = s.min_exp(); k <= s.trunc_order(); ++k) {
                const ParamPoly c = s.coeff(k);
                if (!c.is_zero()) os << k << ',' << csv_quote(c.str()) << '\n';
            }
            return os.str();
        }
        case OutputFormat::Json: {
            json coeffs = json::array();
            for (int k = s.min_exp(); k <= s.trunc_order(); ++k) {
                const ParamPoly c = s.coeff(k);
                if (!c.is_zero()) coeffs.push_back({{"exponent", k}, {"coefficient", c.str()}});
            }
            return json{{"family", family_name(cfg.family)},
                        {"order", cfg.order},
                        {"series", s.str()},
                        {"coefficients", coeffs}}
                       .dump(2) +
                   "\n";
        }
    }
    return {};
}

std::string render_optimize(const RunConfig& cfg) {
    const OptimizationResult r = optimize_family(cfg.family_spec(), cfg.order);
    std::ostringstream os;
    switch (cfg.effective_format()) {
        case OutputFormat::Json: {
            json j = to_json(r);
            j["family"] = family_name(cfg.family);
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv:
            os << "key,value\n";
            for (const auto& a : r.assignments) os << a.symbol << ',' << a.value.str() << '\n';
            os << "sequence_exponent," << r.rate.sequence_exponent << '\n';
            os << "sequence_limit," << csv_quote(r.rate.sequence_limit.str()) << '\n';
            return os.str();
        case OutputFormat::Markdown:
            os << "| parameter | value |\n|---|---|\n";
            for (const auto& a : r.assignments) os << "| " << a.symbol << " | " << a.value.str() << " |\n";
            os << "\nleading difference term: (" << r.rate.difference_limit.str() << ")*x^"
               << r.rate.difference_exponent << "\n";
            os << "rate: n^-" << r.rate.sequence_exponent << ", limit " << r.rate.sequence_limit.str() << "\n";
            return os.str();
    }
    return {};
}

std::string render_rate(const RunConfig& cfg) {
    const OptimizationResult opt = optimize_family(cfg.family_spec(), cfg.order);
    const FormulaId formula = optimal_formula(cfg.family);
    std::vector<RatePoint> points;
    for (long n : cfg.effective_n_values()) points.push_back({n, log_error(formula, n, cfg.precision)});
    const EmpiricalRate emp = estimate_rate_empirical(points);

    const auto limit_value = opt.rate.sequence_limit.constant_value();
    const std::string symbolic_limit = opt.rate.sequence_limit.str();
    const std::string symbolic_limit_num =
        limit_value ? BigFloat(*limit_value, cfg.precision).to_scientific(cfg.sig_digits) : symbolic_limit;
    const std::string emp_order = emp.order.to_scientific(cfg.sig_digits);
    const std::string emp_limit = emp.limit.to_scientific(cfg.sig_digits);

    std::ostringstream os;
    switch (cfg.effective_format()) {
        case OutputFormat::Markdown:
            os << "| quantity | symbolic | empirical |\n|---|---|---|\n";
            os << "| rate exponent | " << opt.rate.sequence_exponent << " | " << emp_order << " |\n";
            os << "| limit | " << symbolic_limit << " (" << symbolic_limit_num << ") | " << emp_limit << " |\n";
            return os.str();
        case OutputFormat::Csv:
            os << "quantity,symbolic,empirical\n";
            os << "rate_exponent," << opt.rate.sequence_exponent << ',' << emp_order << '\n';
            os << "limit," << symbolic_limit << ',' << emp_limit << '\n';
            return os.str();
        case OutputFormat::Json: {
            json ns = cfg.effective_n_values();
            return json{{"family", family_name(cfg.family)},
                        {"formula_id", describe(formula).key},
                        {"symbolic", to_json(opt.rate)},
                        {"empirical", {{"order", emp_order}, {"limit", emp_limit}, {"n_values", ns}}}}
                       .dump(2) +
                   "\n";
        }
    }
    return {};
}

std::string render_table(const RunConfig& cfg) {
    const std::vector<FormulaId> cols{FormulaId::MorticiEq1, FormulaId::Ramanujan, FormulaId::Eq5};
    const auto ns = cfg.effective_n_values();
    const auto rows = error_rows(ns, cols, cfg);
    const OutputFormat fmt = cfg.effective_format();
    if (fmt != OutputFormat::Markdown) return error_rows_long(rows, fmt);

    std::ostringstream os;
    os << "| n | mu_n | rho_n | tau_n |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        os << "| " << ns[i];
        for (std::size_t j = 0; j < cols.size(); ++j) os << " | " << rows[i * cols.size() + j].value;
        os << " |\n";
    }
    return os.str();
}

std::string render_compare(const RunConfig& cfg) {
    std::vector<FormulaId> formulas = cfg.formulas;
    if (formulas.empty()) formulas.assign(all_formulas().begin(), all_formulas().end());
    const auto ns = cfg.effective_n_values();
    const auto rows = error_rows(ns, formulas, cfg);
    const OutputFormat fmt = cfg.effective_format();
    if (fmt != OutputFormat::Markdown) return error_rows_long(rows, fmt);

    std::ostringstream os;
    os << "| formula |";
    for (long n : ns) os << " n = " << n << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < ns.size(); ++i) os << "---|";
    os << '\n';
    for (std::size_t j = 0; j < formulas.size(); ++j) {
        os << "| " << describe(formulas[j]).key;
        for (std::size_t i = 0; i < ns.size(); ++i) os << " | " << rows[i * formulas.size() + j].value;
        os << " |\n";
    }
    return os.str();
}

}  // namespace

Subcommand parse_subcommand(std::string_view name) {
    if (name == "expand") return Subcommand::Expand;
    if (name == "optimize") return Subcommand::Optimize;
    if (name == "rate") return Subcommand::Rate;
    if (name == "table") return Subcommand::Table;
    if (name == "compare") return Subcommand::Compare;
    throw DomainError("unknown subcommand '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
    if (name == "markdown" || name == "md") return OutputFormat::Markdown;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw DomainError("unknown output format '" + std::string(name) + "'");
}

void RunConfig::validate() const {
    if (precision < kMinDigits) throw DomainError("precision must be at least " + std::to_string(kMinDigits));
    if (sig_digits < 1) throw DomainError("--sig-digits must be positive");
    if ((subcommand == Subcommand::Expand || subcommand == Subcommand::Optimize ||
         subcommand == Subcommand::Rate) &&
        order < 2) {
        throw DomainError("order must be at least 2");
    }
    if (n_values && n_values->empty()) throw DomainError("n values must be nonempty");
    for (long n : effective_n_values()) {
        if (n < 1) throw DomainError("n values must be positive");
        if (n > max_n) {
            throw DomainError("n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(max_n));
        }
    }
    family_spec().validate();
}

FamilySpec RunConfig::family_spec() const {
    FamilySpec spec = FamilySpec::standard(family);
    for (const auto& [sym, value] : fix) {
        const auto params = family_parameters(family);
        if (std::find(params.begin(), params.end(), sym) == params.end()) {
            throw UnknownSymbol("family " + std::string(family_name(family)) + " has no parameter '" + sym + "'");
        }
        std::erase(spec.symbols, sym);
        spec.fixed[sym] = value;
    }
    return spec;
}

std::vector<long> RunConfig::effective_n_values() const {
    if (n_values) return *n_values;
    return subcommand == Subcommand::Rate ? kDefaultRateN : kDefaultN;
}

OutputFormat RunConfig::effective_format() const {
    if (format) return *format;
    return subcommand == Subcommand::Optimize ? OutputFormat::Json : OutputFormat::Markdown;
}

std::string render_report(const RunConfig& config) {
    config.validate();
    switch (config.subcommand) {
        case Subcommand::Expand: return render_expand(config);
        case Subcommand::Optimize: return render_optimize(config);
        case Subcommand::Rate: return render_rate(config);
        case Subcommand::Table: return render_table(config);
        case Subcommand::Compare: return render_compare(config);
    }
    return {};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::string report;
    try {
        report = render_report(config);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (!config.output_path) {
        out << report;
        return out ? 0 : 1;
    }
    std::ofstream file(*config.output_path);
    if (!file) {
        err << "error: cannot open " << *config.output_path << " for writing\n";
        return 1;
    }
    file << report;
    file.close();
    if (!file) {
        err << "error: failed writing " << *config.output_path << '\n';
        return 1;
    }
    return 0;
}

}  // namespace stirling
