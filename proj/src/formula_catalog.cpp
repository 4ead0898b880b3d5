#include "stirling/formula_catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

constexpr int kGuardDigits = 10;

constexpr std::array kAll{FormulaId::Stirling,     FormulaId::Burnside,   FormulaId::Gosper,
                          FormulaId::MorticiLower, FormulaId::MorticiUpper, FormulaId::MorticiEq1,
                          FormulaId::MorticiEq2Opt, FormulaId::Ramanujan, FormulaId::Eq5};

const std::array<FormulaDescriptor, 9>& descriptors() {
    static const std::array<FormulaDescriptor, 9> table{{
        {FormulaId::Stirling, "STIRLING", "Stirling", {}},
        {FormulaId::Burnside, "BURNSIDE", "Burnside", {}},
        {FormulaId::Gosper, "GOSPER", "Gosper", {{"shift", "1/6"}}},
        {FormulaId::MorticiLower, "MORTICI_LOWER", "Mortici lower bound", {{"p", "(3-sqrt(3))/6"}}},
        {FormulaId::MorticiUpper, "MORTICI_UPPER", "Mortici upper bound", {{"p", "(3+sqrt(3))/6"}}},
        {FormulaId::MorticiEq1, "MORTICI_EQ1", "Mortici (a = 1/(12e))", {{"a", "1/(12e)"}}},
        {FormulaId::MorticiEq2Opt,
         "MORTICI_EQ2_OPT",
         "Mortici two-parameter optimum",
         {{"a", "1/(12e)"}, {"b", "1/(1440e)"}}},
        {FormulaId::Ramanujan, "RAMANUJAN", "Ramanujan", {{"c", "1/30"}}},
        {FormulaId::Eq5,
         "EQ5",
         "Square-root corrected optimum",
         {{"a", "1/(12e)"}, {"b", "1/(1440e)"}, {"c", "239/181440"}}},
    }};
    return table;
}

// Working-precision pieces shared by the formulas.
struct Ctx {
    int wd;
    BigFloat n;
    BigFloat e;
    BigFloat pi;

    Ctx(long n_, int digits)
        : wd(digits + kGuardDigits), n(n_, wd), e(const_e(wd)), pi(const_pi(wd)) {}

    BigFloat q(long p, long r) const { return BigFloat(rat(p, r), wd); }
    BigFloat one() const { return BigFloat(1, wd); }
};

// n/e + c1/(e n) + c3/(e n^3)
BigFloat mortici_base(const Ctx& c, long c1_den, long c3_den) {
    BigFloat inner = c.n;
    if (c1_den != 0) inner += c.one() / (c.n * c1_den);
    if (c3_den != 0) inner += c.one() / (c.n * c.n * c.n * c3_den);
    return inner / c.e;
}

BigFloat omega(const Ctx& c, bool upper) {
    const BigFloat s3 = bf_sqrt(BigFloat(3, c.wd));
    return (upper ? BigFloat(3, c.wd) + s3 : BigFloat(3, c.wd) - s3) / 6;
}

// ln of the approximation at working precision c.wd.
BigFloat log_value(FormulaId id, const Ctx& c) {
    const BigFloat half = c.q(1, 2);
    const BigFloat ln_n_over_e = bf_ln(c.n / c.e);
    const BigFloat two_pi = c.pi * 2;
    switch (id) {
        case FormulaId::Stirling:
            return half * bf_ln(two_pi * c.n) + c.n * ln_n_over_e;
        case FormulaId::Burnside:
            return half * bf_ln(two_pi) + (c.n + half) * bf_ln((c.n + half) / c.e);
        case FormulaId::Gosper:
            return half * bf_ln(two_pi * (c.n + c.q(1, 6))) + c.n * ln_n_over_e;
        case FormulaId::MorticiLower:
        case FormulaId::MorticiUpper: {
            const BigFloat p = omega(c, id == FormulaId::MorticiUpper);
            return half * bf_ln(two_pi * c.e) - p + (c.n + half) * bf_ln((c.n + p) / c.e);
        }
        case FormulaId::MorticiEq1:
            return half * bf_ln(two_pi * c.n) + c.n * bf_ln(mortici_base(c, 12, 0));
        case FormulaId::MorticiEq2Opt:
            return half * bf_ln(two_pi * c.n) + c.n * bf_ln(mortici_base(c, 12, 1440));
        case FormulaId::Ramanujan: {
            const BigFloat& n = c.n;
            const BigFloat poly = n * n * n * 8 + n * n * 4 + n + c.q(1, 30);
            return half * bf_ln(c.pi) + n * ln_n_over_e + bf_ln(poly) / 6;
        }
        case FormulaId::Eq5: {
            const BigFloat n4 = c.n * c.n * c.n * c.n;
            const BigFloat shifted = c.n + c.q(239, 181440) / n4;
            return half * bf_ln(two_pi * shifted) + c.n * bf_ln(mortici_base(c, 12, 1440));
        }
    }
    throw DomainError("unknown formula id");
}

BigFloat evaluate_working(FormulaId id, const Ctx& c) {
    const BigFloat half = c.q(1, 2);
    const BigFloat two_pi = c.pi * 2;
    switch (id) {
        case FormulaId::Stirling:
            return bf_sqrt(two_pi * c.n) * bf_pow(c.n / c.e, c.n);
        case FormulaId::Burnside:
            return bf_sqrt(two_pi) * bf_pow((c.n + half) / c.e, c.n + half);
        case FormulaId::Gosper:
            return bf_sqrt(two_pi * (c.n + c.q(1, 6))) * bf_pow(c.n / c.e, c.n);
        case FormulaId::MorticiLower:
        case FormulaId::MorticiUpper: {
            const BigFloat p = omega(c, id == FormulaId::MorticiUpper);
            return bf_sqrt(two_pi * c.e) * bf_exp(-p) * bf_pow((c.n + p) / c.e, c.n + half);
        }
        case FormulaId::MorticiEq1:
            return bf_sqrt(two_pi * c.n) * bf_pow(mortici_base(c, 12, 0), c.n);
        case FormulaId::MorticiEq2Opt:
            return bf_sqrt(two_pi * c.n) * bf_pow(mortici_base(c, 12, 1440), c.n);
        case FormulaId::Ramanujan: {
            const BigFloat& n = c.n;
            const BigFloat poly = n * n * n * 8 + n * n * 4 + n + c.q(1, 30);
            return bf_sqrt(c.pi) * bf_pow(n / c.e, n) * bf_pow(poly, c.q(1, 6));
        }
        case FormulaId::Eq5: {
            const BigFloat n4 = c.n * c.n * c.n * c.n;
            const BigFloat shifted = c.n + c.q(239, 181440) / n4;
            return bf_sqrt(two_pi * shifted) * bf_pow(mortici_base(c, 12, 1440), c.n);
        }
    }
    throw DomainError("unknown formula id");
}

void check_args(long n, int digits) {
    if (n < 1) throw DomainError("formulas are evaluated for n >= 1, got " + std::to_string(n));
    if (digits < kMinDigits) throw DomainError("precision must be at least " + std::to_string(kMinDigits));
}

}  // namespace

std::span<const FormulaId> all_formulas() { return kAll; }

const FormulaDescriptor& describe(FormulaId id) {
    for (const auto& d : descriptors()) {
        if (d.id == id) return d;
    }
    throw DomainError("unknown formula id");
}

FormulaId parse_formula(std::string_view key) {
    std::string norm(key);
    for (auto& ch : norm) ch = ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (const auto& d : descriptors()) {
        if (d.key == norm) return d.id;
    }
    throw DomainError("unknown formula '" + std::string(key) + "'");
}

BigFloat evaluate(FormulaId id, long n, int digits) {
    check_args(n, digits);
    const Ctx c(n, digits);
    return evaluate_working(id, c).with_precision(digits);
}

BigFloat log_evaluate(FormulaId id, long n, int digits) {
    check_args(n, digits);
    const Ctx c(n, digits);
    return log_value(id, c).with_precision(digits);
}

BigFloat log_error(FormulaId id, long n, int digits) {
    check_args(n, digits);
    const Ctx c(n, digits);
    const BigFloat ln_fact = bf_ln(BigFloat(factorial(n).value, c.wd));
    return (ln_fact - log_value(id, c)).with_precision(digits);
}

ErrorRecord relative_error(FormulaId id, long n, int digits) {
    check_args(n, digits);
    const Ctx c(n, digits);
    const BigFloat exact(factorial(n).value, c.wd);
    BigFloat err = exact / evaluate_working(id, c) - c.one();
    return ErrorRecord{n, id, err.with_precision(digits)};
}

bool check_bounds(long n, int digits) {
    check_args(n, digits);
    const Ctx c(n, digits);
    const BigFloat exact(factorial(n).value, c.wd);
    const BigFloat above_lower = exact / evaluate_working(FormulaId::MorticiLower, c) - c.one();
    const BigFloat below_upper = exact / evaluate_working(FormulaId::MorticiUpper, c) - c.one();
    // Each ratio is good to well within 10^-(digits - 2); demand a margin above that.
    const BigFloat tol = bf_pow(BigFloat(10, c.wd), BigFloat(-(digits - 2), c.wd));

    if (above_lower < -tol || below_upper > tol) return false;
    if (above_lower > tol && below_upper < -tol) return true;
    throw Indeterminate("bound margins at n = " + std::to_string(n) + " are below " + tol.to_scientific(3));
}

}  // namespace stirling
