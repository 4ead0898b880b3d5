#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "stirling/bigfloat.hpp"

namespace stirling {

enum class FormulaId {
    Stirling,       // sqrt(2 pi n) (n/e)^n
    Burnside,       // sqrt(2 pi) ((n + 1/2)/e)^(n + 1/2)
    Gosper,         // sqrt(2 pi (n + 1/6)) (n/e)^n
    MorticiLower,   // sqrt(2 pi e) e^-w ((n + w)/e)^(n + 1/2),  w = (3 - sqrt 3)/6
    MorticiUpper,   // same with z = (3 + sqrt 3)/6
    MorticiEq1,     // sqrt(2 pi n) (n/e + 1/(12 e n))^n
    MorticiEq2Opt,  // sqrt(2 pi n) (n/e + 1/(12 e n) + 1/(1440 e n^3))^n
    Ramanujan,      // sqrt(pi) (n/e)^n (8n^3 + 4n^2 + n + 1/30)^(1/6)
    Eq5,            // sqrt(2 pi (n + 239/(181440 n^4))) (n/e + 1/(12 e n) + 1/(1440 e n^3))^n
};

struct FormulaDescriptor {
    FormulaId id;
    std::string_view key;           // "MORTICI_EQ1"
    std::string_view display_name;
    std::map<std::string, std::string> parameters;
};

std::span<const FormulaId> all_formulas();
const FormulaDescriptor& describe(FormulaId id);
FormulaId parse_formula(std::string_view key);  // accepts "MORTICI_EQ1" or "mortici-eq1"

// Approximation of n! by the formula, to `digits` significant digits.
BigFloat evaluate(FormulaId id, long n, int digits = kDefaultDigits);

// ln of the approximation, computed without forming the approximation.
BigFloat log_evaluate(FormulaId id, long n, int digits = kDefaultDigits);

// ln n! - ln(approximation): the z_n with n! = approximation * exp(z_n).
BigFloat log_error(FormulaId id, long n, int digits = kDefaultDigits);

struct ErrorRecord {
    long n;
    FormulaId formula;
    BigFloat relative_error;  // n!/approximation - 1
};

ErrorRecord relative_error(FormulaId id, long n, int digits = kDefaultDigits);

// MorticiLower(n) < n! < MorticiUpper(n), decided with a margin above the
// arithmetic error; throws Indeterminate when the margin is too thin.
bool check_bounds(long n, int digits = kDefaultDigits);

}  // namespace stirling
