#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stirling/bigfloat.hpp"
#include "stirling/error_series.hpp"

namespace stirling {

// If n^k (x_n - x_{n+1}) -> l with k > 1, then n^{k-1} x_n -> l / (k - 1).
struct RateReport {
    int difference_exponent;
    ParamPoly difference_limit;
    int sequence_exponent;
    ParamPoly sequence_limit;
};

// Applies the rule to the leading term of a difference series.
RateReport infer_rate(const LaurentSeries& diff_series);

struct Assignment {
    std::string symbol;
    Rational value;
};

struct OptimizationResult {
    std::vector<Assignment> assignments;
    LaurentSeries final_series;
    RateReport rate;
};

// Sequential coefficient elimination: each step solves the current leading
// coefficient (affine in one free parameter) for zero and substitutes,
// until no free parameters remain.
OptimizationResult optimize_family(const FamilySpec& spec, int order);

struct RatePoint {
    long n;
    BigFloat value;
};

struct EmpiricalRate {
    BigFloat order;  // p in value ~ C n^{-p}
    BigFloat limit;  // n^round(p) value at the largest n
};

// Least-squares slope of ln|value| against ln n, negated.
EmpiricalRate estimate_rate_empirical(std::span<const RatePoint> points);

// Sum of the stored terms at x = 1/n. Every coefficient must already be
// parameter-free.
BigFloat evaluate_at(const LaurentSeries& series, long n, int digits = kDefaultDigits);

nlohmann::json to_json(const RateReport& report);
nlohmann::json to_json(const OptimizationResult& result);

namespace detail {

// Root of a coefficient that is affine in `sym` and otherwise parameter-free.
Rational solve_for_zero(const ParamPoly& coeff, const std::string& sym);

}  // namespace detail

}  // namespace stirling
