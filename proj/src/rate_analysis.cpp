#include "stirling/rate_analysis.hpp"

#include <algorithm>

#include "stirling/errors.hpp"

namespace stirling {

RateReport infer_rate(const LaurentSeries& diff_series) {
    auto [k, l] = leading_term(diff_series);
    if (k <= 1) {
        throw RateHypothesisViolated("difference series leads at x^" + std::to_string(k) +
                                     "; the rate rule needs exponent > 1");
    }
    ParamPoly seq_limit = l * rat(1, k - 1);
    return RateReport{k, std::move(l), k - 1, std::move(seq_limit)};
}

namespace detail {

Rational solve_for_zero(const ParamPoly& coeff, const std::string& sym) {
    if (coeff.degree_in(sym) > 1) {
        throw NonlinearElimination("leading coefficient " + coeff.str() + " is nonlinear in " + sym);
    }
    const auto slope = coeff.coefficient_of(sym, 1).constant_value();
    const auto offset = coeff.coefficient_of(sym, 0).constant_value();
    if (!slope || !offset) {
        throw NonlinearElimination("leading coefficient " + coeff.str() + " couples " + sym +
                                   " with other free parameters");
    }
    if (slope->is_zero()) {
        throw CannotImprove("leading coefficient " + coeff.str() + " does not involve " + sym);
    }
    return -*offset / *slope;
}

}  // namespace detail

OptimizationResult optimize_family(const FamilySpec& spec, int order) {
    LaurentSeries series = build_difference_series(spec, order);
    std::vector<std::string> remaining = spec.symbols;
    std::vector<Assignment> assignments;

    while (!remaining.empty()) {
        const auto [k, coeff] = leading_term(series);
        const auto it = std::find_if(remaining.begin(), remaining.end(),
                                     [&](const std::string& s) { return coeff.depends_on(s); });
        if (it == remaining.end()) {
            throw CannotImprove("leading coefficient " + coeff.str() + " at x^" + std::to_string(k) +
                                " involves no free parameter; family cannot be improved further at order " +
                                std::to_string(order));
        }
        const Rational value = detail::solve_for_zero(coeff, *it);
        assignments.push_back({*it, value});
        series = series.substitute(*it, value).normalized();
        remaining.erase(it);
        if (series.is_zero()) {
            throw TruncationExhausted("series vanishes through x^" + std::to_string(order) + " after " +
                                      assignments.back().symbol + " = " + value.str());
        }
    }

    RateReport rate = infer_rate(series);
    return OptimizationResult{std::move(assignments), std::move(series), std::move(rate)};
}

EmpiricalRate estimate_rate_empirical(std::span<const RatePoint> points) {
    if (points.size() < 3) throw DomainError("empirical rate needs at least 3 points");
    int digits = points.front().value.precision_digits();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].value.is_zero()) throw DomainError("empirical rate needs nonzero values");
        if (points[i].n <= 0) throw DomainError("empirical rate needs positive n");
        if (i > 0 && points[i].n <= points[i - 1].n) throw DomainError("n must be strictly increasing");
        digits = std::min(digits, points[i].value.precision_digits());
    }

    const auto m = static_cast<long>(points.size());
    BigFloat sx(digits), sy(digits), sxx(digits), sxy(digits);
    for (const auto& p : points) {
        const BigFloat lx = bf_ln(BigFloat(p.n, digits));
        const BigFloat ly = bf_ln(p.value.abs().with_precision(digits));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const BigFloat denom = sxx * m - sx * sx;
    const BigFloat slope = (sxy * m - sx * sy) / denom;
    BigFloat order = -slope;

    const long rounded = order.to_long();
    const RatePoint& last = points.back();
    BigFloat limit = last.value.with_precision(digits);
    const BigFloat n_last(last.n, digits);
    for (long i = 0; i < std::abs(rounded); ++i) {
        if (rounded > 0) {
            limit *= n_last;
        } else {
            limit /= n_last;
        }
    }
    return EmpiricalRate{std::move(order), std::move(limit)};
}

BigFloat evaluate_at(const LaurentSeries& series, long n, int digits) {
    if (n <= 0) throw DomainError("series evaluation needs positive n");
    const BigFloat inv_n = BigFloat(1, digits) / BigFloat(n, digits);
    BigFloat sum(digits);
    for (int k = series.trunc_order(); k >= series.min_exp(); --k) {
        const auto c = series.coeff(k).constant_value();
        if (!c) throw DomainError("coefficient of x^" + std::to_string(k) + " still has free parameters");
        sum = sum * inv_n + BigFloat(*c, digits);
    }
    // Horner above produced sum_k c_k x^{k - min_exp}.
    const int shift = series.min_exp();
    const BigFloat n_big(n, digits);
    for (int i = 0; i < std::abs(shift); ++i) {
        if (shift > 0) {
            sum /= n_big;
        } else {
            sum *= n_big;
        }
    }
    return sum;
}

nlohmann::json to_json(const RateReport& report) {
    return {
        {"difference_exponent", report.difference_exponent},
        {"difference_limit", report.difference_limit.str()},
        {"sequence_exponent", report.sequence_exponent},
        {"sequence_limit", report.sequence_limit.str()},
    };
}

nlohmann::json to_json(const OptimizationResult& result) {
    nlohmann::json assignments = nlohmann::json::array();
    for (const auto& a : result.assignments) {
        assignments.push_back({{"symbol", a.symbol}, {"value", a.value.str()}});
    }
    nlohmann::json out = to_json(result.rate);
    out["assignments"] = std::move(assignments);
    out["final_series"] = result.final_series.str();
    return out;
}

}  // namespace stirling
