#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stirling/param_poly.hpp"

namespace stirling {

// Truncated Laurent series  sum_{k=min_exp}^{trunc_order} c_k x^k + O(x^{trunc_order+1})
// in x = 1/n with ParamPoly coefficients. Every operation derives the
// tightest truncation order its result is valid to.
class LaurentSeries {
public:
    // Zero series known through x^trunc_order.
    LaurentSeries(ContextPtr ctx, int trunc_order);
    LaurentSeries(ContextPtr ctx, int min_exp, std::vector<ParamPoly> coeffs, int trunc_order);

    // coeff * x^exponent, known through x^trunc_order.
    static LaurentSeries monomial(ContextPtr ctx, int exponent, const ParamPoly& coeff,
                                  int trunc_order);
    static LaurentSeries monomial(ContextPtr ctx, int exponent, const Rational& coeff,
                                  int trunc_order);

    const ContextPtr& context() const { return ctx_; }
    int min_exp() const { return min_exp_; }
    int trunc_order() const { return trunc_order_; }
    const std::vector<ParamPoly>& coeffs() const { return coeffs_; }

    // Coefficient of x^k; zero below min_exp. Throws past trunc_order.
    ParamPoly coeff(int k) const;

    bool is_zero() const;
    // Smallest exponent with a nonzero coefficient.
    std::optional<int> valuation() const;

    // Leading zeros trimmed; trunc_order unchanged.
    LaurentSeries normalized() const;
    // Drops everything past x^order (order may not exceed trunc_order).
    LaurentSeries truncated(int order) const;

    LaurentSeries substitute(std::string_view sym, const Rational& value) const;

    // "(-alpha + 1/12)*x^2 + (alpha - 1/12)*x^3 + O(x^4)"
    std::string str() const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    ContextPtr ctx_;
    int min_exp_;
    int trunc_order_;
    std::vector<ParamPoly> coeffs_;
};

LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_neg(const LaurentSeries& f);
LaurentSeries series_scale(const LaurentSeries& f, const ParamPoly& s);
LaurentSeries series_scale(const LaurentSeries& f, const Rational& s);
LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g);

// Multiplication by x^k.
LaurentSeries series_shift_x(const LaurentSeries& f, int k);

// ln(1 + u) for u with positive valuation.
LaurentSeries series_log1p(const LaurentSeries& u);

// f(g(x)) for a power series f (min_exp >= 0) and g with valuation >= 1.
LaurentSeries series_compose(const LaurentSeries& f, const LaurentSeries& g);

// f evaluated at n+1, i.e. composed with x/(1+x).
LaurentSeries series_shift_n(const LaurentSeries& f);

// (exponent, coefficient) of the first nonvanishing term.
std::pair<int, ParamPoly> leading_term(const LaurentSeries& f);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return series_add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return series_sub(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f) { return series_neg(f); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return series_mul(f, g); }

std::ostream& operator<<(std::ostream& os, const LaurentSeries& f);

}  // namespace stirling
