#include <doctest.h>

#include "stirling/errors.hpp"
#include "stirling/laurent_series.hpp"
#include "test_helpers.hpp"

using namespace stirling;
using stirling::testing::kPropertyCases;
using stirling::testing::random_series;

namespace {

const ContextPtr& ctx() {
    static const ContextPtr c = make_context({"alpha", "beta"});
    return c;
}

ParamPoly c(long p, long q = 1) { return ParamPoly(ctx(), rat(p, q)); }

LaurentSeries poly(int min_exp, std::vector<ParamPoly> coeffs, int trunc) {
    return LaurentSeries(ctx(), min_exp, std::move(coeffs), trunc);
}

// Truncated exponential, only for checking log1p: exp(u) = sum u^j / j!.
LaurentSeries series_exp(const LaurentSeries& u) {
    const int trunc = u.trunc_order();
    LaurentSeries result = LaurentSeries::monomial(u.context(), 0, Rational(1), trunc);
    LaurentSeries power = result;
    Rational inv_fact(1);
    for (int j = 1; j <= trunc; ++j) {
        power = series_mul(power, u).truncated(trunc);
        inv_fact /= Rational(j);
        result = series_add(result, series_scale(power, inv_fact));
    }
    return result;
}

}  // namespace

TEST_CASE("series_add") {
    const LaurentSeries f = poly(1, {c(1), c(1)}, 4);
    const LaurentSeries g = poly(1, {c(-1)}, 4);
    const LaurentSeries sum = series_add(f, g);
    CHECK(sum.normalized().min_exp() == 2);
    CHECK(sum.coeff(2) == c(1));
    CHECK(sum.coeff(1).is_zero());
    CHECK(sum.str() == "x^2 + O(x^5)");

    CHECK(series_add(f, LaurentSeries(ctx(), 4)) == f);
    // Result is only as good as the shorter operand.
    CHECK(series_add(f, LaurentSeries(ctx(), 2)).trunc_order() == 2);
}

TEST_CASE("series_mul") {
    const LaurentSeries x = LaurentSeries::monomial(ctx(), 1, Rational(1), 6);
    CHECK(series_mul(x, x).coeff(2) == c(1));
    CHECK(series_mul(x, x).normalized().min_exp() == 2);

    const LaurentSeries p = poly(0, {c(1), c(1)}, 6);
    const LaurentSeries m = poly(0, {c(1), c(-1)}, 6);
    const LaurentSeries prod = series_mul(p, m);
    CHECK(prod.coeff(0) == c(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == c(-1));
    for (int k = 3; k <= 6; ++k) CHECK(prod.coeff(k).is_zero());

    const LaurentSeries inv_x = LaurentSeries::monomial(ctx(), -1, Rational(1), 6);
    const LaurentSeries one = series_mul(inv_x, x);
    CHECK(one.normalized().min_exp() == 0);
    CHECK(one.coeff(0) == c(1));
    // x^{-1} * (x + O(x^7)) is known only through x^5.
    CHECK(one.trunc_order() == 5);
}

TEST_CASE("series_mul tracks the tightest truncation") {
    // (x^{-1} + O(x^3)) * (x + x^2 + O(x^4)) = 1 + x + O(x^3)
    const LaurentSeries f = LaurentSeries::monomial(ctx(), -1, Rational(1), 3);
    const LaurentSeries g = poly(1, {c(1), c(1)}, 3);
    const LaurentSeries h = series_mul(f, g);
    CHECK(h.trunc_order() == 2);
    CHECK(h.coeff(0) == c(1));
    CHECK(h.coeff(1) == c(1));
}

TEST_CASE("series_shift_x") {
    const LaurentSeries f = poly(0, {c(1), c(1)}, 5);
    const LaurentSeries s = series_shift_x(f, -1);
    CHECK(s.min_exp() == -1);
    CHECK(s.trunc_order() == 4);
    CHECK(s.coeff(-1) == c(1));
    CHECK(s.coeff(0) == c(1));
    CHECK(s.str() == "x^-1 + 1 + O(x^5)");
    CHECK(series_shift_x(f, 0) == f);
    CHECK(series_shift_x(series_shift_x(f, 2), -2) == f);
}

TEST_CASE("series_log1p") {
    CHECK(series_log1p(LaurentSeries(ctx(), 6)).is_zero());

    const LaurentSeries x = LaurentSeries::monomial(ctx(), 1, Rational(1), 6);
    const LaurentSeries mercator = series_log1p(x);
    for (int k = 1; k <= 6; ++k) CHECK(mercator.coeff(k) == c(k % 2 == 1 ? 1 : -1, k));
    CHECK(mercator.trunc_order() == 6);

    // ln(1 + alpha x^2 + beta x^4), expanded by hand through x^6:
    // alpha x^2 + (beta - alpha^2/2) x^4 + (alpha^3/3 - alpha beta) x^6
    const ParamPoly a = ParamPoly::symbol(ctx(), "alpha");
    const ParamPoly b = ParamPoly::symbol(ctx(), "beta");
    const LaurentSeries u = poly(2, {a, c(0), b}, 6);
    const LaurentSeries m = series_log1p(u);
    CHECK(m.coeff(2) == a);
    CHECK(m.coeff(3).is_zero());
    CHECK(m.coeff(4) == b - rat(1, 2) * (a * a));
    CHECK(m.coeff(5).is_zero());
    CHECK(m.coeff(6) == rat(1, 3) * (a * a * a) - a * b);

    CHECK_THROWS_AS(series_log1p(poly(0, {c(1), c(1)}, 4)), DomainError);
    CHECK_THROWS_AS(series_log1p(poly(-1, {c(1)}, 4)), DomainError);
}

TEST_CASE("series_shift_n") {
    const LaurentSeries x = LaurentSeries::monomial(ctx(), 1, Rational(1), 6);
    const LaurentSeries geo = series_shift_n(x);
    for (int k = 1; k <= 6; ++k) CHECK(geo.coeff(k) == c(k % 2 == 1 ? 1 : -1));

    const LaurentSeries konst = LaurentSeries::monomial(ctx(), 0, rat(7, 3), 6);
    CHECK(series_shift_n(konst) == konst);

    // (x - x^2 + x^3 - ...)^2 = x^2 - 2x^3 + 3x^4 - 4x^5 + 5x^6
    const LaurentSeries sq = series_shift_n(LaurentSeries::monomial(ctx(), 2, Rational(1), 6));
    CHECK(sq.coeff(2) == c(1));
    CHECK(sq.coeff(3) == c(-2));
    CHECK(sq.coeff(4) == c(3));
    CHECK(sq.coeff(5) == c(-4));
    CHECK(sq.coeff(6) == c(5));

    CHECK_THROWS_AS(series_shift_n(LaurentSeries::monomial(ctx(), -1, Rational(1), 6)), DomainError);
}

TEST_CASE("leading_term") {
    const LaurentSeries x5 = LaurentSeries::monomial(ctx(), 5, Rational(1), 8);
    const auto [k, coeff] = leading_term(x5);
    CHECK(k == 5);
    CHECK(coeff == c(1));

    // Leading zeros stored explicitly are skipped.
    const LaurentSeries padded = poly(0, {c(0), c(0), c(0), c(-2)}, 5);
    CHECK(leading_term(padded).first == 3);
    CHECK(padded.normalized().min_exp() == 3);
    CHECK(padded.normalized().trunc_order() == 5);

    CHECK_THROWS_AS(leading_term(LaurentSeries(ctx(), 7)), TruncationExhausted);
}

TEST_CASE("coefficients past truncation are not available") {
    const LaurentSeries f = poly(0, {c(1)}, 3);
    CHECK(f.coeff(3).is_zero());
    CHECK_THROWS_AS(f.coeff(4), TruncationExhausted);
    CHECK_THROWS_AS(f.truncated(5), TruncationExhausted);
}

TEST_CASE("rendering") {
    const ParamPoly a = ParamPoly::symbol(ctx(), "alpha");
    const LaurentSeries s = poly(2, {c(1, 12) - a, a - c(1, 12)}, 3);
    CHECK(s.str() == "(-alpha + 1/12)*x^2 + (alpha - 1/12)*x^3 + O(x^4)");
    CHECK(poly(4, {c(1, 480), c(-1, 240)}, 5).str() == "1/480*x^4 - 1/240*x^5 + O(x^6)");
    CHECK(LaurentSeries(ctx(), 3).str() == "O(x^4)");
    CHECK(poly(0, {c(-1), a}, 1).str() == "-1 + alpha*x + O(x^2)");
}

TEST_CASE("context mismatch") {
    const auto other = make_context({"b"});
    const LaurentSeries f = LaurentSeries::monomial(ctx(), 1, Rational(1), 4);
    const LaurentSeries g = LaurentSeries::monomial(other, 1, Rational(1), 4);
    CHECK_THROWS_AS(series_add(f, g), ContextMismatch);
    CHECK_THROWS_AS(series_mul(f, g), ContextMismatch);
}

TEST_CASE("log1p inverts exp to truncation order") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < kPropertyCases; ++i) {
        const int v = 1 + i % 2;
        const LaurentSeries u = random_series(rng, ctx(), v, 7);
        const LaurentSeries back = series_exp(series_log1p(u));
        const LaurentSeries one_plus_u = series_add(LaurentSeries::monomial(ctx(), 0, Rational(1), 7), u);
        CHECK(back == one_plus_u);
    }
}

TEST_CASE("shift_n is a ring homomorphism") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < kPropertyCases; ++i) {
        const LaurentSeries f = random_series(rng, ctx(), 0, 6);
        const LaurentSeries g = random_series(rng, ctx(), 0, 6);
        CHECK(series_shift_n(series_add(f, g)) == series_add(series_shift_n(f), series_shift_n(g)));
        CHECK(series_shift_n(series_mul(f, g)) == series_mul(series_shift_n(f), series_shift_n(g)));
    }
}

TEST_CASE("shift_n twice composes with x/(1+2x)") {
    std::mt19937_64 rng(5);
    // x/(1+2x) = x - 2x^2 + 4x^3 - ...
    std::vector<ParamPoly> inner;
    for (int k = 1; k <= 6; ++k) inner.push_back(c((k % 2 == 1 ? 1 : -1) * (1L << (k - 1))));
    const LaurentSeries twice(ctx(), 1, std::move(inner), 6);
    for (int i = 0; i < kPropertyCases; ++i) {
        const LaurentSeries f = random_series(rng, ctx(), 0, 6);
        CHECK(series_shift_n(series_shift_n(f)) == series_compose(f, twice));
    }
}
