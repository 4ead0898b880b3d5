// One line per acceptance criterion; exit status is non-zero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stirling/bigfloat.hpp"
#include "stirling/error_series.hpp"
#include "stirling/errors.hpp"
#include "stirling/formula_catalog.hpp"
#include "stirling/rate_analysis.hpp"
#include "test_helpers.hpp"

using namespace stirling;
using stirling::testing::kPropertyCases;
using stirling::testing::random_poly;
using stirling::testing::random_rational;
using stirling::testing::random_series;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

ParamPoly constant(const ContextPtr& ctx, long p, long q) { return ParamPoly(ctx, rat(p, q)); }

Verdict criterion1() {
    const auto t0 = Clock::now();
    const LaurentSeries s = build_difference_series(FamilySpec::standard(FamilyId::MorticiAB), 6);
    const double elapsed = seconds_since(t0);
    const ContextPtr ctx = s.context();
    const ParamPoly a = ParamPoly::symbol(ctx, "alpha");
    const ParamPoly b = ParamPoly::symbol(ctx, "beta");

    const std::vector<std::pair<int, ParamPoly>> expected = {
        {2, constant(ctx, 1, 12) - a},
        {3, a - constant(ctx, 1, 12)},
        {4, rat(3, 2) * (a * a) - a - rat(3, 1) * b + constant(ctx, 3, 40)},
        {5, a + rat(6, 1) * b - rat(3, 1) * (a * a) - constant(ctx, 1, 15)},
        {6, -a - rat(10, 1) * b + rat(5, 1) * (a * b) + rat(5, 1) * (a * a) - rat(5, 3) * (a * a * a) +
                constant(ctx, 5, 84)},
    };
    Verdict v;
    for (const auto& [k, c] : expected) {
        if (s.coeff(k) != c) {
            v.pass = false;
            v.detail += "x^" + std::to_string(k) + " mismatch: " + s.coeff(k).str() + "; ";
        }
    }
    if (s.min_exp() != 2 || s.trunc_order() != 6) v.pass = false;
    if (elapsed >= 1.0) v.pass = false;
    v.detail += "5 coefficients exact, " + fmt_seconds(elapsed);
    return v;
}

Verdict criterion2() {
    const auto t0 = Clock::now();
    const LaurentSeries s = build_difference_series(FamilySpec::standard(FamilyId::SqrtCorrection), 8);
    const double elapsed = seconds_since(t0);
    const ContextPtr ctx = s.context();
    const ParamPoly b = ParamPoly::symbol(ctx, "b");

    const std::vector<std::pair<int, ParamPoly>> expected = {
        {6, rat(-5, 2) * b + constant(ctx, 239, 72576)},
        {7, rat(15, 2) * b - constant(ctx, 239, 24192)},
        {8, rat(-35, 2) * b + constant(ctx, 26179, 1382400)},
    };
    Verdict v;
    for (const auto& [k, c] : expected) {
        if (s.coeff(k) != c) {
            v.pass = false;
            v.detail += "x^" + std::to_string(k) + " mismatch: " + s.coeff(k).str() + "; ";
        }
    }
    if (s.min_exp() != 6) v.pass = false;
    if (elapsed >= 1.0) v.pass = false;
    v.detail += "3 coefficients exact, " + fmt_seconds(elapsed);
    return v;
}

Verdict criterion3() {
    const OptimizationResult ab = optimize_family(FamilySpec::standard(FamilyId::MorticiAB), 8);
    const OptimizationResult sq = optimize_family(FamilySpec::standard(FamilyId::SqrtCorrection), 10);
    const ContextPtr ctx = ab.final_series.context();

    Verdict v;
    v.pass = ab.assignments.size() == 2 && ab.assignments[0].symbol == "alpha" &&
             ab.assignments[0].value == rat(1, 12) && ab.assignments[1].symbol == "beta" &&
             ab.assignments[1].value == rat(1, 1440) && ab.rate.sequence_exponent == 5 &&
             ab.rate.sequence_limit == ParamPoly(ctx, rat(239, 362880)) && sq.assignments.size() == 1 &&
             sq.assignments[0].symbol == "b" && sq.assignments[0].value == rat(239, 181440);
    std::ostringstream os;
    os << "alpha=" << ab.assignments.at(0).value.str() << " beta=" << ab.assignments.at(1).value.str()
       << " rate=(" << ab.rate.sequence_exponent << ", " << ab.rate.sequence_limit.str()
       << "); b=" << sq.assignments.at(0).value.str();
    v.detail = os.str();
    return v;
}

Verdict criterion4() {
    struct Entry {
        FormulaId id;
        long n;
        const char* reference;
    };
    const Entry entries[] = {
        {FormulaId::MorticiEq1, 10, "7.0039e-7"},    {FormulaId::Ramanujan, 10, "-8.5872e-8"},
        {FormulaId::Eq5, 10, "-5.7954e-11"},         {FormulaId::MorticiEq1, 50, "5.5575e-9"},
        {FormulaId::Ramanujan, 50, "-1.4968e-10"},   {FormulaId::Eq5, 50, "-7.5191e-16"},
        {FormulaId::MorticiEq1, 100, "6.9450e-10"},  {FormulaId::Ramanujan, 100, "-9.4519e-12"},
        {FormulaId::Eq5, 100, "-5.8768e-18"},        {FormulaId::MorticiEq1, 500, "5.5556e-12"},
        {FormulaId::Ramanujan, 500, "-1.5247e-14"},  {FormulaId::Eq5, 500, "-7.5240e-23"},
    };
    const auto t0 = Clock::now();
    Verdict v;
    int matched = 0;
    for (const Entry& e : entries) {
        const BigFloat got = relative_error(e.id, e.n, 60).relative_error;
        const double expected = std::stod(e.reference);
        const double unit = std::pow(10.0, std::floor(std::log10(std::abs(expected))) - 4);
        const double units_off = std::abs(got.to_double() - expected) / unit;
        if (units_off <= 1.0) {
            ++matched;
        } else {
            v.pass = false;
            v.detail += std::string(describe(e.id).key) + "(" + std::to_string(e.n) + ")=" + got.to_scientific(5) +
                        " vs " + e.reference + "; ";
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 10.0) v.pass = false;
    v.detail += std::to_string(matched) + "/12 within one unit in the 5th digit, " + fmt_seconds(elapsed);
    return v;
}

Verdict criterion5() {
    std::vector<RatePoint> points;
    for (long n : {100L, 200L, 400L, 800L, 1600L}) {
        points.push_back({n, log_error(FormulaId::MorticiEq2Opt, n)});
    }
    const EmpiricalRate rate = estimate_rate_empirical(points);
    const double order = rate.order.to_double();

    const long n = 10000;
    const BigFloat scaled = log_error(FormulaId::MorticiEq2Opt, n) * bf_pow(BigFloat(n, 60), BigFloat(5, 60));
    const BigFloat target(rat(239, 362880), 60);
    const double rel = ((scaled - target) / target).abs().to_double();

    Verdict v;
    v.pass = std::abs(order - 5.0) <= 0.05 && rel <= 1e-3;
    v.detail = "order=" + rate.order.to_scientific(6) + ", n^5 z_n at 1e4 off by " + std::to_string(rel * 100) + "%";
    return v;
}

Verdict criterion6() {
    Verdict v;
    int ok = 0;
    for (long n = 1; n <= 1000; ++n) {
        try {
            if (check_bounds(n, 60)) {
                ++ok;
            } else {
                v.pass = false;
                v.detail += "violated at n=" + std::to_string(n) + "; ";
            }
        } catch (const Indeterminate& e) {
            v.pass = false;
            v.detail += "uncertified at n=" + std::to_string(n) + "; ";
        }
    }
    v.detail += std::to_string(ok) + "/1000 certified";
    return v;
}

// Returns the number of failing cases.
int ring_axioms(std::mt19937_64& rng) {
    const ContextPtr ctx = make_context({"alpha", "beta"});
    const ParamPoly zero(ctx), one(ctx, Rational(1));
    int failures = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const ParamPoly p = random_poly(rng, ctx), q = random_poly(rng, ctx), r = random_poly(rng, ctx);
        const bool ok = p + q == q + p && p * q == q * p && (p + q) + r == p + (q + r) &&
                        (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r && p + zero == p &&
                        p * one == p && (p - p).is_zero() && (p * zero).is_zero();
        failures += !ok;
    }
    return failures;
}

int shift_homomorphism(std::mt19937_64& rng) {
    const ContextPtr ctx = make_context({"alpha", "beta"});
    int failures = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const LaurentSeries f = random_series(rng, ctx, i % 3, 6);
        const LaurentSeries g = random_series(rng, ctx, 0, 6);
        const bool ok = series_shift_n(f + g) == series_shift_n(f) + series_shift_n(g) &&
                        series_shift_n(f * g) == series_shift_n(f) * series_shift_n(g);
        failures += !ok;
    }
    return failures;
}

LaurentSeries series_exp(const LaurentSeries& u) {
    const int trunc = u.trunc_order();
    LaurentSeries result = LaurentSeries::monomial(u.context(), 0, Rational(1), trunc);
    LaurentSeries power = result;
    Rational inv_fact(1);
    for (int j = 1; j <= trunc; ++j) {
        power = series_mul(power, u).truncated(trunc);
        inv_fact /= Rational(j);
        result = result + series_scale(power, inv_fact);
    }
    return result;
}

int log_exp_inverse(std::mt19937_64& rng) {
    const ContextPtr ctx = make_context({"alpha", "beta"});
    int failures = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const LaurentSeries u = random_series(rng, ctx, 1 + i % 2, 7);
        const LaurentSeries one_plus_u = LaurentSeries::monomial(ctx, 0, Rational(1), 7) + u;
        failures += !(series_exp(series_log1p(u)) == one_plus_u);
    }
    return failures;
}

BigFloat random_value(std::mt19937_64& rng, double lo, double hi, int digits) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::uniform_int_distribution<long> tail(1, 999999999);
    // Extra random low-order digits so inputs are not short binary fractions.
    return BigFloat::parse(std::to_string(d(rng)) + std::to_string(tail(rng)), digits);
}

int precision_escalation(std::mt19937_64& rng) {
    using Op = std::function<BigFloat(const BigFloat&, const BigFloat&)>;
    const std::vector<Op> ops = {
        [](const BigFloat& x, const BigFloat& y) { return x + y; },
        [](const BigFloat& x, const BigFloat& y) { return x - y * 3; },
        [](const BigFloat& x, const BigFloat& y) { return x * y; },
        [](const BigFloat& x, const BigFloat& y) { return x / y; },
        [](const BigFloat& x, const BigFloat&) { return bf_exp(x); },
        [](const BigFloat& x, const BigFloat&) { return bf_ln(x); },
        [](const BigFloat& x, const BigFloat&) { return bf_sqrt(x); },
        [](const BigFloat& x, const BigFloat& y) { return bf_pow(x, y); },
    };
    int failures = 0;
    for (const Op& op : ops) {
        for (int i = 0; i < kPropertyCases; ++i) {
            const int p = 20 + 10 * (i % 5);
            const std::string xs = random_value(rng, 0.01, 40.0, p).to_scientific(p);
            const std::string ys = random_value(rng, 0.01, 9.0, p).to_scientific(p);
            const BigFloat lo = op(BigFloat::parse(xs, p), BigFloat::parse(ys, p));
            const BigFloat hi = op(BigFloat::parse(xs, 2 * p + 20), BigFloat::parse(ys, 2 * p + 20));
            failures += agreeing_digits(lo, hi) < p - 2;
        }
    }
    return failures;
}

Verdict criterion7() {
    std::mt19937_64 rng(20240607);
    const int ring = ring_axioms(rng);
    const int shift = shift_homomorphism(rng);
    const int logexp = log_exp_inverse(rng);
    const int prec = precision_escalation(rng);
    Verdict v;
    v.pass = ring == 0 && shift == 0 && logexp == 0 && prec == 0;
    std::ostringstream os;
    os << "failures: ring " << ring << "/" << kPropertyCases << ", shift_n " << shift << "/" << kPropertyCases
       << ", log1p/exp " << logexp << "/" << kPropertyCases << ", precision " << prec << "/" << 8 * kPropertyCases;
    v.detail = os.str();
    return v;
}

Verdict criterion8() {
    constexpr int kOrder = 10;
    const FamilySpec spec{FamilyId::MorticiAB, {}, {{"alpha", rat(1, 12)}, {"beta", rat(1, 1440)}}};
    const LaurentSeries s = build_difference_series(spec, kOrder);

    // Remainder model: numeric - symbolic = C n^{-(order+1)} (1 + O(1/n)).
    Verdict v;
    double fitted = 0.0;
    std::ostringstream os;
    for (long n : {20L, 40L, 80L}) {
        const BigFloat numeric = log_error(FormulaId::MorticiEq2Opt, n, 60) - log_error(FormulaId::MorticiEq2Opt, n + 1, 60);
        const BigFloat symbolic = evaluate_at(s, n, 60);
        const double c = ((numeric - symbolic) * bf_pow(BigFloat(n, 60), BigFloat(kOrder + 1, 60))).to_double();
        if (n == 20) {
            fitted = c;
            v.pass = v.pass && fitted != 0.0;
        } else {
            const double ratio = c / fitted;
            v.pass = v.pass && ratio > 0.5 && ratio < 2.0;
        }
        os << "n=" << n << " C=" << c << " ";
    }
    v.detail = os.str() + "(remainder constant stable)";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i]();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("criterion %zu: %s  %s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
