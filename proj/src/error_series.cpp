#include "stirling/error_series.hpp"

#include <algorithm>
#include <set>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

constexpr int kOrderMargin = 2;

// ln(1 + alpha x^2 + beta x^4), i.e. ln((n/e + a/n + b/n^3) / (n/e)).
LaurentSeries log_base_correction(const ContextPtr& ctx, int trunc) {
    std::vector<ParamPoly> u{ParamPoly(ctx), ParamPoly::symbol(ctx, "alpha"), ParamPoly(ctx),
                             ParamPoly::symbol(ctx, "beta")};
    return series_log1p(LaurentSeries(ctx, 1, std::move(u), trunc));
}

}  // namespace

std::string_view family_name(FamilyId id) {
    switch (id) {
        case FamilyId::MorticiAB: return "mortici-ab";
        case FamilyId::MorticiA: return "mortici-a";
        case FamilyId::SqrtCorrection: return "sqrt-correction";
    }
    return "unknown";
}

FamilyId parse_family(std::string_view name) {
    for (auto id : {FamilyId::MorticiAB, FamilyId::MorticiA, FamilyId::SqrtCorrection}) {
        if (family_name(id) == name) return id;
    }
    throw DomainError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_parameters(FamilyId id) {
    switch (id) {
        case FamilyId::MorticiAB:
        case FamilyId::MorticiA: return {"alpha", "beta"};
        case FamilyId::SqrtCorrection: return {"alpha", "beta", "b"};
    }
    return {};
}

FamilySpec FamilySpec::standard(FamilyId id) {
    switch (id) {
        case FamilyId::MorticiAB: return {id, {"alpha", "beta"}, {}};
        case FamilyId::MorticiA: return {id, {"alpha"}, {{"beta", Rational(0)}}};
        case FamilyId::SqrtCorrection:
            return {id, {"b"}, {{"alpha", rat(1, 12)}, {"beta", rat(1, 1440)}}};
    }
    throw DomainError("unknown family");
}

void FamilySpec::validate() const {
    const auto params = family_parameters(id);
    const std::set<std::string> expected(params.begin(), params.end());
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (!seen.insert(s).second) throw DomainError("parameter '" + s + "' listed twice");
    }
    for (const auto& [s, v] : fixed) {
        if (!seen.insert(s).second) throw DomainError("parameter '" + s + "' both free and fixed");
    }
    if (seen != expected) {
        throw UnknownSymbol("free and fixed parameters do not match family " +
                            std::string(family_name(id)));
    }
    if (id == FamilyId::MorticiA) {
        const auto it = fixed.find("beta");
        if (it == fixed.end() || !it->second.is_zero()) {
            throw DomainError("mortici-a requires beta fixed to 0");
        }
    }
}

namespace detail {

LaurentSeries assemble_difference_series(const FamilySpec& spec, int order,
                                         const PipelineOptions& options) {
    spec.validate();
    const int w = order + kOrderMargin;
    const ContextPtr ctx = make_context(family_parameters(spec.id));

    const auto exact = [&](int exponent, const Rational& c) {
        return LaurentSeries::monomial(ctx, exponent, c, w + 1);
    };
    const LaurentSeries x = exact(1, 1);
    const LaurentSeries inv_x = exact(-1, 1);

    // With x = 1/n the log n terms cancel and
    //   z_n - z_{n+1} = (n + 1/2) ln(1 + x) - 1 - n M(x) + (n + 1) M(x/(1+x)),
    // where n = 1/x, n + 1 = 1/x + 1 and M = ln(1 + alpha x^2 + beta x^4).
    const LaurentSeries m = log_base_correction(ctx, w + 1);
    LaurentSeries diff = series_mul(inv_x + exact(0, rat(1, 2)), series_log1p(x));
    if (options.include_constant) diff = diff - exact(0, 1);
    diff = diff - series_shift_x(m, -1);
    diff = diff + series_mul(inv_x + exact(0, 1), series_shift_n(m));

    if (spec.id == FamilyId::SqrtCorrection) {
        // -1/2 ln(n + b/n^4) contributes -1/2 ln n - 1/2 ln(1 + b x^5); the
        // ln n piece joins the cancellation above.
        const LaurentSeries p =
            series_log1p(LaurentSeries::monomial(ctx, 5, ParamPoly::symbol(ctx, "b"), w + 1));
        diff = diff + series_scale(series_shift_n(p) - p, rat(1, 2));
    }

    for (const auto& [sym, value] : spec.fixed) diff = diff.substitute(sym, value);
    return diff.truncated(order).normalized();
}

}  // namespace detail

LaurentSeries build_difference_series(const FamilySpec& spec, int order) {
    if (order < 2) throw DomainError("difference series order must be at least 2");
    LaurentSeries diff = detail::assemble_difference_series(spec, order);
    if (diff.is_zero()) {
        throw TruncationExhausted("difference series of " + std::string(family_name(spec.id)) +
                                  " vanishes through x^" + std::to_string(order));
    }
    return diff;
}

bool has_stirling_normalization(const LaurentSeries& diff) {
    return diff.normalized().min_exp() >= 2;
}

bool validate_cancellation(const FamilySpec& spec, int order) {
    return has_stirling_normalization(detail::assemble_difference_series(spec, order));
}

}  // namespace stirling
