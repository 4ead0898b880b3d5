#include "stirling/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

void require_same_context(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.context() != g.context() && !(*f.context() == *g.context())) {
        throw ContextMismatch("series over different symbol contexts");
    }
}

// Valuation, or trunc_order + 1 for a series that is zero to truncation.
int effective_valuation(const LaurentSeries& f) {
    return f.valuation().value_or(f.trunc_order() + 1);
}

}  // namespace

LaurentSeries::LaurentSeries(ContextPtr ctx, int trunc_order)
    : ctx_(std::move(ctx)), min_exp_(trunc_order), trunc_order_(trunc_order) {
    coeffs_.emplace_back(ctx_);
}

LaurentSeries::LaurentSeries(ContextPtr ctx, int min_exp, std::vector<ParamPoly> coeffs,
                             int trunc_order)
    : ctx_(std::move(ctx)), min_exp_(min_exp), trunc_order_(trunc_order), coeffs_(std::move(coeffs)) {
    if (trunc_order_ < min_exp_) {
        throw DomainError("series truncation order below its minimum exponent");
    }
    const auto want = static_cast<std::size_t>(trunc_order_ - min_exp_ + 1);
    if (coeffs_.size() > want) {
        throw DomainError("series has coefficients past its truncation order");
    }
    for (const auto& c : coeffs_) {
        if (c.context() != ctx_ && !(*c.context() == *ctx_)) {
            throw ContextMismatch("series coefficient over a different symbol context");
        }
    }
    while (coeffs_.size() < want) coeffs_.emplace_back(ctx_);
}

LaurentSeries LaurentSeries::monomial(ContextPtr ctx, int exponent, const ParamPoly& coeff,
                                      int trunc_order) {
    if (exponent > trunc_order) return LaurentSeries(std::move(ctx), trunc_order);
    return LaurentSeries(std::move(ctx), exponent, {coeff}, trunc_order);
}

LaurentSeries LaurentSeries::monomial(ContextPtr ctx, int exponent, const Rational& coeff,
                                      int trunc_order) {
    ParamPoly c(ctx, coeff);
    return monomial(std::move(ctx), exponent, c, trunc_order);
}

ParamPoly LaurentSeries::coeff(int k) const {
    if (k > trunc_order_) {
        throw TruncationExhausted("coefficient x^" + std::to_string(k) + " lies past truncation order " +
                                  std::to_string(trunc_order_));
    }
    if (k < min_exp_) return ParamPoly(ctx_);
    return coeffs_[static_cast<std::size_t>(k - min_exp_)];
}

bool LaurentSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ParamPoly& c) { return c.is_zero(); });
}

std::optional<int> LaurentSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return min_exp_ + static_cast<int>(i);
    }
    return std::nullopt;
}

LaurentSeries LaurentSeries::normalized() const {
    const int v = valuation().value_or(trunc_order_);
    if (v == min_exp_) return *this;
    std::vector<ParamPoly> kept(coeffs_.begin() + (v - min_exp_), coeffs_.end());
    return LaurentSeries(ctx_, v, std::move(kept), trunc_order_);
}

LaurentSeries LaurentSeries::truncated(int order) const {
    if (order > trunc_order_) {
        throw TruncationExhausted("cannot extend series known through x^" + std::to_string(trunc_order_) +
                                  " to x^" + std::to_string(order));
    }
    if (order < min_exp_) return LaurentSeries(ctx_, order);
    std::vector<ParamPoly> kept(coeffs_.begin(), coeffs_.begin() + (order - min_exp_ + 1));
    return LaurentSeries(ctx_, min_exp_, std::move(kept), order);
}

LaurentSeries LaurentSeries::substitute(std::string_view sym, const Rational& value) const {
    std::vector<ParamPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(poly_substitute(c, sym, value));
    return LaurentSeries(ctx_, min_exp_, std::move(out), trunc_order_);
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const ParamPoly& c = coeffs_[i];
        if (c.is_zero()) continue;
        const int k = min_exp_ + static_cast<int>(i);
        std::string power;
        if (k == 1) {
            power = "x";
        } else if (k != 0) {
            power = "x^" + std::to_string(k);
        }

        const auto constant = c.constant_value();
        if (constant) {
            const bool negative = constant->sign() < 0;
            const Rational mag = constant->abs();
            if (first) {
                if (negative) os << '-';
            } else {
                os << (negative ? " - " : " + ");
            }
            if (power.empty()) {
                os << mag.str();
            } else if (mag == Rational(1)) {
                os << power;
            } else {
                os << mag.str() << '*' << power;
            }
        } else {
            if (!first) os << " + ";
            if (c.terms().size() == 1) {
                os << c.str();
            } else {
                os << '(' << c.str() << ')';
            }
            if (!power.empty()) os << '*' << power;
        }
        first = false;
    }
    if (!first) os << " + ";
    const int next = trunc_order_ + 1;
    os << "O(" << (next == 0 ? std::string("1") : next == 1 ? std::string("x") : "x^" + std::to_string(next))
       << ')';
    return os.str();
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_context(a, b);
    if (a.trunc_order_ != b.trunc_order_) return false;
    const int lo = std::min(a.min_exp_, b.min_exp_);
    for (int k = lo; k <= a.trunc_order_; ++k) {
        if (!(a.coeff(k) == b.coeff(k))) return false;
    }
    return true;
}

LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_context(f, g);
    const int trunc = std::min(f.trunc_order(), g.trunc_order());
    const int lo = std::min({f.min_exp(), g.min_exp(), trunc});
    std::vector<ParamPoly> out;
    out.reserve(static_cast<std::size_t>(trunc - lo + 1));
    for (int k = lo; k <= trunc; ++k) out.push_back(f.coeff(k) + g.coeff(k));
    return LaurentSeries(f.context(), lo, std::move(out), trunc);
}

LaurentSeries series_neg(const LaurentSeries& f) { return series_scale(f, Rational(-1)); }

LaurentSeries series_sub(const LaurentSeries& f, const LaurentSeries& g) {
    return series_add(f, series_neg(g));
}

LaurentSeries series_scale(const LaurentSeries& f, const ParamPoly& s) {
    std::vector<ParamPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c * s);
    return LaurentSeries(f.context(), f.min_exp(), std::move(out), f.trunc_order());
}

LaurentSeries series_scale(const LaurentSeries& f, const Rational& s) {
    std::vector<ParamPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c * s);
    return LaurentSeries(f.context(), f.min_exp(), std::move(out), f.trunc_order());
}

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_context(f, g);
    const int vf = effective_valuation(f);
    const int vg = effective_valuation(g);
    // f = F + O(x^{Tf+1}) with F of valuation vf, likewise g; the error terms
    // contribute from x^{Tf+1+vg} and x^{Tg+1+vf} on.
    const int trunc = std::min(f.trunc_order() + vg, g.trunc_order() + vf);
    const int lo = std::min(vf + vg, trunc);
    std::vector<ParamPoly> out(static_cast<std::size_t>(trunc - lo + 1), ParamPoly(f.context()));
    for (int i = vf; i <= f.trunc_order(); ++i) {
        const ParamPoly& a = f.coeffs()[static_cast<std::size_t>(i - f.min_exp())];
        if (a.is_zero()) continue;
        for (int j = vg; j <= g.trunc_order() && i + j <= trunc; ++j) {
            const ParamPoly& b = g.coeffs()[static_cast<std::size_t>(j - g.min_exp())];
            if (b.is_zero()) continue;
            out[static_cast<std::size_t>(i + j - lo)] += a * b;
        }
    }
    return LaurentSeries(f.context(), lo, std::move(out), trunc);
}

LaurentSeries series_shift_x(const LaurentSeries& f, int k) {
    return LaurentSeries(f.context(), f.min_exp() + k, f.coeffs(), f.trunc_order() + k);
}

LaurentSeries series_log1p(const LaurentSeries& u) {
    const auto v = u.valuation();
    if (!v) return LaurentSeries(u.context(), u.trunc_order());
    if (*v < 0) {
        throw DomainError("log1p argument has negative powers of x");
    }
    if (*v == 0) {
        throw DomainError("log1p argument has a nonzero constant term");
    }
    const int trunc = u.trunc_order();
    LaurentSeries result(u.context(), trunc);
    LaurentSeries power = u.normalized();
    for (int j = 1; j * (*v) <= trunc; ++j) {
        const Rational weight = rat(j % 2 == 1 ? 1 : -1, j);
        result = series_add(result, series_scale(power, weight));
        power = series_mul(power, u).truncated(trunc);
    }
    return result.truncated(trunc);
}

LaurentSeries series_compose(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_context(f, g);
    const LaurentSeries fn = f.normalized();
    if (fn.min_exp() < 0 && !fn.is_zero()) {
        throw DomainError("composition requires a power series (no negative exponents)");
    }
    const auto vg = g.valuation();
    if (vg && *vg < 1) {
        throw DomainError("inner series of a composition must vanish at x = 0");
    }
    // An O(x^{Tg+1}) error in g enters through the linear term of f.
    const int trunc = std::min(f.trunc_order(), g.trunc_order());
    const ContextPtr& ctx = f.context();
    if (fn.is_zero() || trunc < 0) return LaurentSeries(ctx, trunc);

    // Horner: ((c_T g + c_{T-1}) g + ...) g + c_0.
    LaurentSeries acc(ctx, trunc);
    for (int k = trunc; k >= 0; --k) {
        acc = series_mul(acc, g);
        acc = series_add(acc.truncated(std::min(acc.trunc_order(), trunc)),
                         LaurentSeries::monomial(ctx, 0, fn.coeff(k), trunc));
    }
    return acc.truncated(trunc);
}

LaurentSeries series_shift_n(const LaurentSeries& f) {
    const LaurentSeries fn = f.normalized();
    if (fn.min_exp() < 0 && !fn.is_zero()) {
        throw DomainError("shift_n requires min_exp >= 0; shift Laurent parts with series_shift_x");
    }
    const int trunc = f.trunc_order();
    if (trunc < 0) return LaurentSeries(f.context(), trunc);
    // x/(1+x) = x - x^2 + x^3 - ...
    std::vector<ParamPoly> geo;
    for (int k = 1; k <= std::max(trunc, 1); ++k) {
        geo.emplace_back(f.context(), Rational(k % 2 == 1 ? 1 : -1));
    }
    const LaurentSeries s(f.context(), 1, std::move(geo), std::max(trunc, 1));
    return series_compose(fn, s);
}

std::pair<int, ParamPoly> leading_term(const LaurentSeries& f) {
    const auto v = f.valuation();
    if (!v) {
        throw TruncationExhausted("series vanishes through x^" + std::to_string(f.trunc_order()));
    }
    return {*v, f.coeff(*v)};
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& f) { return os << f.str(); }

}  // namespace stirling
