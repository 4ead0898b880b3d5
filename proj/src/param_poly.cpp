#include "stirling/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

SymbolContext::SymbolContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) {
            throw DomainError("invalid parameter symbol '" + n + "'");
        }
        if (!seen.insert(n).second) {
            throw DomainError("duplicate parameter symbol '" + n + "'");
        }
    }
}

std::optional<std::size_t> SymbolContext::index_of(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const SymbolContext>(std::move(names));
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParamPoly::ParamPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw DomainError("null symbol context");
}

ParamPoly::ParamPoly(ContextPtr ctx, const Rational& constant) : ParamPoly(std::move(ctx)) {
    if (!constant.is_zero()) {
        terms_.emplace(Exponents(ctx_->size(), 0), constant);
    }
}

ParamPoly ParamPoly::symbol(ContextPtr ctx, std::string_view name) {
    ParamPoly p(std::move(ctx));
    Exponents e(p.ctx_->size(), 0);
    e[p.slot(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

std::size_t ParamPoly::slot(std::string_view name) const {
    const auto idx = ctx_->index_of(name);
    if (!idx) throw UnknownSymbol("unknown parameter symbol '" + std::string(name) + "'");
    return *idx;
}

void ParamPoly::require_same_context(const ParamPoly& o) const {
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) {
        throw ContextMismatch("polynomials over different symbol contexts");
    }
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::optional<Rational> ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

bool ParamPoly::depends_on(std::string_view name) const { return degree_in(name) > 0; }

unsigned ParamPoly::degree_in(std::string_view name) const {
    const auto i = slot(name);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[i]);
    return d;
}

ParamPoly ParamPoly::coefficient_of(std::string_view name, unsigned power) const {
    const auto i = slot(name);
    ParamPoly out(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != power) continue;
        Exponents reduced = e;
        reduced[i] = 0;
        out.add_term(std::move(reduced), c);
    }
    return out;
}

void ParamPoly::add_term(Exponents exps, const Rational& coeff) {
    if (exps.size() != ctx_->size()) {
        throw ContextMismatch("exponent vector length does not match context");
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    require_same_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    require_same_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    a.require_same_context(b);
    ParamPoly out(a.ctx_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    a.require_same_context(b);
    return a.terms_ == b.terms_;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += '*';
            monomial += ctx_->names()[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            os << mag.str();
        } else if (mag == Rational(1)) {
            os << monomial;
        } else {
            os << mag.str() << '*' << monomial;
        }
    }
    return os.str();
}

ParamPoly poly_add(const ParamPoly& p, const ParamPoly& q) { return p + q; }

ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q) { return p * q; }

ParamPoly poly_substitute(const ParamPoly& p, std::string_view sym, const Rational& value) {
    const auto idx = p.context()->index_of(sym);
    if (!idx) throw UnknownSymbol("unknown parameter symbol '" + std::string(sym) + "'");
    ParamPoly out(p.context());
    for (const auto& [e, c] : p.terms()) {
        Exponents reduced = e;
        const unsigned power = reduced[*idx];
        reduced[*idx] = 0;
        out.add_term(std::move(reduced), c * value.pow(power));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

}  // namespace stirling
