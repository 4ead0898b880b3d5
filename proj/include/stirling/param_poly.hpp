#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

// Ordered, immutable list of parameter names. Every ParamPoly refers to
// one of these; exponent vectors carry one slot per declared name.
class SymbolContext {
public:
    explicit SymbolContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const SymbolContext&, const SymbolContext&) = default;

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const SymbolContext>;

ContextPtr make_context(std::vector<std::string> names);

using Exponents = std::vector<std::uint32_t>;

// Graded-lexicographic "greater": higher total degree first, ties broken
// lexicographically with earlier symbols dominating.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial with Rational coefficients over a SymbolContext.
// Zero coefficients are never stored.
class ParamPoly {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    explicit ParamPoly(ContextPtr ctx);
    ParamPoly(ContextPtr ctx, const Rational& constant);

    static ParamPoly symbol(ContextPtr ctx, std::string_view name);

    const ContextPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value when the polynomial has no symbolic part.
    std::optional<Rational> constant_value() const;
    bool depends_on(std::string_view name) const;
    unsigned degree_in(std::string_view name) const;
    // Coefficient of name^power, as a polynomial free of `name`.
    ParamPoly coefficient_of(std::string_view name, unsigned power) const;

    void add_term(Exponents exps, const Rational& coeff);

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& s);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
    friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b);

    // Terms in graded-lex order, e.g. "3/2*alpha^2 - alpha - 3*beta + 3/40".
    std::string str() const;

private:
    void require_same_context(const ParamPoly& o) const;
    std::size_t slot(std::string_view name) const;

    ContextPtr ctx_;
    Terms terms_;
};

ParamPoly poly_add(const ParamPoly& p, const ParamPoly& q);
ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q);
// Replaces `sym` by `value`; the result no longer involves `sym`.
ParamPoly poly_substitute(const ParamPoly& p, std::string_view sym, const Rational& value);

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace stirling
