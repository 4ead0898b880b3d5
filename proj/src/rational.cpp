#include "stirling/rational.hpp"

#include "stirling/errors.hpp"

namespace stirling {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text), 10));
        }
        return Rational(BigInt(std::string(text.substr(0, slash)), 10),
                        BigInt(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::pow(unsigned exponent) const {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational rat(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace stirling
