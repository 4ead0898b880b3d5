#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stirling {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);

    // Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const;
    Rational pow(unsigned exponent) const;

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_class value_;
};

// Canonical rational num/den; throws DomainError when den == 0.
Rational rat(const BigInt& num, const BigInt& den);
Rational rat(long num, long den);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stirling
