#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "stirling/rational.hpp"

namespace stirling {

inline constexpr int kDefaultDigits = 60;
inline constexpr int kMinDigits = 10;

// Arbitrary-precision real carrying its working precision in decimal digits.
// Values are accurate to at least precision_digits - 2 significant digits
// through the operation chains used in this library.
class BigFloat {
public:
    explicit BigFloat(int digits = kDefaultDigits);
    BigFloat(long value, int digits);
    BigFloat(const BigInt& value, int digits);
    BigFloat(const Rational& value, int digits);
    static BigFloat parse(std::string_view text, int digits);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    int precision_digits() const { return digits_; }
    mpfr_prec_t precision_bits() const { return mpfr_get_prec(value_); }
    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

    // Same value rounded (or zero-extended) to another precision.
    BigFloat with_precision(int digits) const;

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    BigFloat abs() const;
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // Nearest integer; throws when it does not fit a long.
    long to_long() const;

    // Scientific notation with `sig_digits` significant digits, e.g. "-5.7954e-11".
    std::string to_scientific(int sig_digits) const;
    // Full working precision in scientific notation.
    std::string str() const { return to_scientific(digits_); }

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat& operator*=(long s);
    BigFloat& operator/=(long s);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator*(BigFloat a, long s) { return a *= s; }
    friend BigFloat operator/(BigFloat a, long s) { return a /= s; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
    void reset_precision(int digits);

    int digits_;
    mpfr_t value_;
};

// Binary precision used for a given decimal precision (includes guard bits).
mpfr_prec_t bits_for_digits(int digits);

BigFloat const_e(int digits);
BigFloat const_pi(int digits);
BigFloat const_ln2(int digits);

BigFloat bf_exp(const BigFloat& x);
BigFloat bf_ln(const BigFloat& x);
BigFloat bf_sqrt(const BigFloat& x);
BigFloat bf_pow(const BigFloat& x, const BigFloat& y);

// |a - b| / max(|a|, |b|) expressed as agreeing decimal digits (capped at
// the smaller working precision; identical values give that cap).
double agreeing_digits(const BigFloat& a, const BigFloat& b);

struct ExactFactorial {
    long n;
    BigInt value;
};

ExactFactorial factorial(long n);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace stirling
