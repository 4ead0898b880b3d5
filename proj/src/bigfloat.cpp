#include "stirling/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

constexpr mpfr_prec_t kGuardBits = 16;
constexpr double kLog2Of10 = 3.32192809488736234787;

void check_digits(int digits) {
    if (digits < kMinDigits) {
        throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                          std::to_string(digits));
    }
}

// RAII scratch register at an explicit binary precision.
class Scratch {
public:
    explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
    ~Scratch() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    operator mpfr_ptr() { return v_; }  // NOLINT(google-explicit-constructor)

private:
    mpfr_t v_;
};

// floor(2^bits * atanh(1/m)) or floor(2^bits * atan(1/m)) up to one unit per
// summed term, by exact integer arithmetic.
BigInt inverse_series_fixed(unsigned long m, mpfr_prec_t bits, bool alternating) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    power /= m;
    const unsigned long m2 = m * m;
    BigInt sum = 0;
    for (unsigned long k = 0; power != 0; ++k) {
        const BigInt term = power / (2 * k + 1);
        if (alternating && (k % 2 == 1)) {
            sum -= term;
        } else {
            sum += term;
        }
        power /= m2;
    }
    return sum;
}

void fixed_to_mpfr(mpfr_ptr out, const BigInt& fixed, mpfr_prec_t bits) {
    mpfr_set_z(out, fixed.get_mpz_t(), MPFR_RNDN);
    mpfr_div_2ui(out, out, static_cast<unsigned long>(bits), MPFR_RNDN);
}

// ln 2 = 2 atanh(1/3), into `out` at its own precision.
void ln2_into(mpfr_ptr out) {
    const mpfr_prec_t bits = mpfr_get_prec(out) + 32;
    const BigInt sum = inverse_series_fixed(3, bits, false) * 2;
    fixed_to_mpfr(out, sum, bits);
}

// pi = 16 atan(1/5) - 4 atan(1/239)
void pi_into(mpfr_ptr out) {
    const mpfr_prec_t bits = mpfr_get_prec(out) + 32;
    const BigInt sum = 16 * inverse_series_fixed(5, bits, true) - 4 * inverse_series_fixed(239, bits, true);
    fixed_to_mpfr(out, sum, bits);
}

// e = sum_{k<=K} 1/k!, summed exactly as (sum_k K!/k!) / K!; the tail is
// below 1/(K! K).
void e_into(mpfr_ptr out) {
    const mpfr_prec_t bits = mpfr_get_prec(out) + 8;
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    unsigned long k_max = 1;
    BigInt k_fact = 1;
    while (k_fact * k_max <= bound) {
        ++k_max;
        k_fact *= k_max;
    }
    BigInt num = 0;
    BigInt term = 1;
    for (unsigned long k = k_max;; --k) {
        num += term;
        if (k == 0) break;
        term *= k;
    }
    mpq_class q(num, k_fact);
    q.canonicalize();
    mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN);
}

// Per-precision memo for the constants; callers see pure functions.
class ConstantCache {
public:
    using Filler = void (*)(mpfr_ptr);

    explicit ConstantCache(Filler fill) : fill_(fill) {}

    BigFloat get(int digits) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(digits);
        if (it == cache_.end()) {
            BigFloat v(digits);
            fill_(v.raw());
            it = cache_.emplace(digits, std::move(v)).first;
        }
        return it->second;
    }

    // Value at an explicit binary precision (rounded up to a multiple of 64
    // so the cache stays small).
    void into(mpfr_ptr out) {
        const mpfr_prec_t want = mpfr_get_prec(out);
        const mpfr_prec_t bucket = ((want + 63) / 64) * 64;
        std::lock_guard lock(mu_);
        auto it = by_bits_.find(bucket);
        if (it == by_bits_.end()) {
            auto holder = std::make_unique<Holder>(bucket);
            fill_(holder->v);
            it = by_bits_.emplace(bucket, std::move(holder)).first;
        }
        mpfr_set(out, it->second->v, MPFR_RNDN);
    }

private:
    struct Holder {
        explicit Holder(mpfr_prec_t bits) { mpfr_init2(v, bits); }
        ~Holder() { mpfr_clear(v); }
        Holder(const Holder&) = delete;
        Holder& operator=(const Holder&) = delete;
        mpfr_t v;
    };

    Filler fill_;
    std::mutex mu_;
    std::map<int, BigFloat> cache_;
    std::map<mpfr_prec_t, std::unique_ptr<Holder>> by_bits_;
};

ConstantCache& e_cache() {
    static ConstantCache c(&e_into);
    return c;
}

ConstantCache& pi_cache() {
    static ConstantCache c(&pi_into);
    return c;
}

ConstantCache& ln2_cache() {
    static ConstantCache c(&ln2_into);
    return c;
}

// exp(r) for |r| <= ln 2 / 2 by halving, Taylor, and repeated squaring.
void exp_reduced(mpfr_ptr out, mpfr_srcptr r, mpfr_prec_t wp, unsigned long halvings) {
    Scratch y(wp), term(wp), sum(wp);
    mpfr_div_2ui(y, r, halvings, MPFR_RNDN);
    mpfr_set_ui(sum, 1, MPFR_RNDN);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    for (unsigned long i = 1;; ++i) {
        mpfr_mul(term, term, y, MPFR_RNDN);
        mpfr_div_ui(term, term, i, MPFR_RNDN);
        if (mpfr_zero_p(term.get()) || mpfr_get_exp(term.get()) < mpfr_get_exp(sum.get()) - wp - 1) break;
        mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    for (unsigned long i = 0; i < halvings; ++i) mpfr_sqr(sum, sum, MPFR_RNDN);
    mpfr_set(out, sum.get(), MPFR_RNDN);
}

// 2 atanh(y) = ln((1+y)/(1-y)) for small |y|.
void atanh2_into(mpfr_ptr out, mpfr_srcptr y, mpfr_prec_t wp) {
    Scratch y2(wp), power(wp), term(wp), sum(wp);
    mpfr_sqr(y2, y, MPFR_RNDN);
    mpfr_set(power, y, MPFR_RNDN);
    mpfr_set(sum, y, MPFR_RNDN);
    if (!mpfr_zero_p(y)) {
        for (unsigned long k = 1;; ++k) {
            mpfr_mul(power, power, y2, MPFR_RNDN);
            mpfr_div_ui(term, power, 2 * k + 1, MPFR_RNDN);
            if (mpfr_zero_p(term.get()) || mpfr_get_exp(term.get()) < mpfr_get_exp(sum.get()) - wp - 1) break;
            mpfr_add(sum, sum, term, MPFR_RNDN);
        }
    }
    mpfr_mul_2ui(out, sum, 1, MPFR_RNDN);
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

BigFloat::BigFloat(int digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(value_, bits_for_digits(digits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int digits) : BigFloat(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const BigInt& value, int digits) : BigFloat(digits) {
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int digits) : BigFloat(digits) {
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, int digits) {
    BigFloat r(digits);
    const std::string s(text);
    if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("malformed number '" + s + "'");
    }
    return r;
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        digits_ = o.digits_;
        mpfr_set_prec(value_, mpfr_get_prec(o.value_));
        mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    std::swap(digits_, o.digits_);
    mpfr_swap(value_, o.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::reset_precision(int digits) {
    if (digits == digits_) return;
    digits_ = digits;
    mpfr_prec_round(value_, bits_for_digits(digits), MPFR_RNDN);
}

BigFloat BigFloat::with_precision(int digits) const {
    BigFloat r(digits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(*this);
    mpfr_abs(r.value_, r.value_, MPFR_RNDN);
    return r;
}

long BigFloat::to_long() const {
    if (!mpfr_fits_slong_p(value_, MPFR_RNDN)) throw DomainError("value does not fit a long");
    return mpfr_get_si(value_, MPFR_RNDN);
}

std::string BigFloat::to_scientific(int sig_digits) const {
    if (sig_digits < 1) throw DomainError("need at least one significant digit");
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) {
        std::string z = "0";
        if (sig_digits > 1) z += "." + std::string(static_cast<std::size_t>(sig_digits - 1), '0');
        return z + "e+00";
    }
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(sig_digits), value_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string out;
    if (digits.front() == '-') {
        out += '-';
        digits.erase(0, 1);
    }
    out += digits.front();
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    const long e = static_cast<long>(exp10) - 1;
    const long mag = e < 0 ? -e : e;
    out += e < 0 ? "e-" : "e+";
    if (mag < 10) out += '0';
    out += std::to_string(mag);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    reset_precision(std::min(digits_, o.digits_));
    mpfr_add(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    reset_precision(std::min(digits_, o.digits_));
    mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    reset_precision(std::min(digits_, o.digits_));
    mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    reset_precision(std::min(digits_, o.digits_));
    mpfr_div(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long s) {
    mpfr_mul_si(value_, value_, s, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long s) {
    if (s == 0) throw DomainError("division by zero");
    mpfr_div_si(value_, value_, s, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

BigFloat const_e(int digits) {
    check_digits(digits);
    return e_cache().get(digits);
}

BigFloat const_pi(int digits) {
    check_digits(digits);
    return pi_cache().get(digits);
}

BigFloat const_ln2(int digits) {
    check_digits(digits);
    return ln2_cache().get(digits);
}

BigFloat bf_exp(const BigFloat& x) {
    BigFloat result(x.precision_digits());
    if (x.is_zero()) {
        mpfr_set_ui(result.raw(), 1, MPFR_RNDN);
        return result;
    }
    const mpfr_prec_t target = x.precision_bits();
    const long mag = std::max<long>(0, mpfr_get_exp(x.raw()));
    if (mag > 60) throw DomainError("exp argument out of range");
    const auto halvings = static_cast<unsigned long>(std::sqrt(static_cast<double>(target)) / 2);
    const mpfr_prec_t wp = target + static_cast<mpfr_prec_t>(halvings + 2 * mag + 32);

    Scratch ln2(wp), k_ln2(wp), r(wp), q(wp);
    ln2_cache().into(ln2);
    // x = k ln 2 + r with |r| <= ln 2 / 2
    mpfr_div(q, x.raw(), ln2, MPFR_RNDN);
    mpfr_round(q, q);
    const long k = mpfr_get_si(q, MPFR_RNDN);
    mpfr_mul_si(k_ln2, ln2, k, MPFR_RNDN);
    mpfr_sub(r, x.raw(), k_ln2, MPFR_RNDN);

    Scratch y(wp);
    exp_reduced(y, r, wp, halvings);
    mpfr_mul_2si(y, y, k, MPFR_RNDN);
    mpfr_set(result.raw(), y.get(), MPFR_RNDN);
    return result;
}

BigFloat bf_ln(const BigFloat& x) {
    if (x.sign() <= 0) throw DomainError("ln of a non-positive number");
    BigFloat result(x.precision_digits());
    const mpfr_prec_t target = x.precision_bits();

    // x = m 2^e with m in [3/4, 3/2), so ln m carries no cancellation.
    long e = mpfr_get_exp(x.raw());
    const mpfr_prec_t wp = target + 32 + static_cast<mpfr_prec_t>(std::log2(std::abs(static_cast<double>(e)) + 1));
    Scratch m(wp), y(wp), num(wp), den(wp), ln_m(wp);
    mpfr_div_2si(m, x.raw(), e, MPFR_RNDN);  // m in [1/2, 1)
    if (mpfr_cmp_d(m, 0.75) < 0) {
        mpfr_mul_2ui(m, m, 1, MPFR_RNDN);
        --e;
    }
    mpfr_sub_ui(num, m, 1, MPFR_RNDN);
    mpfr_add_ui(den, m, 1, MPFR_RNDN);
    mpfr_div(y, num, den, MPFR_RNDN);
    atanh2_into(ln_m, y, wp);

    if (e != 0) {
        Scratch ln2(wp);
        ln2_cache().into(ln2);
        mpfr_mul_si(ln2, ln2, e, MPFR_RNDN);
        mpfr_add(ln_m, ln_m, ln2, MPFR_RNDN);
    }
    mpfr_set(result.raw(), ln_m.get(), MPFR_RNDN);
    return result;
}

BigFloat bf_sqrt(const BigFloat& x) {
    if (x.sign() < 0) throw DomainError("sqrt of a negative number");
    BigFloat result(x.precision_digits());
    mpfr_sqrt(result.raw(), x.raw(), MPFR_RNDN);
    return result;
}

BigFloat bf_pow(const BigFloat& x, const BigFloat& y) {
    if (x.sign() <= 0) throw DomainError("pow requires a positive base");
    const int digits = std::min(x.precision_digits(), y.precision_digits());
    if (y.is_zero()) return BigFloat(1, digits);
    // exp turns the absolute error of y ln x into relative error, so carry
    // as many extra digits as y ln x has before the point.
    const double est = std::abs(y.to_double() * std::log(x.to_double()));
    const int extra = 2 + (est > 1 ? static_cast<int>(std::ceil(std::log10(est))) : 0);
    const int wd = digits + extra;
    const BigFloat lx = bf_ln(x.with_precision(wd));
    return bf_exp(y.with_precision(wd) * lx).with_precision(digits);
}

double agreeing_digits(const BigFloat& a, const BigFloat& b) {
    const int cap = std::min(a.precision_digits(), b.precision_digits());
    if (a == b) return cap;
    const BigFloat diff = (a - b).abs();
    const BigFloat scale = std::max(a.abs(), b.abs());
    if (scale.is_zero()) return cap;
    const double rel = (diff / scale).to_double();
    if (rel == 0.0) return cap;
    return std::min<double>(cap, -std::log10(rel));
}

ExactFactorial factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    BigInt v;
    mpz_fac_ui(v.get_mpz_t(), static_cast<unsigned long>(n));
    return {n, v};
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace stirling
