#pragma once

// Exact rational scalar used by every formula in the library.
//
// Backed by GMP's mpq_t, which keeps values canonical: the denominator is
// positive, numerator and denominator are coprime, and zero is 0/1.

#include <compare>
#include <string>

#include <gmpxx.h>

namespace zcheb {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    explicit Rational(const Integer& value) : value_(value) {}

    /// Throws std::domain_error when denominator is zero.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Exact conversion of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    /// "p/q" in lowest terms, or bare "p" when the denominator is one.
    std::string str() const;

    /// Correctly rounded (round-to-nearest-even) conversion.
    double to_double() const;

    const mpq_class& raw() const { return value_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(raw_tag{}, mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(raw_tag{}, mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(raw_tag{}, mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(raw_tag{}, mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    struct raw_tag {};
    Rational(raw_tag, mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// rat(p, q) == p/q in canonical form; zero denominator throws std::domain_error.
Rational rat(long numerator, long denominator);
Rational rat(const Integer& numerator, const Integer& denominator);

/// 2^exponent for any sign of exponent.
Rational pow2(long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace zcheb
