#include "zcheb/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <mpfr.h>

namespace zcheb {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw std::domain_error("rational: non-finite double");
    return Rational(raw_tag{}, mpq_class(value));
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text, 10));
        return Rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const {
    // mpq_get_d truncates; MPFR rounds a rational correctly to 53 bits.
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
    const double result = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return result;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(Rational::raw_tag{}, mpq_class(a.value_ / b.value_));
}

Rational rat(long numerator, long denominator) {
    return Rational(Integer(numerator), Integer(denominator));
}

Rational rat(const Integer& numerator, const Integer& denominator) {
    return Rational(numerator, denominator);
}

Rational pow2(long exponent) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace zcheb
