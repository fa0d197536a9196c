#include "zcheb/hypergeometric.hpp"

#include <optional>
#include <stdexcept>

namespace zcheb {

namespace {

bool is_nonpositive_integer(const Rational& r) { return r.denominator() == 1 && r.sign() <= 0; }

}  // namespace

long termination_index(const PfqParams& params) {
    std::optional<long> stop;
    for (const auto& a : params.upper) {
        if (!is_nonpositive_integer(a)) continue;
        const Integer minus_a = -a.numerator();
        if (!minus_a.fits_slong_p()) throw std::domain_error("pfq: termination index out of range");
        const long k = minus_a.get_si();
        if (!stop || k < *stop) stop = k;
    }
    if (!stop) throw std::domain_error("pfq: no non-positive integer upper parameter, series does not terminate");
    return *stop;
}

Rational pfq_terminating(const PfqParams& params) {
    const long stop = termination_index(params);

    Rational sum = 1;
    Rational term = 1;
    for (long s = 0; s < stop; ++s) {
        Rational num = 1;
        for (const auto& a : params.upper) num = num * (a + Rational(s));
        Rational den = Rational(s + 1);
        for (const auto& b : params.lower) {
            const Rational factor = b + Rational(s);
            if (factor.is_zero()) throw std::domain_error("pfq: lower parameter vanishes inside the retained terms");
            den = den * factor;
        }
        term = term * num / den;
        sum = sum + term;
    }
    return sum;
}

}  // namespace zcheb
