#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "zcheb/rational.hpp"

namespace zcheb {

/// Dense polynomial in the monomial basis, coefficient k multiplies x^k.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(long power, const Rational& scale = 1);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^power; zero beyond the degree.
    Rational coeff(long power) const;
    /// kZeroDegree for the zero polynomial.
    long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

    std::string str() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Chebyshev series a_0/2 T_0 + sum_{i>=1} a_i T_i.
/// a_0 is stored unhalved; the halving happens on conversion and evaluation.
struct ChebSeries {
    std::vector<Rational> a;

    Rational at(long i) const { return i >= 0 && i < static_cast<long>(a.size()) ? a[i] : Rational(); }
    friend bool operator==(const ChebSeries&, const ChebSeries&) = default;
};

/// Zernike radial polynomial R_n^m. Requires 0 <= m <= n and n - m even.
Polynomial zernike_poly(long n, long m);

/// Chebyshev polynomial of the first kind from its explicit power sum.
Polynomial chebyshev_poly(long i);

/// Weights h_{j,n,m} with x^j = sum_n h_{j,n,m} R_n^m(x), for n = m, m+2, ..., j.
std::vector<std::pair<long, Rational>> monomial_to_zernike(long j, long m);

/// Chebyshev series of x^n: a_j = 2^{1-n} C(n, (n-j)/2) for j = n, n-2, ...
ChebSeries monomial_to_chebyshev(long n);

Polynomial cheb_to_poly(const ChebSeries& s);

Rational eval_exact(const Polynomial& p, const Rational& x);

/// Clenshaw evaluation in double precision. x must lie in [-1, 1].
double eval_cheb_float(const ChebSeries& s, double x);

}  // namespace zcheb
