#include "zcheb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zcheb/combinatorics.hpp"

namespace zcheb {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(long power, const Rational& scale) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = scale;
    return Polynomial(std::move(c));
}

Rational Polynomial::coeff(long power) const {
    if (power < 0 || power >= static_cast<long>(coeffs_.size())) return Rational();
    return coeffs_[static_cast<std::size_t>(power)];
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0 || mag != Rational(1)) os << mag;
        if (k >= 1) os << (mag != Rational(1) ? "*x" : "x");
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] = c[k] + a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] = c[k] + b.coeffs_[k];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs_.size());
    for (const auto& x : p.coeffs_) c.push_back(s * x);
    return Polynomial(std::move(c));
}

Polynomial zernike_poly(long n, long m) {
    if (m < 0 || m > n || (n - m) % 2 != 0)
        throw std::invalid_argument("zernike_poly: need 0 <= m <= n with n - m even");
    const long half = (n - m) / 2;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long s = 0; s <= half; ++s) {
        Integer v = binomial((n + m) / 2 + s, half - s) * binomial(m + 2 * s, s);
        if ((half + s) % 2 != 0) v = -v;
        c[static_cast<std::size_t>(m + 2 * s)] = Rational(v);
    }
    return Polynomial(std::move(c));
}

Polynomial chebyshev_poly(long i) {
    if (i < 0) throw std::invalid_argument("chebyshev_poly: negative order");
    if (i == 0) return Polynomial({Rational(1)});
    std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
    for (long s = 0; s <= i / 2; ++s) {
        // (i/2) (-1)^s (i-s-1)! / (s! (i-2s)!) 2^{i-2s}
        Rational v = rat(factorial(i - s - 1) * i, factorial(s) * factorial(i - 2 * s)) * pow2(i - 2 * s - 1);
        if (s % 2 != 0) v = -v;
        c[static_cast<std::size_t>(i - 2 * s)] = v;
    }
    return Polynomial(std::move(c));
}

std::vector<std::pair<long, Rational>> monomial_to_zernike(long j, long m) {
    if (m < 0 || m > j || (j - m) % 2 != 0)
        throw std::invalid_argument("monomial_to_zernike: need 0 <= m <= j with j - m even");
    std::vector<std::pair<long, Rational>> out;
    for (long n = m; n <= j; n += 2) {
        const long k = (n - m) / 2;
        const Rational h = rat(n + 1, 1 + (j + n) / 2) * Rational(binomial((j - m) / 2, k))
                           / Rational(binomial((j + n) / 2, k));
        out.emplace_back(n, h);
    }
    return out;
}

ChebSeries monomial_to_chebyshev(long n) {
    if (n < 0) throw std::invalid_argument("monomial_to_chebyshev: negative power");
    ChebSeries s{std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
    const Rational scale = pow2(1 - n);
    for (long j = n; j >= 0; j -= 2) s.a[static_cast<std::size_t>(j)] = scale * Rational(binomial(n, (n - j) / 2));
    return s;
}

Polynomial cheb_to_poly(const ChebSeries& s) {
    Polynomial p;
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        if (s.a[i].is_zero()) continue;
        const Rational w = i == 0 ? s.a[0] / Rational(2) : s.a[i];
        p = p + w * chebyshev_poly(static_cast<long>(i));
    }
    return p;
}

Rational eval_exact(const Polynomial& p, const Rational& x) {
    Rational acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

double eval_cheb_float(const ChebSeries& s, double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("eval_cheb_float: x outside [-1, 1]");
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = s.a.size(); k-- > 1;) {
        const double b0 = s.a[k].to_double() + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    const double a0 = s.a.empty() ? 0.0 : s.a[0].to_double();
    return 0.5 * a0 + x * b1 - b2;
}

}  // namespace zcheb
