#include <doctest.h>

#include <cmath>

#include "zcheb/combinatorics.hpp"
#include "zcheb/coupling.hpp"
#include "zcheb/polynomial.hpp"

using namespace zcheb;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

ChebSeries series(std::initializer_list<const char*> c) {
    ChebSeries s;
    for (const char* x : c) s.a.push_back(Rational::parse(x));
    return s;
}

}  // namespace

TEST_CASE("polynomial basics") {
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
    CHECK(poly({1, 0, 0}).degree() == 0);
    CHECK(poly({0, 0}).is_zero());
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
    CHECK(poly({-1, 0, 2}).str() == "2*x^2 - 1");
    CHECK(Polynomial::monomial(3).str() == "x^3");
}

TEST_CASE("zernike_poly") {
    CHECK(zernike_poly(2, 0) == poly({-1, 0, 2}));
    CHECK(zernike_poly(4, 0) == poly({1, 0, -6, 0, 6}));
    for (long m = 0; m <= 9; ++m) CHECK(zernike_poly(m, m) == Polynomial::monomial(m));
    CHECK_THROWS_AS(zernike_poly(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(zernike_poly(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(zernike_poly(-2, 0), std::invalid_argument);
}

TEST_CASE("chebyshev_poly") {
    CHECK(chebyshev_poly(0) == poly({1}));
    CHECK(chebyshev_poly(1) == poly({0, 1}));
    CHECK(chebyshev_poly(2) == poly({-1, 0, 2}));
    CHECK(chebyshev_poly(5) == poly({0, 5, 0, -20, 0, 16}));
    CHECK_THROWS_AS(chebyshev_poly(-1), std::invalid_argument);
    // T_{i+1} = 2x T_i - T_{i-1}
    for (long i = 1; i < 30; ++i) {
        std::vector<Rational> c(chebyshev_poly(i).coeffs());
        c.insert(c.begin(), Rational());
        const Polynomial next = Rational(2) * Polynomial(c) - chebyshev_poly(i - 1);
        REQUIRE(chebyshev_poly(i + 1) == next);
    }
}

TEST_CASE("parity, leading coefficients and normalization up to 40") {
    for (long n = 0; n <= 40; ++n) {
        const Polynomial t = chebyshev_poly(n);
        if (n >= 1) CHECK(t.leading() == pow2(n - 1));
        for (long k = 0; k <= n; ++k)
            if ((k - n) % 2 != 0) CHECK(t.coeff(k).is_zero());
        CHECK(eval_exact(t, Rational(1)) == Rational(1));

        for (long m = n % 2; m <= n; m += 2) {
            const Polynomial r = zernike_poly(n, m);
            CHECK(r.degree() == n);
            CHECK(r.leading() == Rational(binomial(n, (n - m) / 2)));
            CHECK(eval_exact(r, Rational(1)) == Rational(1));
            CHECK(!r.coeff(m).is_zero());
            for (long k = 0; k < m; ++k) CHECK(r.coeff(k).is_zero());
            for (long k = 0; k <= n; ++k)
                if ((k - m) % 2 != 0) CHECK(r.coeff(k).is_zero());
        }
    }
}

TEST_CASE("monomial_to_zernike") {
    const auto h20 = monomial_to_zernike(2, 0);
    REQUIRE(h20.size() == 2);
    CHECK(h20[0] == std::pair<long, Rational>{0, rat(1, 2)});
    CHECK(h20[1] == std::pair<long, Rational>{2, rat(1, 2)});

    const auto h40 = monomial_to_zernike(4, 0);
    REQUIRE(h40.size() == 3);
    CHECK(h40[0].second == rat(1, 3));
    CHECK(h40[1].second == rat(1, 2));
    CHECK(h40[2].second == rat(1, 6));

    for (long m = 0; m <= 7; ++m) {
        const auto hmm = monomial_to_zernike(m, m);
        REQUIRE(hmm.size() == 1);
        CHECK(hmm[0] == std::pair<long, Rational>{m, Rational(1)});
    }
    CHECK_THROWS_AS(monomial_to_zernike(3, 0), std::invalid_argument);
}

TEST_CASE("h-weights rebuild x^j exactly for j <= 24") {
    for (long j = 0; j <= 24; ++j)
        for (long m = j % 2; m <= j; m += 2) {
            Polynomial sum;
            for (const auto& [n, h] : monomial_to_zernike(j, m)) sum = sum + h * zernike_poly(n, m);
            REQUIRE(sum == Polynomial::monomial(j));
        }
}

TEST_CASE("monomial_to_chebyshev and cheb_to_poly") {
    CHECK(monomial_to_chebyshev(0) == series({"2"}));
    CHECK(monomial_to_chebyshev(1) == series({"0", "1"}));
    CHECK(monomial_to_chebyshev(2) == series({"1", "0", "1/2"}));
    CHECK(cheb_to_poly(series({"2"})) == poly({1}));
    CHECK(cheb_to_poly(series({"1", "0", "1/2"})) == Polynomial::monomial(2));
    CHECK(cheb_to_poly(series({"0", "1/4", "0", "3/4"})) == zernike_poly(3, 1));
    for (long n = 0; n <= 40; ++n) REQUIRE(cheb_to_poly(monomial_to_chebyshev(n)) == Polynomial::monomial(n));
}

TEST_CASE("eval_exact") {
    CHECK(eval_exact(zernike_poly(4, 0), Rational(1)) == Rational(1));
    CHECK(eval_exact(chebyshev_poly(5), Rational(1)) == Rational(1));
    CHECK(eval_exact(zernike_poly(2, 0), rat(1, 2)) == rat(-1, 2));
    CHECK(eval_exact(Polynomial(), rat(3, 7)).is_zero());
}

TEST_CASE("eval_cheb_float") {
    CHECK(std::abs(eval_cheb_float(c_oracle_row(4, 0), 1.0) - 1.0) <= 1e-13);
    CHECK(std::abs(eval_cheb_float(c_oracle_row(2, 0), 0.5) + 0.5) <= 1e-15);
    for (double x : {-1.0, -0.3, 0.0, 0.77, 1.0}) CHECK(eval_cheb_float(series({"2"}), x) == 1.0);
    CHECK_THROWS_AS(eval_cheb_float(series({"2"}), 1.5), std::domain_error);
    CHECK_THROWS_AS(eval_cheb_float(series({"2"}), -1.0000001), std::domain_error);
    CHECK_THROWS_AS(eval_cheb_float(series({"2"}), std::nan("")), std::domain_error);
}

TEST_CASE("float evaluation tracks exact values for n <= 30") {
    for (long n = 0; n <= 30; ++n)
        for (long m = n % 2; m <= n; m += 2) {
            const ChebSeries s = c_oracle_row(n, m);
            const Polynomial r = zernike_poly(n, m);
            for (int k = 0; k <= 100; ++k) {
                const double x = k / 100.0;
                const double exact = eval_exact(r, Rational::from_double(x)).to_double();
                REQUIRE(std::abs(eval_cheb_float(s, x) - exact) <= 1e-12);
            }
        }
}
