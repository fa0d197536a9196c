#include <doctest.h>

#include <algorithm>

#include "brute_oracle.hpp"
#include "zcheb/combinatorics.hpp"
#include "zcheb/coupling.hpp"

using namespace zcheb;

namespace {

Rational r(const char* s) { return Rational::parse(s); }

Rational from_mpq(const mpq_class& q) { return rat(q.get_num(), q.get_den()); }

}  // namespace

TEST_CASE("CouplingIndex predicates") {
    CHECK(CouplingIndex{4, 2, 0}.on_lattice());
    CHECK_FALSE(CouplingIndex{4, 2, 1}.on_lattice());
    CHECK_FALSE(CouplingIndex{4, 2, 6}.on_lattice());
    CHECK_FALSE(CouplingIndex{4, 1, 0}.valid());
    CHECK(CouplingIndex{4, 1, 0}.well_formed());
    CHECK_FALSE(CouplingIndex{2, 4, 0}.well_formed());
    CHECK_FALSE(CouplingIndex{2, 0, -2}.well_formed());
    CHECK_THROWS_AS(require_valid({2, 4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(require_valid({5, 2, 1}), PreconditionError);
}

TEST_CASE("c_direct") {
    CHECK(c_direct({0, 0, 0}) == Rational(2));
    CHECK(c_direct({4, 2, 0}) == Rational(0));
    CHECK(c_direct({7, 5, 3}) == rat(27, 64));
    CHECK(c_direct({7, 3, 5}) == rat(27, 64));
    CHECK(c_direct({7, 3, 7}) == rat(21, 64));
    CHECK(c_direct({4, 2, 6}).is_zero());
    CHECK(c_direct({4, 2, 1}).is_zero());
    // frozen from the brute-force oracle (three-term Chebyshev recurrence + back-substitution)
    CHECK(c_direct({12, 0, 4}) == r("105/512"));
    CHECK(c_direct({20, 4, 10}) == r("1625/16384"));
    CHECK(c_direct({40, 0, 0}) == r("2133423721/34359738368"));
    CHECK(c_direct({31, 7, 13}) == r("57297247/1073741824"));
}

TEST_CASE("c_direct agrees with the brute-force oracle for n <= 24") {
    for (long n = 0; n <= 24; ++n)
        for (long m = n % 2; m <= n; m += 2) {
            const auto ref = brute::coefficients(n, m);
            for (long i = 0; i <= n; ++i) REQUIRE(c_direct({n, m, i}) == from_mpq(ref[static_cast<std::size_t>(i)]));
        }
}

TEST_CASE("c_mm") {
    CHECK(c_mm(1, 1) == Rational(1));
    CHECK(c_mm(8, 0) == rat(35, 64));
    for (long m = 0; m <= 12; ++m) CHECK(c_mm(m, m) == pow2(1 - m));
    CHECK_THROWS_AS(c_mm(4, 1), PreconditionError);
    CHECK_THROWS_AS(c_mm(4, 6), PreconditionError);
}

TEST_CASE("omega table") {
    CHECK(omega(0, 5, 3) == Rational(1));
    CHECK(omega(1, 1, 1) == Rational(1));
    CHECK(omega(1, 4, 3) == Rational(9));
    CHECK(omega(2, 0, 0) == Rational(16));
    CHECK(omega(3, 2, 2) == Rational(4 * 324));  // 4 * (-6 - 16 + 4)^2
    CHECK_THROWS_AS(omega(4, 0, 0), PreconditionError);
    // not symmetric in its two arguments
    CHECK(omega(2, 3, 1) != omega(2, 1, 3));
}

TEST_CASE("product formulas") {
    CHECK(c_product_low({3, 1, 1}) == rat(1, 4));
    CHECK(c_product_low({6, 4, 2}) == rat(5, 16));
    CHECK(c_product_high({8, 0, 8}) == rat(35, 64));
    CHECK(c_product_high({6, 2, 4}) == rat(5, 16));
    for (long m = 0; m <= 10; ++m) {
        for (long i = m % 2; i <= m; i += 2) CHECK(c_product_low({m, m, i}) == c_mm(m, i));
        CHECK(c_product_high({m, m, m}) == pow2(1 - m));
    }
    CHECK_THROWS_AS(c_product_low({10, 2, 2}), PreconditionError);   // eps = 4
    CHECK_THROWS_AS(c_product_low({6, 2, 4}), PreconditionError);    // i > m
    CHECK_THROWS_AS(c_product_high({12, 0, 2}), PreconditionError);  // (n-i)/2 = 5
    CHECK_THROWS_AS(c_product_high({6, 4, 2}), PreconditionError);   // i < m
    CHECK_THROWS_AS(c_product_low({6, 4, 3}), PreconditionError);    // off lattice
}

TEST_CASE("seed overlap: both product formulas on i == m") {
    for (long m = 0; m <= 30; ++m)
        for (long eps = 0; eps <= 3; ++eps) REQUIRE(c_product_low({m + 2 * eps, m, m}) == c_product_high({m + 2 * eps, m, m}));
}

TEST_CASE("c_i0") {
    CHECK(c_i0(4, 0) == rat(1, 2));
    CHECK(c_i0(2, 0) == Rational(0));
    CHECK(c_i0(8, 4) == rat(5, 16));
    CHECK(c_i0(40, 0) == r("2133423721/34359738368"));
    CHECK_THROWS_AS(c_i0(5, 1), PreconditionError);
    for (long n = 0; n <= 40; n += 2)
        for (long m = 0; m <= n; m += 2) REQUIRE(c_i0(n, m) == c_direct({n, m, 0}));
}

TEST_CASE("c_i1_rec") {
    CHECK(c_i1_rec(5, 1) == rat(1, 4));
    CHECK(c_i1_rec(7, 1) == rat(9, 64));
    for (long m = 1; m <= 15; m += 2) CHECK(c_i1_rec(m, m) == pow2(1 - m) * Rational(binomial(m, (m - 1) / 2)));
    CHECK_THROWS_AS(c_i1_rec(4, 2), PreconditionError);
    for (long m = 1; m <= 21; m += 2)
        for (long n = m; n <= 41; n += 2) REQUIRE(c_i1_rec(n, m) == c_direct({n, m, 1}));
}

TEST_CASE("c_rec5_row") {
    const auto row00 = c_rec5_row(0, 0, 8);
    REQUIRE(row00.size() == 5);
    CHECK(row00.back() == std::pair<long, Rational>{8, rat(9, 32)});
    CHECK(c_rec5_row(2, 2, 8).back().second == rat(9, 32));
    CHECK(c_rec5_row(0, 4, 12).back().second == r("105/512"));
    CHECK(c_rec5_row(0, 4, 12).front().first == 4);

    std::uint64_t steps = 0;
    const auto deep = c_rec5_row(0, 0, 40, &steps);
    CHECK(steps == 17);  // n = 8, 10, ..., 40
    CHECK(deep.back().second == r("2133423721/34359738368"));

    CHECK_THROWS_AS(c_rec5_row(2, 1, 10), PreconditionError);
    CHECK_THROWS_AS(c_rec5_row(6, 2, 4), PreconditionError);

    for (long m = 0; m <= 16; ++m)
        for (long i = m % 2; i <= 30; i += 2)
            for (const auto& [n, v] : c_rec5_row(m, i, 40)) REQUIRE(v == c_direct({n, m, i}));
}

TEST_CASE("c_oracle_row") {
    const ChebSeries r44 = c_oracle_row(4, 4);
    CHECK(r44.at(0) == rat(3, 4));
    CHECK(r44.at(2) == rat(1, 2));
    CHECK(r44.at(4) == rat(1, 8));
    const ChebSeries r60 = c_oracle_row(6, 0);
    CHECK(r60.a == std::vector<Rational>{Rational(0), Rational(0), rat(3, 8), Rational(0), Rational(0), Rational(0), rat(5, 8)});
    for (long m = 0; m <= 12; ++m) CHECK(c_oracle_row(m, m) == monomial_to_chebyshev(m));
    CHECK(c_oracle_row(0, 0).at(0) == Rational(2));
    CHECK_THROWS_AS(c_oracle_row(3, 0), PreconditionError);
}

TEST_CASE("hypergeometric representations") {
    CHECK(c_hyper_low({5, 3, 1}) == rat(1, 8));
    CHECK(c_hyper_high({8, 0, 8}) == rat(35, 64));
    CHECK_THROWS_AS(c_hyper_low({6, 2, 4}), PreconditionError);
    CHECK_THROWS_AS(c_hyper_high({6, 4, 2}), PreconditionError);
    for (long n = 0; n <= 24; ++n)
        for (long m = n % 2; m <= n; m += 2)
            for (long i = n % 2; i <= n; i += 2) {
                const Rational d = c_direct({n, m, i});
                if (i <= m) REQUIRE(c_hyper_low({n, m, i}) == d);
                if (i >= m) REQUIRE(c_hyper_high({n, m, i}) == d);
                if (i == 0) REQUIRE(c_i0_hyper(n, m) == d);
                if (i == 1) REQUIRE(c_i1_hyper(n, m) == d);
            }
}

TEST_CASE("c_best") {
    CHECK(c_best({9, 1, 2}).is_zero());
    CHECK(c_best({8, 6, 4}) == rat(7, 16));
    CHECK(c_best({20, 4, 10}) == c_direct({20, 4, 10}));
    CHECK(c_best({5, 2, 1}).is_zero());  // n - m odd
    CHECK(c_best({4, 2, 6}).is_zero());
    CHECK_THROWS_AS(c_best({2, 4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(c_best({-1, 0, 0}), std::invalid_argument);
}

TEST_CASE("c_by_method") {
    CHECK(c_by_method("direct", {7, 3, 7}) == rat(21, 64));
    CHECK(c_by_method("i0", {4, 0, 0}) == rat(1, 2));
    CHECK(c_by_method("best", {9, 1, 2}).is_zero());
    CHECK(c_by_method("product", {6, 2, 4}) == rat(5, 16));
    CHECK(c_by_method("rec5", {12, 0, 4}) == r("105/512"));
    CHECK(c_by_method("oracle", {8, 8, 8}) == rat(1, 128));
    CHECK(c_by_method("i1", {7, 1, 1}) == rat(9, 64));
    CHECK_THROWS_AS(c_by_method("i0", {5, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(c_by_method("product", {20, 4, 10}), PreconditionError);
    CHECK_THROWS_AS(c_by_method("rec5", {9, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(c_by_method("nope", {2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(c_by_method("direct", {2, 4, 0}), std::invalid_argument);
}

TEST_CASE("lattice_size matches enumeration") {
    CHECK(lattice_size(-1) == 0);
    CHECK(lattice_size(0) == 1);
    CHECK(lattice_size(8) == 85);
    for (long n_max = 0; n_max <= 30; ++n_max) {
        std::size_t count = 0;
        for (long n = 0; n <= n_max; ++n)
            for (long m = 0; m <= n; ++m)
                for (long i = 0; i <= n; ++i) count += CouplingIndex{n, m, i}.on_lattice();
        REQUIRE(lattice_size(n_max) == count);
    }
}

TEST_CASE("build_table") {
    const CouplingTable t0 = build_table(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0.at({0, 0, 0}) == Rational(2));
    CHECK_THROWS_AS(build_table(-1), std::invalid_argument);

    for (unsigned threads : {1u, 3u}) {
        const CouplingTable t = build_table(12, threads);
        CHECK(t.size() == lattice_size(12));
        CHECK(t.stats().rows > 0);
        std::size_t k = 0;
        t.for_each([&](const CouplingIndex& idx, const Rational& v) {
            REQUIRE(t.index_at(k) == idx);
            REQUIRE(&t.value_at(k) == &t.at(idx));
            REQUIRE(v == c_direct(idx));
            ++k;
        });
        CHECK(k == t.size());
        CHECK_THROWS_AS(t.at({12, 0, 1}), std::out_of_range);
        CHECK_THROWS_AS(t.at({14, 0, 0}), std::out_of_range);
        CHECK(t.row(8, 0).at(0) == rat(9, 32));
    }
}

TEST_CASE("build_table performs at most one recurrence step per entry") {
    const CouplingTable t = build_table(60);
    CHECK(t.stats().recurrence_steps + t.stats().product_evaluations == t.size());
    CHECK(t.stats().recurrence_steps < t.size());
}

TEST_CASE("MethodComparer") {
    MethodComparer cmp;
    const MethodReport r = cmp.compare({8, 0, 0});
    CHECK(r.agree);
    CHECK(r.values.count("i0") == 1);
    CHECK(r.values.count("i0_hyper") == 1);
    CHECK(r.values.count("oracle") == 1);
    CHECK(r.values.at("rec5") == rat(9, 32));

    const MethodReport off = cmp.compare({9, 1, 2});
    CHECK(off.agree);
    CHECK(off.values.size() == 2);

    const auto names = MethodComparer::applicable({9, 1, 1});
    CHECK(std::find(names.begin(), names.end(), "i1_rec") != names.end());
    CHECK(std::find(names.begin(), names.end(), "product_low") == names.end());
}

TEST_CASE("five-term coefficients rewrite symmetrically in m_+ and m_-") {
    // m = m_+ + m_-, i = m_+ - m_-; both sides are polynomials, so agreement on
    // a 17^3 integer grid is an identity check.
    for (long n = -8; n <= 8; ++n)
        for (long mp = -8; mp <= 8; ++mp)
            for (long mq = -8; mq <= 8; ++mq) {
                const Integer N = n, P = mp, Q = mq;
                const Integer M = P + Q, I = P - Q;
                const Integer M2 = M * M, I2 = I * I, N2 = N * N, N3 = N2 * N, N4 = N3 * N;
                const Integer S2 = P * P + Q * Q;

                const Integer lhs2 = 4 * N - 4 * N2 - M2 * N - N * I2 + N3 + M2 * I2;
                const Integer rhs2 = N * (N - 2) * (N - 2) - 2 * N * S2 + (P * P - Q * Q) * (P * P - Q * Q);
                REQUIRE(lhs2 == rhs2);

                const Integer lhs4 = 32 - 72 * N - 2 * M2 - 3 * M2 * I2 - 2 * I2 + 48 * N2 + 6 * M2 * N - N2 * I2
                                     + 6 * N * I2 - M2 * N2 - 12 * N3 + N4;
                const Integer rhs4 = (N - 2) * (N - 4) * (N2 - 6 * N + 4) + (-4 + 12 * N - 2 * N2) * S2
                                     - 3 * (P * P * P * P + Q * Q * Q * Q) + 6 * (P * Q) * (P * Q);
                REQUIRE(lhs4 == rhs4);
            }
}
