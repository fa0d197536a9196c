#pragma once

// Coupling coefficients c_{n,m,i} in R_n^m(x) = a_0/2 + sum_{i>=1} c_{n,m,i} T_i(x),
// computed by several independent routes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zcheb/polynomial.hpp"
#include "zcheb/rational.hpp"

namespace zcheb {

/// A method was asked for an index outside the range where its formula holds.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CouplingIndex {
    long n = 0;  // radial order
    long m = 0;  // azimuthal order
    long i = 0;  // Chebyshev order

    /// n >= 0, 0 <= m <= n, i >= 0.
    bool well_formed() const { return n >= 0 && m >= 0 && m <= n && i >= 0; }
    /// Well formed and n - m even, so that R_n^m exists.
    bool valid() const { return well_formed() && (n - m) % 2 == 0; }
    /// Valid and inside the support: i <= n with n - i even.
    bool on_lattice() const { return valid() && i <= n && (n - i) % 2 == 0; }

    std::string str() const;

    friend auto operator<=>(const CouplingIndex&, const CouplingIndex&) = default;
};

/// Throws std::invalid_argument unless well formed, PreconditionError if n - m is odd.
void require_valid(const CouplingIndex& idx);

// ---- closed forms and sums -------------------------------------------------

/// Alternating s-sum obtained by expanding each monomial of R_n^m in T_i.
/// Zero off the lattice (i > n or n - i odd).
Rational c_direct(const CouplingIndex& idx);

/// n == m: 2^{1-m} C(m, (m-i)/2).
Rational c_mm(long m, long i);

/// Numerator polynomials of the product formulas, eps = 0..3.
Rational omega(long eps, long m, long i);

/// Product formula for i <= m and (n-m)/2 <= 3.
Rational c_product_low(const CouplingIndex& idx);

/// Product formula for i >= m and (n-i)/2 <= 3; omega takes (i, m) here.
Rational c_product_high(const CouplingIndex& idx);

/// i == 0 closed form: zero when (n-m)/2 is odd, a factorial/double-factorial
/// expression otherwise.
Rational c_i0(long n, long m);

/// i == 1 value from the three-term recurrence in n, seeded by the product formulas.
Rational c_i1_rec(long n, long m);

/// Values c_{n,m,i} for n = n0, n0+2, ..., <= n_max with n0 = max(m, i).
/// The first four come from the product formulas; every later one solves the
/// five-term recurrence in n. When steps is non-null it is incremented once per
/// recurrence step.
std::vector<std::pair<long, Rational>> c_rec5_row(long m, long i, long n_max, std::uint64_t* steps = nullptr);

/// Chebyshev series of R_n^m by repeated leading-coefficient division.
/// Throws std::logic_error if the residual does not vanish.
ChebSeries c_oracle_row(long n, long m);

// ---- terminating hypergeometric representations ---------------------------

/// Prefactor times 4F3 for i <= m.
Rational c_hyper_low(const CouplingIndex& idx);
/// Prefactor times 4F3 for i >= m.
Rational c_hyper_high(const CouplingIndex& idx);
/// i == 0 prefactor times 3F2.
Rational c_i0_hyper(long n, long m);
/// i == 1 prefactor times 3F2.
Rational c_i1_hyper(long n, long m);

// ---- dispatch --------------------------------------------------------------

/// Selection rules first, then product formulas, then the five-term recurrence.
/// Returns 0 whenever n - m or n - i is odd, or i > n. Throws
/// std::invalid_argument only for indices that are not well formed.
Rational c_best(const CouplingIndex& idx);

/// Number of lattice indices with n <= n_max.
std::size_t lattice_size(long n_max);

struct TableStats {
    std::uint64_t recurrence_steps = 0;
    std::uint64_t product_evaluations = 0;
    std::uint64_t rows = 0;
};

/// All lattice coefficients with n <= n_max, stored densely in (n, m, i) order.
class CouplingTable {
public:
    CouplingTable() = default;

    long n_max() const { return n_max_; }
    std::size_t size() const { return values_.size(); }
    const TableStats& stats() const { return stats_; }

    bool contains(const CouplingIndex& idx) const { return idx.on_lattice() && idx.n <= n_max_; }
    /// Throws std::out_of_range when !contains(idx).
    const Rational& at(const CouplingIndex& idx) const;

    /// k-th index in (n, m, i) order.
    CouplingIndex index_at(std::size_t k) const;
    const Rational& value_at(std::size_t k) const { return values_.at(k); }

    /// Stored coefficients of R_n^m as a Chebyshev series.
    ChebSeries row(long n, long m) const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        std::size_t k = 0;
        for (long n = 0; n <= n_max_; ++n)
            for (long m = n % 2; m <= n; m += 2)
                for (long i = n % 2; i <= n; i += 2) fn(CouplingIndex{n, m, i}, values_[k++]);
    }

private:
    friend CouplingTable build_table(long n_max, unsigned threads);

    std::size_t offset(const CouplingIndex& idx) const;

    long n_max_ = -1;
    std::vector<std::size_t> block_start_;  // first slot of each n
    std::vector<Rational> values_;
    TableStats stats_;
};

/// Builds the table through c_best, one memoized recurrence row per (m, i).
/// threads == 0 picks std::thread::hardware_concurrency().
CouplingTable build_table(long n_max, unsigned threads = 0);

// ---- cross-verification ----------------------------------------------------

struct MethodReport {
    CouplingIndex index;
    std::map<std::string, Rational> values;
    bool agree = true;
};

/// Runs every method applicable to an index and compares the results.
/// Recurrence and oracle rows are cached across calls.
class MethodComparer {
public:
    MethodReport compare(const CouplingIndex& idx);

    /// Names of the methods whose preconditions admit idx.
    static std::vector<std::string> applicable(const CouplingIndex& idx);

private:
    const Rational& rec5_value(const CouplingIndex& idx);
    const ChebSeries& oracle_row(long n, long m);

    std::map<std::pair<long, long>, std::vector<Rational>> rec5_rows_;  // (m, i) -> values from n0
    std::map<std::pair<long, long>, ChebSeries> oracle_rows_;           // (n, m)
};

/// Evaluates a single named method ("direct", "best", "oracle", "product",
/// "product_low", "product_high", "rec5", "i0", "i0_hyper", "i1", "i1_rec",
/// "i1_hyper", "hyper", "hyper_low", "hyper_high", "mm"). Throws
/// std::invalid_argument for unknown names or malformed indices and
/// PreconditionError when the method does not cover idx.
Rational c_by_method(const std::string& method, const CouplingIndex& idx);

}  // namespace zcheb
