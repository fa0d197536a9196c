#pragma once

// Batch checks over the coupling coefficients. Every check is exact and
// deterministic; failures carry the full expected and observed rationals.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zcheb/coupling.hpp"

namespace zcheb {

struct CheckFailure {
    std::string where;  // "n=.. m=.. i=.." or the check's own parameter tuple
    Rational expected;
    Rational got;
};

struct CheckReport {
    std::string check_name;
    std::string domain_description;
    long cases_run = 0;
    std::vector<CheckFailure> failures;
    /// Cases per method, filled by the cross-method check.
    std::map<std::string, long> method_cases;
    /// A failing soft check is a finding, not an error (non-negativity scan).
    bool hard = true;

    bool passed() const { return failures.empty(); }

    /// One "CHECK <name> FAIL ..." line per failure, then the summary line.
    std::string serialize() const;
};

std::string failure_location(const CouplingIndex& idx);

struct GoldenRow {
    long n;
    long m;
    std::vector<Rational> values;  // ascending i of the row's parity
};

/// The 25 published reference rows for n <= 8.
const std::vector<GoldenRow>& golden_rows();

/// Compares the given coefficient source with the reference rows.
CheckReport check_golden_against(const std::function<Rational(const CouplingIndex&)>& source);
/// Reference rows against build_table(8).
CheckReport check_golden_table();

/// All applicable methods, plus the built table, on every (n, m, i) with
/// n <= n_max and 0 <= i <= n.
CheckReport check_cross_method(long n_max);

/// a_0/2 + sum a_i T_i(1) == 1 for every row of build_table(n_max).
CheckReport check_sum_rule(long n_max);

/// Soft check: lists negative entries of build_table(n_max).
CheckReport check_nonnegativity(long n_max);

/// x^j rebuilt through the Zernike weights and the Chebyshev series, j <= j_max.
CheckReport check_basis_roundtrips(long j_max);

}  // namespace zcheb
