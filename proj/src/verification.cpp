#include "zcheb/verification.hpp"

#include <sstream>

namespace zcheb {

namespace {

std::vector<Rational> parse_row(std::initializer_list<const char*> cells) {
    std::vector<Rational> out;
    for (const char* c : cells) out.push_back(Rational::parse(c));
    return out;
}

void compare_polynomials(CheckReport& report, const std::string& prefix, const Polynomial& expected,
                         const Polynomial& got) {
    if (expected == got) return;
    const long top = std::max(expected.degree(), got.degree());
    for (long k = 0; k <= top; ++k) {
        if (expected.coeff(k) == got.coeff(k)) continue;
        report.failures.push_back({prefix + " power=" + std::to_string(k), expected.coeff(k), got.coeff(k)});
        return;
    }
}

}  // namespace

std::string failure_location(const CouplingIndex& idx) {
    return "n=" + std::to_string(idx.n) + " m=" + std::to_string(idx.m) + " i=" + std::to_string(idx.i);
}

std::string CheckReport::serialize() const {
    std::ostringstream os;
    for (const auto& f : failures)
        os << "CHECK " << check_name << " FAIL " << f.where << " expected=" << f.expected << " got=" << f.got << "\n";
    os << "CHECK " << check_name << " " << (passed() ? "PASS" : "FAIL") << " cases=" << cases_run
       << " failures=" << failures.size() << "\n";
    return os.str();
}

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = {
        {0, 0, parse_row({"2"})},
        {1, 1, parse_row({"1"})},
        {2, 0, parse_row({"0", "1"})},
        {2, 2, parse_row({"1", "1/2"})},
        {3, 1, parse_row({"1/4", "3/4"})},
        {3, 3, parse_row({"3/4", "1/4"})},
        {4, 0, parse_row({"1/2", "0", "3/4"})},
        {4, 2, parse_row({"0", "1/2", "1/2"})},
        {4, 4, parse_row({"3/4", "1/2", "1/8"})},
        {5, 1, parse_row({"1/4", "1/8", "5/8"})},
        {5, 3, parse_row({"1/8", "9/16", "5/16"})},
        {5, 5, parse_row({"5/8", "5/16", "1/16"})},
        {6, 0, parse_row({"0", "3/8", "0", "5/8"})},
        {6, 2, parse_row({"3/8", "1/32", "5/16", "15/32"})},
        {6, 4, parse_row({"0", "5/16", "1/2", "3/16"})},
        {6, 6, parse_row({"5/8", "15/32", "3/16", "1/32"})},
        {7, 1, parse_row({"9/64", "15/64", "5/64", "35/64"})},
        {7, 3, parse_row({"15/64", "1/64", "27/64", "21/64"})},
        {7, 5, parse_row({"5/64", "27/64", "25/64", "7/64"})},
        {7, 7, parse_row({"35/64", "21/64", "7/64", "1/64"})},
        {8, 0, parse_row({"9/32", "0", "5/16", "0", "35/64"})},
        {8, 2, parse_row({"0", "9/32", "1/16", "7/32", "7/16"})},
        {8, 4, parse_row({"5/16", "1/16", "1/8", "7/16", "7/32"})},
        {8, 6, parse_row({"0", "7/32", "7/16", "9/32", "1/16"})},
        {8, 8, parse_row({"35/64", "7/16", "7/32", "1/16", "1/128"})},
    };
    return rows;
}

CheckReport check_golden_against(const std::function<Rational(const CouplingIndex&)>& source) {
    CheckReport report{"golden", "published reference rows, n <= 8", 0, {}, {}, true};
    for (const auto& row : golden_rows()) {
        for (std::size_t k = 0; k < row.values.size(); ++k) {
            const CouplingIndex idx{row.n, row.m, row.n % 2 + 2 * static_cast<long>(k)};
            const Rational got = source(idx);
            ++report.cases_run;
            if (got != row.values[k]) report.failures.push_back({failure_location(idx), row.values[k], got});
        }
    }
    return report;
}

CheckReport check_golden_table() {
    const CouplingTable table = build_table(8);
    return check_golden_against([&](const CouplingIndex& idx) { return table.at(idx); });
}

CheckReport check_cross_method(long n_max) {
    CheckReport report{"cross", "all methods, n <= " + std::to_string(n_max) + ", 0 <= i <= n", 0, {}, {}, true};
    const CouplingTable table = build_table(n_max);
    MethodComparer comparer;
    for (long n = 0; n <= n_max; ++n) {
        for (long m = n % 2; m <= n; m += 2) {
            for (long i = 0; i <= n; ++i) {
                const CouplingIndex idx{n, m, i};
                MethodReport r = comparer.compare(idx);
                if (table.contains(idx)) {
                    r.values.emplace("table", table.at(idx));
                    r.agree = r.agree && table.at(idx) == r.values.at("direct");
                }
                ++report.cases_run;
                const Rational& reference = r.values.at("direct");
                for (const auto& [name, value] : r.values) {
                    ++report.method_cases[name];
                    if (value != reference)
                        report.failures.push_back({failure_location(idx) + " method=" + name, reference, value});
                }
            }
        }
    }
    return report;
}

CheckReport check_sum_rule(long n_max) {
    CheckReport report{"sumrule", "expansion at x = 1, n <= " + std::to_string(n_max), 0, {}, {}, true};
    const CouplingTable table = build_table(n_max);
    for (long n = 0; n <= n_max; ++n) {
        for (long m = n % 2; m <= n; m += 2) {
            const Rational at_one = eval_exact(cheb_to_poly(table.row(n, m)), Rational(1));
            ++report.cases_run;
            if (at_one != Rational(1)) report.failures.push_back({failure_location({n, m, 0}), Rational(1), at_one});
        }
    }
    return report;
}

CheckReport check_nonnegativity(long n_max) {
    CheckReport report{"nonneg", "sign of every table entry, n <= " + std::to_string(n_max), 0, {}, {}, false};
    const CouplingTable table = build_table(n_max);
    table.for_each([&](const CouplingIndex& idx, const Rational& v) {
        ++report.cases_run;
        if (v.sign() < 0) report.failures.push_back({failure_location(idx), Rational(0), v});
    });
    return report;
}

CheckReport check_basis_roundtrips(long j_max) {
    CheckReport report{"roundtrip", "x^j via Zernike and Chebyshev expansions, j <= " + std::to_string(j_max), 0, {},
                       {}, true};
    for (long j = 0; j <= j_max; ++j) {
        const Polynomial target = Polynomial::monomial(j);

        ++report.cases_run;
        compare_polynomials(report, "j=" + std::to_string(j) + " basis=chebyshev", target,
                            cheb_to_poly(monomial_to_chebyshev(j)));

        for (long m = j % 2; m <= j; m += 2) {
            Polynomial sum;
            for (const auto& [n, h] : monomial_to_zernike(j, m)) sum = sum + h * zernike_poly(n, m);
            ++report.cases_run;
            compare_polynomials(report, "j=" + std::to_string(j) + " m=" + std::to_string(m) + " basis=zernike",
                                target, sum);
        }
    }
    return report;
}

}  // namespace zcheb
