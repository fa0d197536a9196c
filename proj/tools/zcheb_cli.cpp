// Command-line front end over the C API.
//
//   zcheb table --nmax N [--out FILE]
//   zcheb coeff N M I [--method NAME]
//   zcheb eval N M X
//   zcheb verify SUITE [--nmax N]
//
// Exit status: 0 success, 1 usage or I/O error (or a failed hard check),
// 2 the chosen method does not cover the index.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "zcheb/zcheb.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;

struct ValueDeleter {
    void operator()(zcheb_value* v) const { zcheb_value_free(v); }
};
struct TableDeleter {
    void operator()(zcheb_table* t) const { zcheb_table_free(t); }
};
struct ReportDeleter {
    void operator()(zcheb_report* r) const { zcheb_report_free(r); }
};
using ValuePtr = std::unique_ptr<zcheb_value, ValueDeleter>;
using TablePtr = std::unique_ptr<zcheb_table, TableDeleter>;
using ReportPtr = std::unique_ptr<zcheb_report, ReportDeleter>;

int report_error(zcheb_status status, const std::string& usage = {}) {
    std::cerr << "zcheb: " << zcheb_status_name(status) << ": " << zcheb_last_error() << "\n";
    if (!usage.empty()) std::cerr << usage;
    return status == ZCHEB_ERR_PRECONDITION ? kExitPrecondition : kExitUsage;
}

int run_table(long n_max, const std::string& out_path) {
    if (n_max < 0) {
        std::cerr << "zcheb: --nmax must be non-negative\n";
        return kExitUsage;
    }
    zcheb_table* raw = nullptr;
    if (const auto st = zcheb_table_build(n_max, 0, &raw); st != ZCHEB_OK) return report_error(st);
    TablePtr table(raw);

    FILE* out = stdout;
    if (!out_path.empty()) {
        out = std::fopen(out_path.c_str(), "w");
        if (!out) {
            std::cerr << "zcheb: cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
    }
    const auto st = zcheb_table_write_asc(table.get(), out);
    if (out != stdout && std::fclose(out) != 0 && st == ZCHEB_OK) {
        std::cerr << "zcheb: error closing '" << out_path << "'\n";
        return kExitUsage;
    }
    return st == ZCHEB_OK ? kExitOk : report_error(st);
}

int run_coeff(long n, long m, long i, const std::string& method, const std::string& usage) {
    zcheb_value* raw = nullptr;
    if (const auto st = zcheb_coeff(n, m, i, method.c_str(), &raw); st != ZCHEB_OK)
        return report_error(st, st == ZCHEB_ERR_INVALID_ARGUMENT ? usage : std::string());
    ValuePtr value(raw);
    std::cout << zcheb_value_exact(value.get()) << "\n" << zcheb_value_decimal(value.get()) << "\n";
    return kExitOk;
}

int run_eval(long n, long m, double x, const std::string& usage) {
    zcheb_eval_result r{};
    zcheb_value* raw = nullptr;
    if (const auto st = zcheb_eval(n, m, x, &r, &raw); st != ZCHEB_OK)
        return report_error(st, st == ZCHEB_ERR_INVALID_ARGUMENT ? usage : std::string());
    ValuePtr exact(raw);
    std::printf("series %.17g\ndirect %.17g\nexact %s\ndiff %.3g\n", r.series, r.direct, zcheb_value_exact(exact.get()),
                r.diff);
    return kExitOk;
}

int run_verify(const std::string& suite, long n_max) {
    zcheb_report* raw = nullptr;
    if (const auto st = zcheb_verify(suite.c_str(), n_max, &raw); st != ZCHEB_OK) return report_error(st);
    ReportPtr report(raw);
    std::cout << zcheb_report_text(report.get());
    if (zcheb_report_negative_entries(report.get()) > 0)
        std::cout << "FINDING: negative coupling coefficients exist (see nonneg lines above)\n";
    return zcheb_report_passed(report.get()) ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chebyshev expansion coefficients of Zernike radial polynomials"};
    app.require_subcommand(1);

    long table_nmax = -1;
    std::string table_out;
    auto* table = app.add_subcommand("table", "Write all coefficients with n <= NMAX as 'n m i float exact' lines");
    table->add_option("--nmax", table_nmax, "Largest radial order")->required();
    table->add_option("--out", table_out, "Output file (default stdout)");

    long cn = 0, cm = 0, ci = 0;
    std::string method = "best";
    auto* coeff = app.add_subcommand("coeff", "Print one coefficient c(N, M, I), exact then decimal");
    coeff->add_option("N", cn, "Radial order")->required();
    coeff->add_option("M", cm, "Azimuthal order")->required();
    coeff->add_option("I", ci, "Chebyshev order")->required();
    coeff->add_option("--method", method, "direct, product, rec5, i0, i1, oracle or best")
        ->check(CLI::IsMember({"direct", "product", "rec5", "i0", "i1", "oracle", "best", "product_low",
                               "product_high", "hyper", "hyper_low", "hyper_high", "i0_hyper", "i1_rec",
                               "i1_hyper", "mm"}));

    long en = 0, em = 0;
    double ex = 0.0;
    auto* eval = app.add_subcommand("eval", "Evaluate R_N^M(X) through its Chebyshev expansion and directly");
    eval->add_option("N", en, "Radial order")->required();
    eval->add_option("M", em, "Azimuthal order")->required();
    eval->add_option("X", ex, "Point in [0, 1]")->required();

    std::string suite;
    long verify_nmax = -1;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("SUITE", suite, "golden, cross, sumrule, nonneg, roundtrip or all")
        ->required()
        ->check(CLI::IsMember({"golden", "cross", "sumrule", "nonneg", "roundtrip", "all"}));
    verify->add_option("--nmax", verify_nmax, "Range of the suite (suite-specific default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*table) return run_table(table_nmax, table_out);
    if (*coeff) return run_coeff(cn, cm, ci, method, coeff->help());
    if (*eval) return run_eval(en, em, ex, eval->help());
    return run_verify(suite, verify_nmax);
}
