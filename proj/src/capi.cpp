#include "zcheb/zcheb.h"

#include <cmath>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "zcheb/asc.hpp"
#include "zcheb/coupling.hpp"
#include "zcheb/verification.hpp"

struct zcheb_value {
    zcheb::Rational value;
    std::string exact;
    std::string decimal;

    explicit zcheb_value(zcheb::Rational v)
        : value(std::move(v)), exact(value.str()), decimal(zcheb::shortest_decimal(value.to_double())) {}
};

struct zcheb_table {
    zcheb::CouplingTable table;
};

struct zcheb_report {
    std::string text;
    bool passed = true;
    std::size_t negatives = 0;
};

namespace {

thread_local std::string last_error;

zcheb_status fail(zcheb_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Maps the core's exception types onto status codes.
template <class Fn>
zcheb_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const zcheb::PreconditionError& e) {
        return fail(ZCHEB_ERR_PRECONDITION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ZCHEB_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ZCHEB_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(ZCHEB_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ZCHEB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ZCHEB_ERR_INTERNAL, e.what());
    }
}

zcheb_status null_arg(const char* what) { return fail(ZCHEB_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

void append(zcheb_report& out, const zcheb::CheckReport& r) {
    out.text += r.serialize();
    if (r.check_name == "nonneg") {
        out.negatives += r.failures.size();
        out.text += std::to_string(r.failures.size()) + " negative entries found\n";
    }
    if (r.hard && !r.passed()) out.passed = false;
}

long pick(long n_max, long fallback) { return n_max < 0 ? fallback : n_max; }

}  // namespace

extern "C" {

const char* zcheb_last_error(void) { return last_error.c_str(); }

const char* zcheb_status_name(zcheb_status status) {
    switch (status) {
        case ZCHEB_OK: return "ok";
        case ZCHEB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ZCHEB_ERR_PRECONDITION: return "method precondition violated";
        case ZCHEB_ERR_DOMAIN: return "outside domain";
        case ZCHEB_ERR_IO: return "i/o error";
        case ZCHEB_ERR_OUT_OF_RANGE: return "out of range";
        case ZCHEB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

zcheb_status zcheb_coeff(long n, long m, long i, const char* method, zcheb_value** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new zcheb_value(zcheb::c_by_method(method ? method : "best", {n, m, i}));
        return ZCHEB_OK;
    });
}

const char* zcheb_value_exact(const zcheb_value* value) { return value ? value->exact.c_str() : ""; }
const char* zcheb_value_decimal(const zcheb_value* value) { return value ? value->decimal.c_str() : ""; }
double zcheb_value_double(const zcheb_value* value) { return value ? value->value.to_double() : std::nan(""); }
int zcheb_value_sign(const zcheb_value* value) { return value ? value->value.sign() : 0; }
void zcheb_value_free(zcheb_value* value) { delete value; }

zcheb_status zcheb_table_build(long n_max, unsigned threads, zcheb_table** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new zcheb_table{zcheb::build_table(n_max, threads)};
        return ZCHEB_OK;
    });
}

void zcheb_table_free(zcheb_table* table) { delete table; }
long zcheb_table_n_max(const zcheb_table* table) { return table ? table->table.n_max() : -1; }
size_t zcheb_table_size(const zcheb_table* table) { return table ? table->table.size() : 0; }

zcheb_status zcheb_table_get(const zcheb_table* table, long n, long m, long i, zcheb_value** out) {
    if (!table) return null_arg("table");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new zcheb_value(table->table.at({n, m, i}));
        return ZCHEB_OK;
    });
}

zcheb_status zcheb_table_entry(const zcheb_table* table, size_t k, long* n, long* m, long* i, zcheb_value** out) {
    if (!table) return null_arg("table");
    return guarded([&] {
        const zcheb::CouplingIndex idx = table->table.index_at(k);
        if (n) *n = idx.n;
        if (m) *m = idx.m;
        if (i) *i = idx.i;
        if (out) *out = new zcheb_value(table->table.value_at(k));
        return ZCHEB_OK;
    });
}

uint64_t zcheb_table_recurrence_steps(const zcheb_table* table) {
    return table ? table->table.stats().recurrence_steps : 0;
}

zcheb_status zcheb_table_write_asc(const zcheb_table* table, FILE* out) {
    if (!table) return null_arg("table");
    if (!out) return null_arg("out");
    return guarded([&] {
        bool ok = true;
        table->table.for_each([&](const zcheb::CouplingIndex& idx, const zcheb::Rational& v) {
            if (!ok) return;
            const std::string line = zcheb::make_asc_record(idx, v).line() + "\n";
            ok = std::fwrite(line.data(), 1, line.size(), out) == line.size();
        });
        if (std::fflush(out) != 0 || std::ferror(out)) ok = false;
        return ok ? ZCHEB_OK : fail(ZCHEB_ERR_IO, "failed writing table output");
    });
}

size_t zcheb_lattice_size(long n_max) { return zcheb::lattice_size(n_max); }

zcheb_status zcheb_eval(long n, long m, double x, zcheb_eval_result* out, zcheb_value** exact_direct) {
    if (!out) return null_arg("out");
    return guarded([&] {
        zcheb::require_valid({n, m, 0});
        if (!(x >= 0.0 && x <= 1.0)) return fail(ZCHEB_ERR_DOMAIN, "x must satisfy 0 <= x <= 1");

        zcheb::ChebSeries series{std::vector<zcheb::Rational>(static_cast<std::size_t>(n) + 1)};
        for (long i = n % 2; i <= n; i += 2) series.a[static_cast<std::size_t>(i)] = zcheb::c_best({n, m, i});

        const zcheb::Rational direct = zcheb::eval_exact(zcheb::zernike_poly(n, m), zcheb::Rational::from_double(x));
        out->series = zcheb::eval_cheb_float(series, x);
        out->direct = direct.to_double();
        out->diff = out->series - out->direct;
        if (exact_direct) *exact_direct = new zcheb_value(direct);
        return ZCHEB_OK;
    });
}

zcheb_status zcheb_verify(const char* suite, long n_max, zcheb_report** out) {
    if (!suite) return null_arg("suite");
    if (!out) return null_arg("out");
    return guarded([&] {
        const std::string s = suite;
        const bool all = s == "all";
        if (!all && s != "golden" && s != "cross" && s != "sumrule" && s != "nonneg" && s != "roundtrip")
            return fail(ZCHEB_ERR_INVALID_ARGUMENT, "unknown suite '" + s + "'");

        auto report = std::make_unique<zcheb_report>();
        if (all || s == "golden") append(*report, zcheb::check_golden_table());
        if (all || s == "cross") append(*report, zcheb::check_cross_method(pick(n_max, 20)));
        if (all || s == "sumrule") append(*report, zcheb::check_sum_rule(pick(n_max, 60)));
        if (all || s == "nonneg") append(*report, zcheb::check_nonnegativity(pick(n_max, 120)));
        if (all || s == "roundtrip") append(*report, zcheb::check_basis_roundtrips(pick(n_max, 24)));
        *out = report.release();
        return ZCHEB_OK;
    });
}

int zcheb_report_passed(const zcheb_report* report) { return report && report->passed ? 1 : 0; }
const char* zcheb_report_text(const zcheb_report* report) { return report ? report->text.c_str() : ""; }
size_t zcheb_report_negative_entries(const zcheb_report* report) { return report ? report->negatives : 0; }
void zcheb_report_free(zcheb_report* report) { delete report; }

}  // extern "C"
