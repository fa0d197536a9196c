#include "zcheb/coupling.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "zcheb/combinatorics.hpp"
#include "zcheb/hypergeometric.hpp"

namespace zcheb {

namespace {

Rational sign_pow(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

Rational ratio(const Integer& p, const Integer& q) { return Rational(p, q); }

void require_lattice(const CouplingIndex& idx, const char* method) {
    require_valid(idx);
    if (!idx.on_lattice())
        throw PreconditionError(std::string(method) + ": index " + idx.str() + " is off the lattice (i > n or n - i odd)");
}

}  // namespace

std::string CouplingIndex::str() const {
    std::ostringstream os;
    os << "(" << n << "," << m << "," << i << ")";
    return os.str();
}

void require_valid(const CouplingIndex& idx) {
    if (!idx.well_formed())
        throw std::invalid_argument("index " + idx.str() + " is malformed: need n >= 0, 0 <= m <= n, i >= 0");
    if ((idx.n - idx.m) % 2 != 0) throw PreconditionError("index " + idx.str() + ": n - m must be even");
}

Rational c_direct(const CouplingIndex& idx) {
    require_valid(idx);
    const auto [n, m, i] = idx;
    if (i > n || (n - i) % 2 != 0) return Rational();
    const long eps = (n - m) / 2;
    Rational sum;
    for (long s = std::max(0L, (i - m) / 2); s <= eps; ++s) {
        const Integer b = binomial((n + m) / 2 + s, eps - s) * binomial(m + 2 * s, s)
                          * binomial(m + 2 * s, (m + 2 * s - i) / 2);
        const Rational term = Rational(b) * pow2(1 - m - 2 * s);
        sum = s % 2 == 0 ? sum + term : sum - term;
    }
    return sign_pow(eps) * sum;
}

Rational c_mm(long m, long i) {
    if (m < 0 || i < 0 || i > m || (m - i) % 2 != 0)
        throw PreconditionError("c_mm: need 0 <= i <= m with m - i even");
    return pow2(1 - m) * Rational(binomial(m, (m - i) / 2));
}

Rational omega(long eps, long m, long i) {
    const Integer mm = m;
    const Integer ii = i;
    switch (eps) {
        case 0: return 1;
        case 1: return Rational(Integer(ii * ii));
        case 2: {
            const Integer t = -mm + ii * ii - 4;
            return Rational(Integer(t * t));
        }
        case 3: {
            const Integer t = -3 * mm - 16 + ii * ii;
            return Rational(Integer(ii * ii * t * t));
        }
        default: throw PreconditionError("omega: only eps = 0..3 are tabulated");
    }
}

Rational c_product_low(const CouplingIndex& idx) {
    require_lattice(idx, "c_product_low");
    const auto [n, m, i] = idx;
    const long eps = (n - m) / 2;
    if (i > m || eps > 3) throw PreconditionError("c_product_low: need i <= m and (n - m)/2 <= 3");
    Integer den = 1;
    for (long d = 1; d <= eps; ++d) den *= Integer(2 * d + m + i) * Integer(2 * d + m - i);
    return pow2(1 - m) * Rational(binomial((n + m) / 2, eps) * binomial(m, (m - i) / 2)) * omega(eps, m, i)
           / Rational(den);
}

Rational c_product_high(const CouplingIndex& idx) {
    require_lattice(idx, "c_product_high");
    const auto [n, m, i] = idx;
    const long eps = (n - i) / 2;
    if (i < m || eps > 3) throw PreconditionError("c_product_high: need i >= m and (n - i)/2 <= 3");
    Integer den = 1;
    for (long d = 1; d <= eps; ++d) den *= Integer(2 * d + i + m) * Integer(2 * d + i - m);
    return pow2(1 - i) * Rational(binomial((n + i) / 2, i) * binomial(i, (i - m) / 2)) * omega(eps, i, m)
           / Rational(den);
}

Rational c_i0(long n, long m) {
    require_valid({n, m, 0});
    if (n % 2 != 0 || m % 2 != 0) throw PreconditionError("c_i0: n and m must be even");
    const long half = (n - m) / 2;
    if (half % 2 != 0) return Rational();
    const Rational r = ratio(double_factorial(half - 1), factorial((n + m) / 4));
    return pow2(1 - (n + m) / 2) * ratio(factorial((n + m) / 2), factorial(half)) * r * r;
}

Rational c_i1_rec(long n, long m) {
    require_valid({n, m, 1});
    if (n % 2 == 0 || m % 2 == 0) throw PreconditionError("c_i1_rec: n and m must be odd");
    if (n <= m + 2) return c_product_low({n, m, 1});

    Rational older = c_product_low({m, m, 1});      // c_{k-4}
    Rational old = c_product_low({m + 2, m, 1});    // c_{k-2}
    for (long k = m + 4; k <= n; k += 2) {
        // -A c_{k-4} - B c_{k-2} + C c_k = 0, all scaled by 16
        const Integer a = Integer(k - m - 2) * (k + m - 2) * (k - 3) * k * 2;
        const Integer b = (Integer(k + m) * (k - m) - 2 * k) * (k - 1) * 4;
        const Integer c = Integer(k + m) * (k - m) * (k - 2) * (k + 1) * 2;
        Rational next = (Rational(a) * older + Rational(b) * old) / Rational(c);
        older = std::move(old);
        old = std::move(next);
    }
    return old;
}

std::vector<std::pair<long, Rational>> c_rec5_row(long m, long i, long n_max, std::uint64_t* steps) {
    if (m < 0 || i < 0 || (m - i) % 2 != 0) throw PreconditionError("c_rec5_row: need m, i >= 0 with m - i even");
    const long n0 = std::max(m, i);
    if (n_max < n0) throw PreconditionError("c_rec5_row: n_max below max(m, i)");

    std::vector<std::pair<long, Rational>> row;
    row.reserve(static_cast<std::size_t>((n_max - n0) / 2 + 1));
    for (long n = n0; n <= std::min(n_max, n0 + 6); n += 2)
        row.emplace_back(n, i <= m ? c_product_low({n, m, i}) : c_product_high({n, m, i}));

    const Integer M = m, I = i, M2 = M * M, I2 = I * I;
    for (long n = n0 + 8; n <= n_max; n += 2) {
        const Integer N = n, N2 = N * N, N3 = N2 * N, N4 = N3 * N;
        const long leading[] = {n + i, n - i, n - 4, n + m, n - 5, n - 6, n - m};
        Integer lead = 1;
        for (long f : leading) {
            if (f <= 0) throw std::logic_error("c_rec5_row: recurrence cofactor vanished");
            lead *= f;
        }
        const Integer p2 = 4 * N - 4 * N2 - M2 * N - N * I2 + N3 + M2 * I2;
        const Integer p4 = 32 - 72 * N - 2 * M2 - 3 * M2 * I2 - 2 * I2 + 48 * N2 + 6 * M2 * N - N2 * I2 + 6 * N * I2
                           - M2 * N2 - 12 * N3 + N4;
        const Integer p6 = -96 + 64 * N + 6 * M2 - M2 * I2 + 6 * I2 - 14 * N2 - M2 * N - N * I2 + N3;
        const Integer k2 = 4 * Integer(n - 1) * p2 * (n - 5) * (n - 6);
        const Integer k4 = 2 * Integer(n - 3) * n * p4 * (n - 6);
        const Integer k6 = 4 * p6 * n * (n - 1) * (n - 5);
        const Integer k8 = Integer(n - m - 6) * (n - 2) * (n - 1) * n * (n - 6 + i) * (n - 6 - i) * (n + m - 6);

        const std::size_t last = row.size() - 1;  // n - 2
        const Rational rhs = Rational(k2) * row[last].second + Rational(k4) * row[last - 1].second
                             - Rational(k6) * row[last - 2].second - Rational(k8) * row[last - 3].second;
        row.emplace_back(n, rhs / Rational(lead));
        if (steps) ++*steps;
    }
    return row;
}

ChebSeries c_oracle_row(long n, long m) {
    require_valid({n, m, 0});
    Polynomial residual = zernike_poly(n, m);
    ChebSeries out{std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
    for (long i = n; i >= 0 && !residual.is_zero(); i -= 2) {
        const Polynomial t = chebyshev_poly(i);
        const Rational q = residual.coeff(i) / t.leading();
        out.a[static_cast<std::size_t>(i)] = i == 0 ? Rational(2) * q : q;
        residual = residual - q * t;
    }
    if (!residual.is_zero())
        throw std::logic_error("c_oracle_row: residual " + residual.str() + " left after deflation");
    return out;
}

Rational c_hyper_low(const CouplingIndex& idx) {
    require_lattice(idx, "c_hyper_low");
    const auto [n, m, i] = idx;
    if (i > m) throw PreconditionError("c_hyper_low: need i <= m");
    const long eps = (n - m) / 2;
    const Rational pre = sign_pow(eps) * pow2(1 - m)
                         * ratio(factorial((n + m) / 2), factorial(eps) * factorial((m - i) / 2) * factorial((m + i) / 2));
    const PfqParams p{{rat(m + 1, 2), Rational(-eps), Rational(1 + (n + m) / 2), rat(m + 2, 2)},
                      {Rational(m + 1), Rational(1 + (m - i) / 2), Rational(1 + (m + i) / 2)}};
    return pre * pfq_terminating(p);
}

Rational c_hyper_high(const CouplingIndex& idx) {
    require_lattice(idx, "c_hyper_high");
    const auto [n, m, i] = idx;
    if (i < m) throw PreconditionError("c_hyper_high: need i >= m");
    const Rational pre = sign_pow((n - i) / 2) * pow2(1 - i) * Rational(binomial((n + i) / 2, i) * binomial(i, (i - m) / 2));
    const PfqParams p{{Rational(1 + (n + i) / 2), rat(i + 1, 2), rat(i + 2, 2), Rational(-(n - i) / 2)},
                      {Rational(1 + (m + i) / 2), Rational(1 + i), Rational(1 + (i - m) / 2)}};
    return pre * pfq_terminating(p);
}

Rational c_i0_hyper(long n, long m) {
    require_valid({n, m, 0});
    if (n % 2 != 0 || m % 2 != 0) throw PreconditionError("c_i0_hyper: n and m must be even");
    const long eps = (n - m) / 2;
    const Integer half_m = factorial(m / 2);
    const Rational pre = sign_pow(eps) * pow2(1 - m) * ratio(factorial((n + m) / 2), factorial(eps) * half_m * half_m);
    const PfqParams p{{rat(m + 1, 2), Rational(-eps), Rational(1 + (n + m) / 2)},
                      {Rational(m + 1), Rational(1 + m / 2)}};
    return pre * pfq_terminating(p);
}

Rational c_i1_hyper(long n, long m) {
    require_valid({n, m, 1});
    if (n % 2 == 0 || m % 2 == 0) throw PreconditionError("c_i1_hyper: n and m must be odd");
    const long eps = (n - m) / 2;
    const Rational pre = sign_pow(eps) * pow2(1 - m)
                         * ratio(factorial((n + m) / 2), factorial(eps) * factorial((m - 1) / 2) * factorial((m + 1) / 2));
    const PfqParams p{{Rational(-eps), Rational(1 + (n + m) / 2), rat(m + 2, 2)},
                      {Rational(m + 1), rat(m + 3, 2)}};
    return pre * pfq_terminating(p);
}

Rational c_best(const CouplingIndex& idx) {
    if (!idx.well_formed())
        throw std::invalid_argument("index " + idx.str() + " is malformed: need n >= 0, 0 <= m <= n, i >= 0");
    if (!idx.on_lattice()) return Rational();
    const auto [n, m, i] = idx;
    if (i <= m && (n - m) / 2 <= 3) return c_product_low(idx);
    if (i >= m && (n - i) / 2 <= 3) return c_product_high(idx);
    return c_rec5_row(m, i, n).back().second;
}

std::size_t lattice_size(long n_max) {
    std::size_t total = 0;
    for (long n = 0; n <= n_max; ++n) {
        const auto k = static_cast<std::size_t>(n / 2 + 1);
        total += k * k;
    }
    return total;
}

std::size_t CouplingTable::offset(const CouplingIndex& idx) const {
    const long p = idx.n % 2;
    const auto width = static_cast<std::size_t>(idx.n / 2 + 1);
    return block_start_[static_cast<std::size_t>(idx.n)] + static_cast<std::size_t>((idx.m - p) / 2) * width
           + static_cast<std::size_t>((idx.i - p) / 2);
}

const Rational& CouplingTable::at(const CouplingIndex& idx) const {
    if (!contains(idx)) throw std::out_of_range("coupling table has no entry " + idx.str());
    return values_[offset(idx)];
}

CouplingIndex CouplingTable::index_at(std::size_t k) const {
    if (k >= values_.size()) throw std::out_of_range("coupling table position out of range");
    const auto it = std::upper_bound(block_start_.begin(), block_start_.end(), k);
    const long n = static_cast<long>(it - block_start_.begin()) - 1;
    const std::size_t r = k - block_start_[static_cast<std::size_t>(n)];
    const auto width = static_cast<std::size_t>(n / 2 + 1);
    return {n, n % 2 + 2 * static_cast<long>(r / width), n % 2 + 2 * static_cast<long>(r % width)};
}

ChebSeries CouplingTable::row(long n, long m) const {
    ChebSeries s{std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
    for (long i = n % 2; i <= n; i += 2) s.a[static_cast<std::size_t>(i)] = at({n, m, i});
    return s;
}

CouplingTable build_table(long n_max, unsigned threads) {
    if (n_max < 0) throw std::invalid_argument("build_table: n_max must be non-negative");
    CouplingTable t;
    t.n_max_ = n_max;
    t.block_start_.resize(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) t.block_start_[static_cast<std::size_t>(n)] = lattice_size(n - 1);
    t.values_.resize(lattice_size(n_max));

    std::vector<std::pair<long, long>> pairs;
    for (long m = 0; m <= n_max; ++m)
        for (long i = m % 2; i <= n_max; i += 2) pairs.emplace_back(m, i);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, pairs.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> steps{0}, seeds{0};
    auto worker = [&] {
        std::uint64_t local_steps = 0, local_seeds = 0;
        for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) {
            const auto [m, i] = pairs[k];
            const long top = n_max - (n_max - m) % 2;
            const std::uint64_t before = local_steps;
            auto row = c_rec5_row(m, i, top, &local_steps);
            local_seeds += row.size() - (local_steps - before);
            // Rows own disjoint slots, so workers never write the same element.
            for (auto& [n, v] : row) t.values_[t.offset({n, m, i})] = std::move(v);
        }
        steps += local_steps;
        seeds += local_seeds;
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
        worker();
    }
    t.stats_ = {steps.load(), seeds.load(), pairs.size()};
    return t;
}

std::vector<std::string> MethodComparer::applicable(const CouplingIndex& idx) {
    if (!idx.valid()) return {"best"};
    if (!idx.on_lattice()) return {"best", "direct"};
    const auto [n, m, i] = idx;
    std::vector<std::string> out{"best", "direct", "oracle", "rec5"};
    if (i <= m) out.emplace_back("hyper_low");
    if (i >= m) out.emplace_back("hyper_high");
    if (i <= m && (n - m) / 2 <= 3) out.emplace_back("product_low");
    if (i >= m && (n - i) / 2 <= 3) out.emplace_back("product_high");
    if (n == m) out.emplace_back("mm");
    if (i == 0) {
        out.emplace_back("i0");
        out.emplace_back("i0_hyper");
    }
    if (i == 1) {
        out.emplace_back("i1_rec");
        out.emplace_back("i1_hyper");
    }
    return out;
}

const Rational& MethodComparer::rec5_value(const CouplingIndex& idx) {
    auto& row = rec5_rows_[{idx.m, idx.i}];
    const long n0 = std::max(idx.m, idx.i);
    const auto want = static_cast<std::size_t>((idx.n - n0) / 2);
    if (row.size() <= want) {
        row.clear();
        for (auto& [n, v] : c_rec5_row(idx.m, idx.i, idx.n)) row.push_back(std::move(v));
    }
    return row[want];
}

const ChebSeries& MethodComparer::oracle_row(long n, long m) {
    auto it = oracle_rows_.find({n, m});
    if (it == oracle_rows_.end()) it = oracle_rows_.emplace(std::pair{n, m}, c_oracle_row(n, m)).first;
    return it->second;
}

MethodReport MethodComparer::compare(const CouplingIndex& idx) {
    if (!idx.well_formed()) throw std::invalid_argument("index " + idx.str() + " is malformed");
    MethodReport report{idx, {}, true};
    for (const auto& name : applicable(idx)) {
        if (name == "rec5") report.values.emplace(name, rec5_value(idx));
        else if (name == "oracle") report.values.emplace(name, oracle_row(idx.n, idx.m).at(idx.i));
        else report.values.emplace(name, c_by_method(name, idx));
    }
    const Rational& first = report.values.begin()->second;
    report.agree = std::all_of(report.values.begin(), report.values.end(),
                               [&](const auto& kv) { return kv.second == first; });
    return report;
}

Rational c_by_method(const std::string& method, const CouplingIndex& idx) {
    static const char* const known[] = {"best", "direct", "product", "product_low", "product_high", "rec5",
                                        "oracle", "hyper", "hyper_low", "hyper_high", "mm", "i0",
                                        "i0_hyper", "i1", "i1_rec", "i1_hyper"};
    if (std::find(std::begin(known), std::end(known), method) == std::end(known))
        throw std::invalid_argument("unknown method '" + method + "'");
    if (method == "best") return c_best(idx);
    if (method == "direct") return c_direct(idx);

    require_lattice(idx, method.c_str());
    const auto [n, m, i] = idx;
    if (method == "product") {
        if (i <= m && (n - m) / 2 <= 3) return c_product_low(idx);
        if (i >= m && (n - i) / 2 <= 3) return c_product_high(idx);
        throw PreconditionError("product: needs (n - m)/2 <= 3 with i <= m, or (n - i)/2 <= 3 with i >= m");
    }
    if (method == "product_low") return c_product_low(idx);
    if (method == "product_high") return c_product_high(idx);
    if (method == "rec5") return c_rec5_row(m, i, n).back().second;
    if (method == "oracle") return c_oracle_row(n, m).at(i);
    if (method == "hyper") return i <= m ? c_hyper_low(idx) : c_hyper_high(idx);
    if (method == "hyper_low") return c_hyper_low(idx);
    if (method == "hyper_high") return c_hyper_high(idx);
    if (method == "mm") {
        if (n != m) throw PreconditionError("mm: needs n == m");
        return c_mm(m, i);
    }
    if (method == "i0" || method == "i0_hyper") {
        if (i != 0) throw PreconditionError(method + ": needs i == 0");
        return method == "i0" ? c_i0(n, m) : c_i0_hyper(n, m);
    }
    if (method == "i1" || method == "i1_rec" || method == "i1_hyper") {
        if (i != 1) throw PreconditionError(method + ": needs i == 1");
        return method == "i1_hyper" ? c_i1_hyper(n, m) : c_i1_rec(n, m);
    }
    throw std::logic_error("c_by_method: unhandled method '" + method + "'");
}

}  // namespace zcheb
