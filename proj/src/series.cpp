#include "qcong/series.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcong {

namespace {

std::atomic<bool> g_parallel{true};
// Below this order the fork/join overhead dominates the convolution.
constexpr std::size_t kParallelCutoff = 512;

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw order_mismatch_error(
            "series order mismatch: " + std::to_string(a.order()) + " vs " +
            std::to_string(b.order()));
}

std::vector<std::size_t> nonzero_indices(const TruncatedSeries& a) {
    std::vector<std::size_t> nz;
    nz.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) nz.push_back(i);
    return nz;
}

} // namespace

// Grants the kernels write access to freshly built results.
struct series_kernel {
    static Coeff& at(TruncatedSeries& s, std::size_t n) { return s.at(n); }
};

void enable_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

void set_worker_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

TruncatedSeries make_monomial(const Coeff& c, std::size_t e, std::size_t order) {
    if (e > order)
        throw range_error("monomial exponent " + std::to_string(e) +
                          " exceeds order " + std::to_string(order));
    TruncatedSeries s(order);
    s.at(e) = c;
    return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.size(); ++i) r.at(i) = a[i] + b[i];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.size(); ++i) r.at(i) = a[i] - b[i];
    return r;
}

TruncatedSeries negate(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.size(); ++i) r.at(i) = -a[i];
    return r;
}

TruncatedSeries scalar_mul(const Coeff& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.size(); ++i) r.at(i) = c * a[i];
    return r;
}

namespace detail {

// Both kernels run the outer loop over the operand with fewer nonzero
// terms: the named products of this domain (pentagonal series and
// friends) are sparse and the speedup is large.

TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.size();
    auto nza = nonzero_indices(a);
    auto nzb = nonzero_indices(b);
    const bool a_outer = nza.size() <= nzb.size();
    const TruncatedSeries& s = a_outer ? a : b;
    const TruncatedSeries& d = a_outer ? b : a;
    const auto& nz = a_outer ? nza : nzb;

    TruncatedSeries r(a.order());
    for (std::size_t i : nz) {
        const Coeff& si = s[i];
        for (std::size_t j = 0; j + i < n; ++j) {
            if (d[j] != 0)
                mpz_addmul(series_kernel::at(r, i + j).get_mpz_t(),
                           si.get_mpz_t(), d[j].get_mpz_t());
        }
    }
    return r;
}

TruncatedSeries mul_parallel(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    auto nza = nonzero_indices(a);
    auto nzb = nonzero_indices(b);
    const bool a_outer = nza.size() <= nzb.size();
    const TruncatedSeries& s = a_outer ? a : b;
    const TruncatedSeries& d = a_outer ? b : a;
    const auto& nz = a_outer ? nza : nzb;

    TruncatedSeries r(a.order());
    const long long last = static_cast<long long>(a.order());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long k = 0; k <= last; ++k) {
        Coeff& acc = series_kernel::at(r, static_cast<std::size_t>(k));
        for (std::size_t i : nz) {
            if (static_cast<long long>(i) > k) break;
            const Coeff& dj = d[static_cast<std::size_t>(k) - i];
            if (dj != 0)
                mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), dj.get_mpz_t());
        }
    }
    return r;
}

} // namespace detail

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
#ifdef _OPENMP
    if (g_parallel && a.order() >= kParallelCutoff)
        return detail::mul_parallel(a, b);
#endif
    return detail::mul_serial(a, b);
}

TruncatedSeries invert(const TruncatedSeries& a) {
    const Coeff& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw non_unit_error("cannot invert series with constant term " +
                             a0.get_str());

    // b_0 = 1/a_0, b_k = -(1/a_0) * sum_{j>=1} a_j b_{k-j}; with a_0 = +-1
    // the reciprocal equals a_0 itself.  Only nonzero a_j contribute.
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < a.size(); ++j)
        if (a[j] != 0) nz.push_back(j);

    TruncatedSeries b(a.order());
    b.at(0) = a0;
    Coeff t;
    for (std::size_t k = 1; k < a.size(); ++k) {
        t = 0;
        for (std::size_t j : nz) {
            if (j > k) break;
            mpz_addmul(t.get_mpz_t(), a[j].get_mpz_t(), b[k - j].get_mpz_t());
        }
        if (a0 == 1)
            b.at(k) = -t;
        else
            b.at(k) = t;
    }
    return b;
}

TruncatedSeries pow(const TruncatedSeries& a, long long e) {
    if (e == 0) return TruncatedSeries::one(a.order());
    if (e < 0) return pow(invert(a), -e);
    TruncatedSeries base = a;
    TruncatedSeries acc = TruncatedSeries::one(a.order());
    bool acc_used = false;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) {
            acc = acc_used ? mul(acc, base) : base;
            acc_used = true;
        }
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return acc;
}

TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k) {
    if (k == 0) throw domain_error("substitution step must be >= 1");
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i * k <= a.order(); ++i) r.at(i * k) = a[i];
    return r;
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, const Coeff& m) {
    if (m < 2) throw domain_error("modulus must be >= 2");
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_mod(series_kernel::at(r, i).get_mpz_t(), a[i].get_mpz_t(),
                m.get_mpz_t());
    return r;
}

} // namespace qcong
