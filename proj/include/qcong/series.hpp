#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"

namespace qcong {

using Coeff = mpz_class;

/// Exact integer power series in q truncated at a fixed order N:
/// exponents 0..N inclusive, arbitrary-precision coefficients.
/// Values are immutable once built; every operation returns a new
/// series and all binary operations require equal orders.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

    TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs)
        : c_(std::move(coeffs)) {
        if (c_.size() != order + 1)
            throw range_error("coefficient count does not match order+1");
    }

    static TruncatedSeries zero(std::size_t order) {
        return TruncatedSeries(order);
    }
    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of q^n; n > order is an error.
    const Coeff& coeff(std::size_t n) const {
        if (n >= c_.size())
            throw range_error("coefficient index " + std::to_string(n) +
                              " exceeds order " + std::to_string(order()));
        return c_[n];
    }

    /// Unchecked access, for the arithmetic kernels.
    const Coeff& operator[](std::size_t n) const { return c_[n]; }

    const std::vector<Coeff>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Coeff& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Coeff> c_;

    Coeff& at(std::size_t n) { return c_[n]; }

    friend TruncatedSeries make_monomial(const Coeff&, std::size_t, std::size_t);
    friend TruncatedSeries add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries sub(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries negate(const TruncatedSeries&);
    friend TruncatedSeries scalar_mul(const Coeff&, const TruncatedSeries&);
    friend TruncatedSeries invert(const TruncatedSeries&);
    friend TruncatedSeries substitute_power(const TruncatedSeries&, std::size_t);
    friend TruncatedSeries reduce_mod(const TruncatedSeries&, const Coeff&);
    friend struct series_kernel;
};

/// c * q^e at the given order; e must not exceed the order.
TruncatedSeries make_monomial(const Coeff& c, std::size_t e, std::size_t order);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scalar_mul(const Coeff& c, const TruncatedSeries& a);

/// Cauchy product truncated at the common order.  Dispatches to the
/// OpenMP kernel above a size cutoff when parallelism is enabled;
/// results are identical to the serial reference.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to truncation.  Requires constant term
/// +1 or -1 so the result stays integral.
TruncatedSeries invert(const TruncatedSeries& a);

/// Integer power by repeated squaring; negative exponents invert
/// first (unit constant term required).
TruncatedSeries pow(const TruncatedSeries& a, long long e);

/// q -> q^k substitution: result coefficient at k*i is a's coefficient
/// at i, zero elsewhere; the order is preserved.
TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k);

/// Coefficientwise least non-negative residue mod m (m >= 2).
TruncatedSeries reduce_mod(const TruncatedSeries& a, const Coeff& m);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }

namespace detail {
/// Serial reference kernel, kept as the correctness baseline for the
/// parallel one.
TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);
/// OpenMP kernel: output coefficients are computed independently.
TruncatedSeries mul_parallel(const TruncatedSeries& a, const TruncatedSeries& b);
} // namespace detail

/// Global switches used by the CLI; mul() consults them.
void enable_parallel(bool on);
bool parallel_enabled();
void set_worker_threads(int n); // 0 = library default

} // namespace qcong
