#include "qcong/products.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qcong {

namespace {

// In-place multiply by (1 - sign*q^t).  Descending index walk keeps
// the update free of aliasing.
void mul_binomial_inplace(std::vector<Coeff>& c, std::size_t t, int sign) {
    for (std::size_t i = c.size(); i-- > t;) {
        if (c[i - t] == 0) continue;
        if (sign > 0)
            c[i] -= c[i - t];
        else
            c[i] += c[i - t];
    }
}

} // namespace

TruncatedSeries pochhammer_simple(long long k, std::size_t N) {
    if (k < 1) throw domain_error("Pochhammer step must be >= 1");
    std::vector<Coeff> c(N + 1);
    c[0] = 1;
    for (long long j = 1;; ++j) {
        // generalized pentagonal exponents j(3j-1)/2 and j(3j+1)/2
        long long g1 = j * (3 * j - 1) / 2;
        long long g2 = j * (3 * j + 1) / 2;
        bool any = false;
        int sgn = (j % 2 == 0) ? 1 : -1;
        if (k * g1 <= static_cast<long long>(N)) {
            c[static_cast<std::size_t>(k * g1)] += sgn;
            any = true;
        }
        if (k * g2 <= static_cast<long long>(N)) {
            c[static_cast<std::size_t>(k * g2)] += sgn;
            any = true;
        }
        if (!any) break;
    }
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries pochhammer_general(const PochhammerFactor& f, std::size_t N) {
    if (f.offset < 1 || f.step < 1)
        throw domain_error("Pochhammer offset and step must be >= 1");
    if (f.sign != 1 && f.sign != -1)
        throw domain_error("Pochhammer sign must be +1 or -1");
    std::vector<Coeff> c(N + 1);
    c[0] = 1;
    for (long long t = f.offset; t <= static_cast<long long>(N); t += f.step)
        mul_binomial_inplace(c, static_cast<std::size_t>(t), f.sign);
    TruncatedSeries base(N, std::move(c));
    if (f.exponent == 1) return base;
    return pow(base, f.exponent);
}

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t N) {
    std::map<long long, long long> merged;
    for (const auto& [k, e] : spec.factors) {
        if (k < 1) throw domain_error("eta quotient step must be >= 1");
        merged[k] += e;
    }

    // Numerator factors ascending, then one inversion for the whole
    // denominator product: a single dense reciprocal instead of one
    // per factor.
    TruncatedSeries num = TruncatedSeries::one(N);
    TruncatedSeries den = TruncatedSeries::one(N);
    bool have_den = false;
    for (const auto& [k, e] : merged) {
        if (e > 0)
            num = mul(num, pow(pochhammer_simple(k, N), e));
        else if (e < 0) {
            den = mul(den, pow(pochhammer_simple(k, N), -e));
            have_den = true;
        }
    }
    if (!have_den) return num;
    return mul(num, invert(den));
}

TruncatedSeries theta_f(int a_sign, long long a_exp, int b_sign, long long b_exp,
                        std::size_t N) {
    if ((a_sign != 1 && a_sign != -1) || (b_sign != 1 && b_sign != -1))
        throw domain_error("theta signs must be +1 or -1");
    if (a_exp < 0 || b_exp < 0)
        throw domain_error("theta exponents must be >= 0");
    if (a_exp + b_exp == 0)
        throw domain_error("theta argument q^0*q^0 diverges (|ab| < 1 required)");

    std::vector<Coeff> c(N + 1);
    // term n: a^{n(n+1)/2} b^{n(n-1)/2}; exponents grow monotonically
    // in both directions of n, so each branch stops at the first
    // overflow of the truncation order.
    auto accumulate = [&](long long n) -> bool {
        long long ta = n * (n + 1) / 2;
        long long tb = n * (n - 1) / 2;
        long long e = a_exp * ta + b_exp * tb;
        if (e > static_cast<long long>(N)) return false;
        int sgn = 1;
        if (a_sign < 0 && (ta & 1)) sgn = -sgn;
        if (b_sign < 0 && (tb & 1)) sgn = -sgn;
        c[static_cast<std::size_t>(e)] += sgn;
        return true;
    };
    for (long long n = 0; accumulate(n); ++n) {}
    for (long long n = -1; accumulate(n); --n) {}
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries phi(int sign, long long scale, std::size_t N) {
    if (sign != 1 && sign != -1) throw domain_error("phi sign must be +1 or -1");
    if (scale < 1) throw domain_error("phi scale must be >= 1");
    std::vector<Coeff> c(N + 1);
    c[0] = 1;
    for (long long n = 1; scale * n * n <= static_cast<long long>(N); ++n) {
        // sign^{n^2} = sign^n since n^2 and n share parity
        int sgn = (sign < 0 && (n & 1)) ? -1 : 1;
        c[static_cast<std::size_t>(scale * n * n)] += 2 * sgn;
    }
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries biregular_gf(long long l1, long long l2, std::size_t N) {
    if (l1 <= 1 || l2 <= 1)
        throw domain_error("biregularity parameters must exceed 1");
    if (std::gcd(l1, l2) != 1)
        throw domain_error("biregularity parameters must be coprime: gcd(" +
                           std::to_string(l1) + "," + std::to_string(l2) +
                           ") != 1");
    EtaQuotientSpec spec;
    spec.factors = {{2, 1},       {l1, 2},      {l2, 2},      {2 * l1 * l2, 1},
                    {1, -2},      {2 * l1, -1}, {2 * l2, -1}, {l1 * l2, -2}};
    return eta_quotient(spec, N);
}

} // namespace qcong
