#pragma once

#include <cstdint>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// One infinite product factor (sign*q^offset; q^step)_inf^exponent,
/// i.e. prod_{j>=0} (1 - sign*q^{offset+j*step}) raised to `exponent`.
struct PochhammerFactor {
    int sign = 1;          // +1 or -1
    long long offset = 1;  // r >= 1
    long long step = 1;    // s >= 1
    long long exponent = 1;
};

/// Product of (q^k;q^k)_inf^e factors; duplicate steps merge by
/// summing exponents.
struct EtaQuotientSpec {
    std::vector<std::pair<long long, long long>> factors; // (step k, exponent e)
};

/// (q^k;q^k)_inf truncated at N, expanded by the pentagonal number
/// theorem: sum_j (-1)^j q^{k*j(3j-1)/2} over all integers j.
TruncatedSeries pochhammer_simple(long long k, std::size_t N);

/// Literal factor-by-factor expansion of a general Pochhammer symbol.
TruncatedSeries pochhammer_general(const PochhammerFactor& f, std::size_t N);

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t N);

/// Ramanujan theta f(a,b) with monomial arguments a = a_sign*q^a_exp,
/// b = b_sign*q^b_exp: bilateral sum of a^{n(n+1)/2} b^{n(n-1)/2}.
TruncatedSeries theta_f(int a_sign, long long a_exp, int b_sign, long long b_exp,
                        std::size_t N);

/// phi(sign*q^scale) = 1 + 2*sum_{n>=1} sign^{n^2} q^{scale*n^2}.
TruncatedSeries phi(int sign, long long scale, std::size_t N);

/// Generating function of (l1,l2)-biregular overpartition counts,
/// as the eta quotient
///   (q^2)(q^l1)^2(q^l2)^2(q^{2*l1*l2}) /
///   ((q)^2(q^{2*l1})(q^{2*l2})(q^{l1*l2})^2).
/// Requires l1, l2 > 1 and gcd(l1, l2) = 1.
TruncatedSeries biregular_gf(long long l1, long long l2, std::size_t N);

} // namespace qcong
