#pragma once

#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"

namespace qcong {

/// Exact biregular overpartition counts computed combinatorially,
/// independent of the series engine.
struct OracleTable {
    long long l1 = 0;
    long long l2 = 0;
    std::vector<mpz_class> values; // index n = count at n, n = 0..N
};

/// Part sizes in 1..N divisible by neither l1 nor l2, ascending.
std::vector<long long> allowed_parts(long long l1, long long l2, long long N);

/// Dynamic program over an explicit part list: using a part size with
/// any multiplicity contributes a factor of 2 (overline the first
/// occurrence or not).
std::vector<mpz_class> count_dp_parts(const std::vector<long long>& parts,
                                      long long N);

OracleTable count_dp(long long l1, long long l2, long long N);

/// Second, slower oracle: literally enumerates non-increasing part
/// sequences and expands every subset of distinct sizes as the set of
/// overlined sizes.  No sharing with the DP.  Guarded at n <= 40.
long long count_enumerate_parts(const std::vector<long long>& parts, long long n);

long long count_enumerate(long long l1, long long l2, long long n);

inline constexpr long long kEnumerationGuard = 40;

} // namespace qcong
