#include "qcong/oracle.hpp"

#include <functional>

namespace qcong {

std::vector<long long> allowed_parts(long long l1, long long l2, long long N) {
    if (l1 <= 1 || l2 <= 1)
        throw domain_error("biregularity parameters must exceed 1");
    std::vector<long long> parts;
    for (long long s = 1; s <= N; ++s)
        if (s % l1 != 0 && s % l2 != 0) parts.push_back(s);
    return parts;
}

std::vector<mpz_class> count_dp_parts(const std::vector<long long>& parts,
                                      long long N) {
    if (N < 0) throw domain_error("negative table size");
    std::vector<mpz_class> f(static_cast<std::size_t>(N) + 1);
    f[0] = 1;
    // One pass per part size s.  With g = result after absorbing the
    // factor (1 + 2q^s + 2q^{2s} + ...):
    //   g[n] = f[n] + f[n-s] + g[n-s]
    // (first occurrence doubled, later occurrences inherited).
    for (long long s : parts) {
        if (s <= 0 || s > N) continue;
        std::vector<mpz_class> g = f;
        for (long long n = s; n <= N; ++n)
            g[static_cast<std::size_t>(n)] +=
                f[static_cast<std::size_t>(n - s)] +
                g[static_cast<std::size_t>(n - s)];
        f = std::move(g);
    }
    return f;
}

OracleTable count_dp(long long l1, long long l2, long long N) {
    OracleTable t;
    t.l1 = l1;
    t.l2 = l2;
    t.values = count_dp_parts(allowed_parts(l1, l2, N), N);
    return t;
}

long long count_enumerate_parts(const std::vector<long long>& parts, long long n) {
    if (n < 0) throw domain_error("negative target");
    if (n > kEnumerationGuard)
        throw domain_error("enumeration limited to n <= " +
                           std::to_string(kEnumerationGuard) + ", got " +
                           std::to_string(n));
    if (n == 0) return 1; // the empty overpartition

    // Counts 2^{#distinct sizes} by walking overline subsets
    // explicitly: at the first use of a size the branch forks into
    // "overlined" and "not overlined".
    long long total = 0;
    std::function<void(long long, std::size_t)> walk =
        [&](long long remaining, std::size_t max_idx) {
            if (remaining == 0) {
                ++total;
                return;
            }
            for (std::size_t i = max_idx; i-- > 0;) {
                long long s = parts[i];
                if (s > remaining) continue;
                // multiplicity m >= 1 of part s, sizes below i for the rest
                for (long long used = s; used <= remaining; used += s) {
                    walk(remaining - used, i); // first occurrence plain
                    walk(remaining - used, i); // first occurrence overlined
                }
            }
        };
    walk(n, parts.size());
    return total;
}

long long count_enumerate(long long l1, long long l2, long long n) {
    return count_enumerate_parts(allowed_parts(l1, l2, n), n);
}

} // namespace qcong
