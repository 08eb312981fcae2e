#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcong/report.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Parameter tuple for one claim instance.  Unused components stay -1.
struct ClaimParams {
    int alpha = -1;
    int beta = -1;
    int k = -1;
    int i = -1;
};

/// One congruence family "count(a*n + b) == 0 (mod m)" over the
/// biregular pair determined by (alpha, beta), with its hypothesis.
struct CongruenceClaim {
    std::string id;
    std::string statement; // human-readable summary
    int modulus = 0;
    bool uses_beta = false;
    bool uses_k = false;
    bool uses_i = false;
    std::function<bool(const ClaimParams&)> admits;
    std::function<long long(const ClaimParams&)> l1_of;
    std::function<long long(const ClaimParams&)> l2_of;
    std::function<std::pair<long long, long long>(const ClaimParams&)> progression;
};

/// All claim families, one record per congruence in the verified
/// theorem set.
const std::vector<CongruenceClaim>& claim_registry();

/// Expected ids; the registry is validated against this list so no
/// family can be dropped silently.
const std::vector<std::string>& claim_manifest();
void check_registry_against_manifest();

const CongruenceClaim& find_claim(const std::string& id);

struct VerifyOptions {
    std::size_t order = 0;       // 0 = derive from min_instances
    long min_instances = 100;
    bool explore = false;        // thm4: also report non-admissible combos
};

/// Caches generating functions across claim instances of one run.
class GfCache {
public:
    const TruncatedSeries& get(long long l1, long long l2, std::size_t N);

private:
    std::map<std::tuple<long long, long long, std::size_t>, TruncatedSeries> map_;
};

/// Checks one instance: builds the generating function, extracts the
/// instantiated progression, reduces mod m and asserts the zero
/// series.  Parameters outside the hypothesis raise
/// rejected_parameters_error.  On failure the violating coefficient is
/// cross-checked against the combinatorial oracle so the report can
/// distinguish a claim violation from an engine inconsistency.
VerificationReport verify_claim(const CongruenceClaim& c, const ClaimParams& p,
                                const VerifyOptions& opt, GfCache* cache = nullptr);

struct SweepRanges {
    int alpha_lo = 0, alpha_hi = -1; // empty range = per-theorem default
    int beta_lo = 0, beta_hi = -1;
    int k_lo = 0, k_hi = -1;
};

/// Cartesian sweep over the admissible (alpha, beta, k, i) of one
/// theorem ("thm1".."thm4" or "all"); reports sorted by id then
/// parameters.  With opt.explore, thm4 combos outside the hypothesis
/// are also run and tagged, without affecting the pass verdict.
std::vector<VerificationReport> verify_theorem_suite(const std::string& thm_id,
                                                     const SweepRanges& ranges,
                                                     const VerifyOptions& opt);

enum class ResidueFamily {
    Pow2TimesSquare,       // 2^a * n^2
    Pow3TimesSquare,       // 3^b * n^2
    Pow2SquarePlusSquare,  // 2^a * i^2 + j^2
    Pow3SquarePlusSquare,  // 3^b * i^2 + j^2
    Pow2SquarePlusPow3Square, // 2^a * i^2 + 3^b * j^2
};

enum class Parity { Odd, Even };

/// Attained residues mod 12, brute-forced over a full period with
/// representative exponents of the requested parities.
std::set<int> residue_table(ResidueFamily family, Parity alpha_parity,
                            Parity beta_parity);

/// The published residue sets, for comparison.
std::set<int> expected_residue_table(ResidueFamily family, Parity alpha_parity,
                                     Parity beta_parity);

/// Checks all four parity cases of all five families; one report per
/// (family, parity case).
std::vector<VerificationReport> check_residue_tables();

/// Series coefficients vs DP oracle for n <= n_max, and vs the
/// enumeration oracle for n <= min(n_max, 25).
VerificationReport oracle_crosscheck(long long l1, long long l2, long long n_max);

} // namespace qcong
