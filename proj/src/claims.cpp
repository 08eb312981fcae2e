#include "qcong/claims.hpp"

#include <algorithm>
#include <chrono>

#include "qcong/dissect.hpp"
#include "qcong/oracle.hpp"
#include "qcong/products.hpp"

namespace qcong {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

long long pow_ll(long long base, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

bool is_even(int x) { return x % 2 == 0; }

std::string params_string(const CongruenceClaim& c, const ClaimParams& p) {
    std::string s = "alpha=" + std::to_string(p.alpha);
    if (c.uses_beta) s += " beta=" + std::to_string(p.beta);
    if (c.uses_k) s += " k=" + std::to_string(p.k);
    if (c.uses_i) s += " i=" + std::to_string(p.i);
    s += " l1=" + std::to_string(c.l1_of(p));
    s += " l2=" + std::to_string(c.l2_of(p));
    return s;
}

} // namespace

const std::vector<CongruenceClaim>& claim_registry() {
    static const std::vector<CongruenceClaim> reg = [] {
        std::vector<CongruenceClaim> v;

        auto l1_pow2 = [](const ClaimParams& p) { return pow_ll(2, p.alpha); };
        auto l1_pow2_even = [](const ClaimParams& p) {
            return pow_ll(2, 2 * p.alpha);
        };
        auto l1_pow2_odd = [](const ClaimParams& p) {
            return pow_ll(2, 2 * p.alpha + 1);
        };
        auto l2_three = [](const ClaimParams&) { return 3LL; };
        auto l2_pow3 = [](const ClaimParams& p) { return pow_ll(3, p.beta); };

        // count(4n+2) == 0 (mod 4), pair (2^alpha, 3), alpha >= 2
        v.push_back({"b2a3_4n2_mod4",
                     "(2^a,3): 4n+2 == 0 mod 4, a >= 2",
                     4,
                     false,
                     false,
                     false,
                     [](const ClaimParams& p) { return p.alpha >= 2; },
                     l1_pow2,
                     l2_three,
                     [](const ClaimParams&) { return std::pair(4LL, 2LL); }});

        v.push_back({"b2a3_8n5_mod4",
                     "(2^a,3): 8n+5 == 0 mod 4, a >= 2",
                     4,
                     false,
                     false,
                     false,
                     [](const ClaimParams& p) { return p.alpha >= 2; },
                     l1_pow2,
                     l2_three,
                     [](const ClaimParams&) { return std::pair(8LL, 5LL); }});

        v.push_back({"b2a3_8n6_mod8",
                     "(2^a,3): 8n+6 == 0 mod 8, a >= 3",
                     8,
                     false,
                     false,
                     false,
                     [](const ClaimParams& p) { return p.alpha >= 3; },
                     l1_pow2,
                     l2_three,
                     [](const ClaimParams&) { return std::pair(8LL, 6LL); }});

        // count(4^k(4n+3)) == 0 (mod 6), alpha > 2k+1
        v.push_back({"b2a3_4k4n3_mod6",
                     "(2^a,3): 4^k(4n+3) == 0 mod 6, a > 2k+1",
                     6,
                     false,
                     true,
                     false,
                     [](const ClaimParams& p) {
                         return p.k >= 0 && p.alpha > 2 * p.k + 1;
                     },
                     l1_pow2,
                     l2_three,
                     [](const ClaimParams& p) {
                         long long scale = pow_ll(4, p.k);
                         return std::pair(4 * scale, 3 * scale);
                     }});

        v.push_back({"b2a3_8n7_mod12",
                     "(2^a,3): 8n+7 == 0 mod 12, a > 2",
                     12,
                     false,
                     false,
                     false,
                     [](const ClaimParams& p) { return p.alpha > 2; },
                     l1_pow2,
                     l2_three,
                     [](const ClaimParams&) { return std::pair(8LL, 7LL); }});

        // count(9n+3i) == 0 (mod 4), pair (2^{2a+1}, 3^b), a >= 0, b >= 2
        v.push_back({"b2odd3b_9n3i_mod4",
                     "(2^(2a+1),3^b): 9n+3i == 0 mod 4, a >= 0, b >= 2, i in {1,2}",
                     4,
                     true,
                     false,
                     true,
                     [](const ClaimParams& p) {
                         return p.alpha >= 0 && p.beta >= 2 &&
                                (p.i == 1 || p.i == 2);
                     },
                     l1_pow2_odd,
                     l2_pow3,
                     [](const ClaimParams& p) {
                         return std::pair(9LL, 3LL * p.i);
                     }});

        v.push_back({"b2even3b_9n3i_mod8",
                     "(2^(2a),3^b): 9n+3i == 0 mod 8, a >= 1, b >= 2, i in {1,2}",
                     8,
                     true,
                     false,
                     true,
                     [](const ClaimParams& p) {
                         return p.alpha >= 1 && p.beta >= 2 &&
                                (p.i == 1 || p.i == 2);
                     },
                     l1_pow2_even,
                     l2_pow3,
                     [](const ClaimParams& p) {
                         return std::pair(9LL, 3LL * p.i);
                     }});

        // pair (2^a, 3^b), a >= 2, b >= 1, parity-gated, all mod 8
        auto admits_3_7 = [](const ClaimParams& p) {
            // alpha odd & beta even, or both even: i.e. beta even
            if (p.alpha < 2 || p.beta < 1) return false;
            return is_even(p.beta);
        };
        auto admits_11 = [](const ClaimParams& p) {
            // different parity, or both even
            if (p.alpha < 2 || p.beta < 1) return false;
            return !(!is_even(p.alpha) && !is_even(p.beta));
        };

        v.push_back({"b2a3b_12n3_mod8",
                     "(2^a,3^b): 12n+3 == 0 mod 8, a odd & b even or both even",
                     8,
                     true,
                     false,
                     false,
                     admits_3_7,
                     l1_pow2,
                     l2_pow3,
                     [](const ClaimParams&) { return std::pair(12LL, 3LL); }});

        v.push_back({"b2a3b_12n7_mod8",
                     "(2^a,3^b): 12n+7 == 0 mod 8, a odd & b even or both even",
                     8,
                     true,
                     false,
                     false,
                     admits_3_7,
                     l1_pow2,
                     l2_pow3,
                     [](const ClaimParams&) { return std::pair(12LL, 7LL); }});

        v.push_back({"b2a3b_12n11_mod8",
                     "(2^a,3^b): 12n+11 == 0 mod 8, parities differ or both even",
                     8,
                     true,
                     false,
                     false,
                     admits_11,
                     l1_pow2,
                     l2_pow3,
                     [](const ClaimParams&) { return std::pair(12LL, 11LL); }});

        return v;
    }();
    return reg;
}

const std::vector<std::string>& claim_manifest() {
    static const std::vector<std::string> ids = {
        "b2a3_4n2_mod4", "b2a3_8n5_mod4", "b2a3_8n6_mod8", "b2a3_4k4n3_mod6", "b2a3_8n7_mod12",
        "b2odd3b_9n3i_mod4", "b2even3b_9n3i_mod8", "b2a3b_12n3_mod8", "b2a3b_12n7_mod8", "b2a3b_12n11_mod8",
    };
    return ids;
}

void check_registry_against_manifest() {
    const auto& reg = claim_registry();
    const auto& man = claim_manifest();
    std::vector<std::string> got;
    for (const auto& c : reg) got.push_back(c.id);
    std::vector<std::string> want = man;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
        throw error("claim registry does not match the manifest");
}

const CongruenceClaim& find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    throw domain_error("unknown claim id '" + id + "'");
}

const TruncatedSeries& GfCache::get(long long l1, long long l2, std::size_t N) {
    auto key = std::make_tuple(l1, l2, N);
    auto it = map_.find(key);
    if (it == map_.end())
        it = map_.emplace(key, biregular_gf(l1, l2, N)).first;
    return it->second;
}

VerificationReport verify_claim(const CongruenceClaim& c, const ClaimParams& p,
                                const VerifyOptions& opt, GfCache* cache) {
    auto t0 = std::chrono::steady_clock::now();
    if (!c.admits(p))
        throw rejected_parameters_error(
            "claim " + c.id + " does not admit parameters " +
            params_string(c, p) + " (hypothesis: " + c.statement + ")");

    const auto [a, b] = c.progression(p);
    const long long l1 = c.l1_of(p);
    const long long l2 = c.l2_of(p);

    VerificationReport rep;
    rep.id = c.id;
    rep.params = params_string(c, p);

    // coverage rule: at least min_instances progression members must fit
    std::size_t N = opt.order;
    long long fit = static_cast<long long>(N) >= b
                        ? (static_cast<long long>(N) - b) / a + 1
                        : 0;
    if (fit < opt.min_instances) {
        std::size_t raised = static_cast<std::size_t>(a * opt.min_instances + b);
        if (opt.order != 0)
            rep.note = "order raised from " + std::to_string(opt.order) + " to " +
                       std::to_string(raised) + " for " +
                       std::to_string(opt.min_instances) + " instances";
        N = raised;
    }
    rep.order = static_cast<long>(N);

    GfCache local;
    GfCache& gfs = cache ? *cache : local;
    const TruncatedSeries& gf = gfs.get(l1, l2, N);

    TruncatedSeries slice = extract(gf, Progression(a, b));
    TruncatedSeries reduced = reduce_mod(slice, Coeff(c.modulus));

    rep.instances_checked = static_cast<long>(slice.order()) + 1;
    rep.insufficient_coverage = rep.instances_checked < opt.min_instances;
    rep.pass = true;
    for (std::size_t n = 0; n < reduced.size(); ++n) {
        if (reduced[n] != 0) {
            rep.pass = false;
            rep.first_violation = {static_cast<long>(n), slice[n].get_str()};
            // decide: genuine counterexample or series-engine bug?
            long long coeff_index = a * static_cast<long long>(n) + b;
            std::string diag = "claim violation";
            if (coeff_index <= 3000) {
                auto table = count_dp(l1, l2, coeff_index);
                if (table.values[static_cast<std::size_t>(coeff_index)] !=
                    gf[static_cast<std::size_t>(coeff_index)])
                    diag = "engine self-inconsistency: oracle disagrees with series";
                else
                    diag = "claim violation: oracle confirms the coefficient";
            }
            rep.note = diag + " at n=" + std::to_string(n) +
                       " (coefficient index " + std::to_string(coeff_index) + ")";
            break;
        }
    }
    rep.runtime_ms = ms_since(t0);
    return rep;
}

namespace {

struct SweepJob {
    const CongruenceClaim* claim;
    ClaimParams params;
    bool admissible;
};

void default_ranges(const std::string& thm, SweepRanges& r) {
    auto set_if_empty = [](int& lo, int& hi, int dlo, int dhi) {
        if (hi < lo) {
            lo = dlo;
            hi = dhi;
        }
    };
    if (thm == "thm1") {
        set_if_empty(r.alpha_lo, r.alpha_hi, 2, 6);
    } else if (thm == "thm2") {
        set_if_empty(r.alpha_lo, r.alpha_hi, 2, 6);
        set_if_empty(r.k_lo, r.k_hi, 0, 2);
    } else if (thm == "thm3") {
        set_if_empty(r.alpha_lo, r.alpha_hi, 0, 1);
        set_if_empty(r.beta_lo, r.beta_hi, 2, 3);
    } else if (thm == "thm4") {
        set_if_empty(r.alpha_lo, r.alpha_hi, 2, 5);
        set_if_empty(r.beta_lo, r.beta_hi, 1, 4);
    }
}

std::vector<std::string> theorem_claims(const std::string& thm) {
    if (thm == "thm1") return {"b2a3_4n2_mod4", "b2a3_8n5_mod4", "b2a3_8n6_mod8"};
    if (thm == "thm2") return {"b2a3_4k4n3_mod6", "b2a3_8n7_mod12"};
    if (thm == "thm3") return {"b2odd3b_9n3i_mod4", "b2even3b_9n3i_mod8"};
    if (thm == "thm4") return {"b2a3b_12n3_mod8", "b2a3b_12n7_mod8", "b2a3b_12n11_mod8"};
    throw domain_error("unknown theorem id '" + thm + "'");
}

} // namespace

std::vector<VerificationReport> verify_theorem_suite(const std::string& thm_id,
                                                     const SweepRanges& ranges,
                                                     const VerifyOptions& opt) {
    check_registry_against_manifest();

    if (thm_id == "all") {
        std::vector<VerificationReport> all;
        for (const char* t : {"thm1", "thm2", "thm3", "thm4"}) {
            auto part = verify_theorem_suite(t, ranges, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }

    SweepRanges r = ranges;
    default_ranges(thm_id, r);

    std::vector<SweepJob> jobs;
    for (const std::string& id : theorem_claims(thm_id)) {
        const CongruenceClaim& c = find_claim(id);
        int blo = c.uses_beta ? (r.beta_hi >= r.beta_lo ? r.beta_lo : 1) : -1;
        int bhi = c.uses_beta ? (r.beta_hi >= r.beta_lo ? r.beta_hi : 1) : -1;
        int klo = c.uses_k ? (r.k_hi >= r.k_lo ? r.k_lo : 0) : -1;
        int khi = c.uses_k ? (r.k_hi >= r.k_lo ? r.k_hi : 0) : -1;
        for (int alpha = r.alpha_lo; alpha <= r.alpha_hi; ++alpha)
            for (int beta = blo; beta <= bhi; ++beta)
                for (int k = klo; k <= khi; ++k) {
                    std::vector<int> is = c.uses_i ? std::vector<int>{1, 2}
                                                   : std::vector<int>{-1};
                    for (int i : is) {
                        ClaimParams p{alpha, beta, k, i};
                        bool ok = c.admits(p);
                        if (ok || (opt.explore && thm_id == "thm4"))
                            jobs.push_back({&c, p, ok});
                    }
                }
    }

    GfCache cache;
    std::vector<VerificationReport> reports;
    for (const auto& job : jobs) {
        if (job.admissible) {
            reports.push_back(verify_claim(*job.claim, job.params, opt, &cache));
        } else {
            // --explore: observe, never assert
            CongruenceClaim open = *job.claim;
            open.admits = [](const ClaimParams&) { return true; };
            VerificationReport rep = verify_claim(open, job.params, opt, &cache);
            rep.note = std::string("explore (outside hypothesis): observed ") +
                       (rep.pass ? "zero" : "nonzero");
            rep.id += "?";
            reports.push_back(std::move(rep));
        }
    }

    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& x, const VerificationReport& y) {
                  return std::tie(x.id, x.params) < std::tie(y.id, y.params);
              });
    return reports;
}

namespace {

int representative(Parity p, bool base2) {
    // alpha >= 2 for powers of 2, beta >= 1 for powers of 3
    if (base2) return p == Parity::Odd ? 3 : 2;
    return p == Parity::Odd ? 1 : 2;
}

} // namespace

std::set<int> residue_table(ResidueFamily family, Parity alpha_parity,
                            Parity beta_parity) {
    const long long p2 = pow_ll(2, representative(alpha_parity, true));
    const long long p3 = pow_ll(3, representative(beta_parity, false));
    std::set<int> out;
    switch (family) {
        case ResidueFamily::Pow2TimesSquare:
            for (long long n = 0; n < 12; ++n)
                out.insert(static_cast<int>(p2 * n * n % 12));
            break;
        case ResidueFamily::Pow3TimesSquare:
            for (long long n = 0; n < 12; ++n)
                out.insert(static_cast<int>(p3 * n * n % 12));
            break;
        case ResidueFamily::Pow2SquarePlusSquare:
            for (long long i = 0; i < 12; ++i)
                for (long long j = 0; j < 12; ++j)
                    out.insert(static_cast<int>((p2 * i * i + j * j) % 12));
            break;
        case ResidueFamily::Pow3SquarePlusSquare:
            for (long long i = 0; i < 12; ++i)
                for (long long j = 0; j < 12; ++j)
                    out.insert(static_cast<int>((p3 * i * i + j * j) % 12));
            break;
        case ResidueFamily::Pow2SquarePlusPow3Square:
            for (long long i = 0; i < 12; ++i)
                for (long long j = 0; j < 12; ++j)
                    out.insert(static_cast<int>((p2 * i * i + p3 * j * j) % 12));
            break;
    }
    return out;
}

std::set<int> expected_residue_table(ResidueFamily family, Parity alpha_parity,
                                     Parity beta_parity) {
    const bool ao = alpha_parity == Parity::Odd;
    const bool bo = beta_parity == Parity::Odd;
    switch (family) {
        case ResidueFamily::Pow2TimesSquare:
            return ao ? std::set<int>{0, 8} : std::set<int>{0, 4};
        case ResidueFamily::Pow3TimesSquare:
            return bo ? std::set<int>{0, 3} : std::set<int>{0, 9};
        case ResidueFamily::Pow2SquarePlusSquare:
            return {0, 1, 4, 5, 8, 9};
        case ResidueFamily::Pow3SquarePlusSquare:
            return bo ? std::set<int>{0, 1, 3, 4, 7, 9}
                      : std::set<int>{0, 1, 4, 6, 9, 10};
        case ResidueFamily::Pow2SquarePlusPow3Square:
            if (ao && !bo) return {0, 5, 8, 9};
            if (!ao && bo) return {0, 3, 4, 7};
            if (ao && bo) return {0, 3, 8, 11};
            return {0, 1, 4, 9};
    }
    throw error("unreachable residue family");
}

std::vector<VerificationReport> check_residue_tables() {
    static const std::pair<ResidueFamily, const char*> families[] = {
        {ResidueFamily::Pow2TimesSquare, "2^a*n^2"},
        {ResidueFamily::Pow3TimesSquare, "3^b*n^2"},
        {ResidueFamily::Pow2SquarePlusSquare, "2^a*i^2+j^2"},
        {ResidueFamily::Pow3SquarePlusSquare, "3^b*i^2+j^2"},
        {ResidueFamily::Pow2SquarePlusPow3Square, "2^a*i^2+3^b*j^2"},
    };
    static const std::pair<Parity, const char*> parities[] = {
        {Parity::Odd, "odd"},
        {Parity::Even, "even"},
    };

    std::vector<VerificationReport> out;
    for (auto [ap, aname] : parities) {
        for (auto [bp, bname] : parities) {
            for (auto [fam, fname] : families) {
                auto t0 = std::chrono::steady_clock::now();
                VerificationReport rep;
                rep.id = std::string("residues:") + fname;
                rep.params = std::string("alpha ") + aname + ", beta " + bname;
                auto got = residue_table(fam, ap, bp);
                auto want = expected_residue_table(fam, ap, bp);
                rep.instances_checked = static_cast<long>(got.size());
                rep.pass = got == want;
                if (!rep.pass) {
                    std::string g, w;
                    for (int x : got) g += std::to_string(x) + " ";
                    for (int x : want) w += std::to_string(x) + " ";
                    rep.note = "got {" + g + "} want {" + w + "}";
                    rep.first_violation = {0, "set mismatch"};
                }
                rep.runtime_ms = ms_since(t0);
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

VerificationReport oracle_crosscheck(long long l1, long long l2, long long n_max) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = "oracle_crosscheck";
    rep.params = "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2);
    rep.order = static_cast<long>(n_max);
    rep.pass = true;

    TruncatedSeries gf = biregular_gf(l1, l2, static_cast<std::size_t>(n_max));
    OracleTable dp = count_dp(l1, l2, n_max);
    for (long long n = 0; n <= n_max; ++n) {
        ++rep.instances_checked;
        if (gf[static_cast<std::size_t>(n)] !=
            dp.values[static_cast<std::size_t>(n)]) {
            rep.pass = false;
            rep.first_violation = {static_cast<long>(n),
                                   gf[static_cast<std::size_t>(n)].get_str()};
            rep.note = "series disagrees with DP oracle at n=" + std::to_string(n);
            rep.runtime_ms = ms_since(t0);
            return rep;
        }
    }
    const long long enum_max = std::min<long long>(n_max, 25);
    for (long long n = 0; n <= enum_max; ++n) {
        ++rep.instances_checked;
        if (dp.values[static_cast<std::size_t>(n)] !=
            static_cast<long>(count_enumerate(l1, l2, n))) {
            rep.pass = false;
            rep.first_violation = {static_cast<long>(n),
                                   dp.values[static_cast<std::size_t>(n)].get_str()};
            rep.note = "DP oracle disagrees with enumeration at n=" +
                       std::to_string(n);
            break;
        }
    }
    rep.runtime_ms = ms_since(t0);
    return rep;
}

} // namespace qcong
