// Acceptance suite: runs every gate criterion end to end and prints
// one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcong/claims.hpp"
#include "qcong/dissect.hpp"
#include "qcong/expr.hpp"
#include "qcong/oracle.hpp"
#include "qcong/products.hpp"

#include "generators.hpp"

using namespace qcong;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
    double budget_seconds = 0; // 0 = no stated budget
};

std::vector<long> partition_numbers(long n_max) {
    std::vector<long> f(n_max + 1, 0);
    f[0] = 1;
    for (long s = 1; s <= n_max; ++s)
        for (long n = s; n <= n_max; ++n) f[n] += f[n - s];
    return f;
}

const std::pair<long long, long long> kPairs[] = {
    {4, 3}, {8, 3}, {4, 9}, {8, 9}, {2, 9}};

bool golden_values(std::string& why) {
    auto inv = invert(pochhammer_simple(1, 9));
    auto p = partition_numbers(9);
    for (long n = 0; n <= 9; ++n) {
        if (inv.coeff(n) != p[n]) {
            why = "partition numbers diverge at n=" + std::to_string(n);
            return false;
        }
    }
    auto pbar = eta_quotient({{{1, -2}, {2, 1}}}, 4);
    if (pbar.coeff(4) != 14) {
        why = "overpartition count at 4 is " + pbar.coeff(4).get_str();
        return false;
    }
    return true;
}

bool identity_suite(std::string& why) {
    for (const auto& f : builtin_fixtures()) {
        auto rep = check_identity(f, 400);
        if (!rep.pass) {
            why = rep.id + ": " + rep.note;
            return false;
        }
    }
    return true;
}

bool oracle_triple_equivalence(std::string& why) {
    for (auto [l1, l2] : kPairs) {
        auto table = count_dp(l1, l2, 60);
        for (long long n = 0; n <= 25; ++n) {
            if (table.values[n] != static_cast<long>(count_enumerate(l1, l2, n))) {
                why = "enumeration mismatch at (" + std::to_string(l1) + "," +
                      std::to_string(l2) + ") n=" + std::to_string(n);
                return false;
            }
        }
        auto gf = biregular_gf(l1, l2, 60);
        for (std::size_t n = 0; n <= 60; ++n) {
            if (table.values[n] != gf[n]) {
                why = "series mismatch at (" + std::to_string(l1) + "," +
                      std::to_string(l2) + ") n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool run_claims(const std::vector<std::pair<std::string, ClaimParams>>& jobs,
                const VerifyOptions& opt, long need_instances, std::string& why) {
    GfCache cache;
    for (const auto& [id, params] : jobs) {
        auto rep = verify_claim(find_claim(id), params, opt, &cache);
        if (!rep.pass) {
            why = id + " [" + rep.params + "]: " + rep.note;
            return false;
        }
        if (rep.instances_checked < need_instances) {
            why = id + " [" + rep.params + "]: only " +
                  std::to_string(rep.instances_checked) + " instances";
            return false;
        }
    }
    return true;
}

bool theorem1_sweep(std::string& why) {
    VerifyOptions opt;
    opt.order = 2000;
    opt.min_instances = 250;
    std::vector<std::pair<std::string, ClaimParams>> jobs;
    for (int a = 2; a <= 6; ++a) {
        ClaimParams p;
        p.alpha = a;
        jobs.push_back({"b2a3_4n2_mod4", p});
        jobs.push_back({"b2a3_8n5_mod4", p});
        if (a >= 3) jobs.push_back({"b2a3_8n6_mod8", p});
    }
    return run_claims(jobs, opt, 250, why);
}

bool theorem2_sweep(std::string& why) {
    VerifyOptions opt;
    opt.min_instances = 100; // order derived per claim
    std::vector<std::pair<std::string, ClaimParams>> jobs;
    for (int k = 0; k <= 2; ++k) {
        for (int a = 2 * k + 2; a <= 2 * k + 4; ++a) {
            ClaimParams p;
            p.alpha = a;
            p.k = k;
            jobs.push_back({"b2a3_4k4n3_mod6", p});
        }
    }
    for (int a = 3; a <= 6; ++a) {
        ClaimParams p;
        p.alpha = a;
        jobs.push_back({"b2a3_8n7_mod12", p});
    }
    return run_claims(jobs, opt, 100, why);
}

bool theorem3_sweep(std::string& why) {
    VerifyOptions opt;
    opt.order = 3000;
    opt.min_instances = 100;
    std::vector<std::pair<std::string, ClaimParams>> jobs;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int i : {1, 2}) {
                ClaimParams p;
                p.alpha = a;
                p.beta = b;
                p.i = i;
                jobs.push_back({"b2odd3b_9n3i_mod4", p});
            }
    for (int b : {2, 3})
        for (int i : {1, 2}) {
            ClaimParams p;
            p.alpha = 1;
            p.beta = b;
            p.i = i;
            jobs.push_back({"b2even3b_9n3i_mod8", p});
        }
    return run_claims(jobs, opt, 100, why);
}

bool theorem4_sweep(std::string& why) {
    VerifyOptions opt;
    opt.min_instances = 100;

    // enumerate exactly the parity-admissible combinations
    std::vector<std::pair<std::string, ClaimParams>> jobs;
    int expected = 0;
    for (int a = 2; a <= 5; ++a) {
        for (int b = 1; b <= 4; ++b) {
            bool a_even = a % 2 == 0;
            bool b_even = b % 2 == 0;
            ClaimParams p;
            p.alpha = a;
            p.beta = b;
            if (b_even) { // alpha odd & beta even, or both even
                jobs.push_back({"b2a3b_12n3_mod8", p});
                jobs.push_back({"b2a3b_12n7_mod8", p});
                expected += 2;
            }
            if (!(a_even == false && b_even == false)) { // not both odd
                jobs.push_back({"b2a3b_12n11_mod8", p});
                expected += 1;
            }
        }
    }
    if (expected != 28 || static_cast<int>(jobs.size()) != 28) {
        why = "admissible combination count is " + std::to_string(jobs.size());
        return false;
    }
    // the registry's own gate must agree with the enumeration above
    for (int a = 2; a <= 5; ++a)
        for (int b = 1; b <= 4; ++b) {
            ClaimParams p;
            p.alpha = a;
            p.beta = b;
            int admitted = 0;
            for (const char* id :
                 {"b2a3b_12n3_mod8", "b2a3b_12n7_mod8", "b2a3b_12n11_mod8"})
                if (find_claim(id).admits(p)) ++admitted;
            int listed = 0;
            for (const auto& [id, q] : jobs)
                if (q.alpha == a && q.beta == b) ++listed;
            if (admitted != listed) {
                why = "gate mismatch at alpha=" + std::to_string(a) +
                      " beta=" + std::to_string(b);
                return false;
            }
        }
    return run_claims(jobs, opt, 100, why);
}

bool residue_tables_exact(std::string& why) {
    auto reports = check_residue_tables();
    if (reports.size() != 20) {
        why = "expected 20 table checks";
        return false;
    }
    for (const auto& rep : reports) {
        if (!rep.pass) {
            why = rep.id + " (" + rep.params + "): " + rep.note;
            return false;
        }
    }
    return true;
}

bool property_suites(std::string& why) {
    std::mt19937 rng(20250808);

    for (int t = 0; t < 100; ++t) { // ring axioms
        std::size_t order = 4 + rng() % 24;
        auto a = testgen::random_series(rng, order);
        auto b = testgen::random_series(rng, order);
        auto c = testgen::random_series(rng, order);
        if (!(add(a, b) == add(b, a)) ||
            !(add(add(a, b), c) == add(a, add(b, c))) ||
            !(mul(a, b) == mul(b, a)) ||
            !(mul(mul(a, b), c) == mul(a, mul(b, c))) ||
            !(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)))) {
            why = "ring axiom failed at case " + std::to_string(t);
            return false;
        }
    }

    for (int t = 0; t < 100; ++t) { // extract/reassembly
        std::size_t order = 20 + rng() % 81;
        long long a = 1 + rng() % 6;
        auto s = testgen::random_series(rng, order);
        std::vector<Coeff> c(order + 1);
        for (long long b = 0; b < a; ++b) {
            auto slice = extract(s, Progression(a, b));
            for (std::size_t i = 0; i <= slice.order(); ++i)
                c[static_cast<std::size_t>(a * i + b)] = slice[i];
        }
        if (!(TruncatedSeries(order, std::move(c)) == s)) {
            why = "reassembly failed at case " + std::to_string(t);
            return false;
        }
    }

    for (int t = 0; t < 100; ++t) { // extract linearity
        std::size_t order = 10 + rng() % 60;
        long long a = 1 + rng() % 6;
        long long b = rng() % a;
        auto s = testgen::random_series(rng, order);
        auto u = testgen::random_series(rng, order);
        if (!(extract(add(s, u), Progression(a, b)) ==
              add(extract(s, Progression(a, b)),
                  extract(u, Progression(a, b))))) {
            why = "linearity failed at case " + std::to_string(t);
            return false;
        }
    }

    std::uniform_int_distribution<long long> ed(-3, 3);
    for (int t = 0; t < 100; ++t) { // pow additivity
        std::size_t order = 4 + rng() % 16;
        auto a = testgen::random_unit_series(rng, order);
        long long e1 = ed(rng), e2 = ed(rng);
        if (!(pow(a, e1 + e2) == mul(pow(a, e1), pow(a, e2)))) {
            why = "pow additivity failed at case " + std::to_string(t);
            return false;
        }
    }

    for (int t = 0; t < 100; ++t) { // parser round trip
        QExpr ast = testgen::random_ast(rng, 4);
        if (!ast.structurally_equal(parse(render(ast)))) {
            why = "round trip failed at case " + std::to_string(t) + ": " +
                  render(ast);
            return false;
        }
    }
    return true;
}

bool mod2_blanket(std::string& why) {
    for (auto [l1, l2] : kPairs) {
        auto gf = biregular_gf(l1, l2, 500);
        for (std::size_t n = 1; n <= 500; ++n) {
            if (gf[n] % 2 != 0) {
                why = "odd count at (" + std::to_string(l1) + "," +
                      std::to_string(l2) + ") n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"C1  golden values (partition numbers, overpartition count 14)",
         golden_values, 1.0},
        {"C2  identity suite exact at order 400", identity_suite, 30.0},
        {"C3  oracle triple equivalence on five pairs", oracle_triple_equivalence,
         30.0},
        {"C4  theorem sweep: (2^a,3) families mod 4/8, a=2..6, N=2000",
         theorem1_sweep, 120.0},
        {"C5  theorem sweep: 4^k(4n+3) mod 6 and 8n+7 mod 12", theorem2_sweep},
        {"C6  theorem sweep: (2^(2a+1),3^b) mod 4 and (2^(2a),3^b) mod 8",
         theorem3_sweep},
        {"C7  theorem sweep: (2^a,3^b) 12n+r mod 8, parity-gated", theorem4_sweep},
        {"C8  residue tables mod 12 reproduced exactly", residue_tables_exact,
         1.0},
        {"C9  property suites (>=100 randomized cases each, fixed seed)",
         property_suites},
        {"C10 blanket evenness up to n=500 on five pairs", mod2_blanket},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            why = "runtime " + std::to_string(secs) + " s exceeds the " +
                  std::to_string(c.budget_seconds) + " s budget";
        }
        std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                    c.name.c_str(), secs, ok ? "" : " -- ",
                    ok ? "" : why.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria pass\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
