#include "doctest.h"

#include "json.hpp"

#include "qcong/claims.hpp"
#include "qcong/oracle.hpp"
#include "qcong/products.hpp"

using namespace qcong;

TEST_CASE("registry matches manifest") {
    CHECK_NOTHROW(check_registry_against_manifest());
    CHECK(claim_registry().size() == claim_manifest().size());
    CHECK_THROWS_AS(find_claim("nonsense"), domain_error);
}

TEST_CASE("constraint gating is total") {
    VerifyOptions opt;
    opt.order = 200;
    opt.min_instances = 10;

    ClaimParams p;
    p.alpha = 2;
    CHECK_THROWS_AS(verify_claim(find_claim("b2a3_8n6_mod8"), p, opt),
                    rejected_parameters_error);
    p.alpha = 1;
    CHECK_THROWS_AS(verify_claim(find_claim("b2a3_4n2_mod4"), p, opt),
                    rejected_parameters_error);

    ClaimParams t3;
    t3.alpha = 0;
    t3.beta = 1; // hypothesis needs beta >= 2
    t3.i = 1;
    CHECK_THROWS_AS(verify_claim(find_claim("b2odd3b_9n3i_mod4"), t3, opt),
                    rejected_parameters_error);
    t3.beta = 2;
    t3.i = 3;
    CHECK_THROWS_AS(verify_claim(find_claim("b2odd3b_9n3i_mod4"), t3, opt),
                    rejected_parameters_error);

    ClaimParams t4;
    t4.alpha = 3;
    t4.beta = 1; // both odd: no claim
    CHECK_THROWS_AS(verify_claim(find_claim("b2a3b_12n11_mod8"), t4, opt),
                    rejected_parameters_error);

    ClaimParams k;
    k.alpha = 3;
    k.k = 1; // needs alpha > 3
    CHECK_THROWS_AS(verify_claim(find_claim("b2a3_4k4n3_mod6"), k, opt),
                    rejected_parameters_error);
}

TEST_CASE("verify_claim passes with full coverage at order 2000") {
    GfCache cache;
    VerifyOptions opt;
    opt.order = 2000;
    opt.min_instances = 250;

    ClaimParams p;
    p.alpha = 2;
    auto rep = verify_claim(find_claim("b2a3_4n2_mod4"), p, opt, &cache);
    CHECK(rep.pass);
    CHECK(rep.instances_checked == 500);
    CHECK_FALSE(rep.insufficient_coverage);
    CHECK(rep.params.find("l1=4") != std::string::npos);

    p.alpha = 3;
    auto rep9 = verify_claim(find_claim("b2a3_8n6_mod8"), p, opt, &cache);
    CHECK(rep9.pass);
    CHECK(rep9.instances_checked == 250);
}

TEST_CASE("order is auto-raised to meet the coverage minimum") {
    VerifyOptions opt;
    opt.order = 50;
    opt.min_instances = 100;
    ClaimParams p;
    p.alpha = 2;
    auto rep = verify_claim(find_claim("b2a3_4n2_mod4"), p, opt);
    CHECK(rep.pass);
    CHECK(rep.order == 4 * 100 + 2);
    CHECK(rep.instances_checked >= 100);
    CHECK(rep.note.find("raised") != std::string::npos);
}

TEST_CASE("a failing claim is diagnosed against the oracle") {
    // deliberately false claim: counts at n>=1 are never divisible by 5
    CongruenceClaim fake;
    fake.id = "fake_mod5";
    fake.statement = "deliberately false";
    fake.modulus = 5;
    fake.admits = [](const ClaimParams&) { return true; };
    fake.l1_of = [](const ClaimParams&) { return 4LL; };
    fake.l2_of = [](const ClaimParams&) { return 3LL; };
    fake.progression = [](const ClaimParams&) { return std::pair(1LL, 0LL); };

    VerifyOptions opt;
    opt.order = 40;
    opt.min_instances = 10;
    auto rep = verify_claim(fake, ClaimParams{}, opt);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_violation.has_value());
    // series and DP oracle agree, so this is a genuine counterexample
    CHECK(rep.note.find("claim violation") != std::string::npos);
    CHECK(rep.note.find("oracle confirms") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    VerifyOptions opt;
    opt.order = 600;
    ClaimParams p;
    p.alpha = 2;
    auto a = verify_claim(find_claim("b2a3_8n5_mod4"), p, opt);
    auto b = verify_claim(find_claim("b2a3_8n5_mod4"), p, opt);
    CHECK(a.id == b.id);
    CHECK(a.params == b.params);
    CHECK(a.order == b.order);
    CHECK(a.instances_checked == b.instances_checked);
    CHECK(a.pass == b.pass);
}

TEST_CASE("theorem sweep, small ranges") {
    SweepRanges r;
    r.alpha_lo = 2;
    r.alpha_hi = 3;
    VerifyOptions opt;
    opt.order = 600;
    opt.min_instances = 50;
    auto reports = verify_theorem_suite("thm1", r, opt);
    // 4n+2 and 8n+5 for alpha in {2,3}, 8n+6 only for alpha=3
    CHECK(reports.size() == 5);
    for (const auto& rep : reports) CHECK(rep.pass);
    // deterministic order: sorted by id then params
    for (std::size_t i = 1; i < reports.size(); ++i)
        CHECK(std::tie(reports[i - 1].id, reports[i - 1].params) <=
              std::tie(reports[i].id, reports[i].params));
}

TEST_CASE("explore mode reports non-admissible combos without asserting") {
    SweepRanges r;
    r.alpha_lo = 3;
    r.alpha_hi = 3;
    r.beta_lo = 1;
    r.beta_hi = 1; // both odd: outside every thm4 hypothesis
    VerifyOptions opt;
    opt.order = 400;
    opt.min_instances = 30;

    auto strict = verify_theorem_suite("thm4", r, opt);
    CHECK(strict.empty());

    opt.explore = true;
    auto explored = verify_theorem_suite("thm4", r, opt);
    CHECK(explored.size() == 3);
    for (const auto& rep : explored) {
        CHECK(rep.id.back() == '?');
        CHECK(rep.note.find("explore") != std::string::npos);
    }
}

TEST_CASE("residue tables match the published sets") {
    for (auto fam :
         {ResidueFamily::Pow2TimesSquare, ResidueFamily::Pow3TimesSquare,
          ResidueFamily::Pow2SquarePlusSquare, ResidueFamily::Pow3SquarePlusSquare,
          ResidueFamily::Pow2SquarePlusPow3Square})
        for (auto ap : {Parity::Odd, Parity::Even})
            for (auto bp : {Parity::Odd, Parity::Even})
                CHECK(residue_table(fam, ap, bp) ==
                      expected_residue_table(fam, ap, bp));

    auto reports = check_residue_tables();
    CHECK(reports.size() == 20);
    for (const auto& rep : reports) CHECK(rep.pass);
}

TEST_CASE("spot residue values") {
    CHECK(residue_table(ResidueFamily::Pow2TimesSquare, Parity::Odd,
                        Parity::Even) == std::set<int>{0, 8});
    CHECK(residue_table(ResidueFamily::Pow3TimesSquare, Parity::Odd,
                        Parity::Even) == std::set<int>{0, 9});
    CHECK(residue_table(ResidueFamily::Pow2SquarePlusPow3Square, Parity::Even,
                        Parity::Even) == std::set<int>{0, 1, 4, 9});
}

TEST_CASE("oracle crosscheck") {
    auto a = oracle_crosscheck(4, 3, 60);
    CHECK(a.pass);
    auto b = oracle_crosscheck(8, 9, 60);
    CHECK(b.pass);
    CHECK_THROWS_AS(oracle_crosscheck(4, 6, 20), domain_error);
}

TEST_CASE("overpartition analogue ties oracle and series together") {
    std::vector<long long> all;
    for (long long s = 1; s <= 40; ++s) all.push_back(s);
    auto table = count_dp_parts(all, 40);
    auto series = eta_quotient({{{1, -2}, {2, 1}}}, 40);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(table[n] == series[n]);
    CHECK(table[4] == 14);
}

TEST_CASE("json report document") {
    VerifyOptions opt;
    opt.order = 300;
    opt.min_instances = 30;
    ClaimParams p;
    p.alpha = 2;
    auto rep = verify_claim(find_claim("b2a3_4n2_mod4"), p, opt);
    auto doc = nlohmann::json::parse(reports_to_json("theorem thm1", {rep}));
    CHECK(doc["artifact_version"] == kArtifactVersion);
    CHECK(doc["command"] == "theorem thm1");
    REQUIRE(doc["reports"].size() == 1);
    auto& j = doc["reports"][0];
    CHECK(j["id"] == "b2a3_4n2_mod4");
    CHECK(j["status"] == "pass");
    CHECK(j["instances_checked"].get<long>() >= 30);
    CHECK(j.contains("order"));
    CHECK(j.contains("runtime_ms"));
}
