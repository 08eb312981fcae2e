#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "qcong/dissect.hpp"
#include "qcong/expr.hpp"
#include "qcong/products.hpp"

#include "generators.hpp"

using namespace qcong;

namespace {

TruncatedSeries from_ints(std::vector<long> v) {
    std::vector<Coeff> c(v.begin(), v.end());
    std::size_t order = c.size() - 1;
    return TruncatedSeries(order, std::move(c));
}

const char* kBiregular43 =
    "P(2)*P(4)^2*P(3)^2*P(24) / (P(1)^2*P(8)*P(6)*P(12)^2)";

} // namespace

TEST_CASE("extract") {
    auto s = from_ints({1, 2, 3, 4, 5});
    CHECK(extract(s, Progression(2, 0)) == from_ints({1, 3, 5}));
    CHECK(extract(s, Progression(2, 1)) == from_ints({2, 4}));
    CHECK(extract(s, Progression(1, 0)) == s);
    CHECK(extract(s, Progression(5, 4)) == from_ints({5}));
    CHECK_THROWS_AS(extract(from_ints({1, 2}), Progression(3, 2)), range_error);
    CHECK_THROWS_AS(Progression(2, 2), domain_error);
    CHECK_THROWS_AS(Progression(0, 0), domain_error);
    CHECK_THROWS_AS(Progression(2, -1), domain_error);
}

TEST_CASE("interleaved extractions reassemble the series") {
    std::mt19937 rng(5150);
    for (int t = 0; t < 100; ++t) {
        std::size_t order = 20 + rng() % 81;
        long long a = 1 + rng() % 6;
        auto s = testgen::random_series(rng, order);
        std::vector<TruncatedSeries> slices;
        for (long long b = 0; b < a; ++b)
            slices.push_back(extract(s, Progression(a, b)));
        TruncatedSeries rebuilt(order); // zero
        std::vector<Coeff> c = rebuilt.coeffs();
        for (long long b = 0; b < a; ++b)
            for (std::size_t i = 0; i <= slices[b].order(); ++i)
                c[static_cast<std::size_t>(a * i + b)] = slices[b][i];
        CHECK(TruncatedSeries(order, std::move(c)) == s);
    }
}

TEST_CASE("extract is linear") {
    std::mt19937 rng(6021023);
    for (int t = 0; t < 100; ++t) {
        std::size_t order = 10 + rng() % 60;
        long long a = 1 + rng() % 6;
        long long b = rng() % a;
        auto s = testgen::random_series(rng, order);
        auto u = testgen::random_series(rng, order);
        CHECK(extract(add(s, u), Progression(a, b)) ==
              add(extract(s, Progression(a, b)), extract(u, Progression(a, b))));
    }
}

TEST_CASE("extract undoes substitute_power") {
    std::mt19937 rng(91);
    for (int t = 0; t < 100; ++t) {
        std::size_t order = 10 + rng() % 60;
        long long a = 1 + rng() % 5;
        auto s = testgen::random_series(rng, order);
        auto lifted = substitute_power(s, static_cast<std::size_t>(a));
        auto back = extract(lifted, Progression(a, 0));
        for (std::size_t i = 0; i <= back.order(); ++i)
            CHECK(back[i] == s[i]);
    }
}

TEST_CASE("full builtin fixture suite passes at order 400") {
    for (const auto& f : builtin_fixtures()) {
        auto rep = check_identity(f, 400);
        INFO(rep.id, ": ", rep.note);
        CHECK(rep.pass);
        CHECK(rep.instances_checked >= 1);
    }
}

TEST_CASE("a corrupted identity fails at the first odd exponent") {
    IdentityFixture bad;
    bad.name = "corrupted";
    bad.lhs = "P(3)^2 / P(1)^2";
    // coefficient 2 of the q-term changed to 3
    bad.rhs =
        "P(4)^4*P(6)*P(12)^2 / (P(2)^5*P(8)*P(24)) "
        "+ 3*q*P(4)*P(6)^2*P(8)*P(24) / (P(2)^4*P(12))";
    auto rep = check_identity(bad, 200);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->first == 1);
}

TEST_CASE("failing fixtures surface their note") {
    IdentityFixture bad;
    bad.name = "noted";
    bad.lhs = "q";
    bad.rhs = "2*q";
    bad.note = "transcribed from a display with a typo";
    auto rep = check_identity(bad, 10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.note.find("typo") != std::string::npos);
    CHECK(rep.note.find("discrepancy") != std::string::npos);
}

TEST_CASE("dissection consistency: 3-dissection of phi(-q)") {
    std::vector<std::pair<long long, std::string>> parts = {
        {0, "P(3)^2 / P(6)"},
        {1, "-2*P(1)*P(6)^2 / (P(2)*P(3))"},
    };
    auto rep = check_dissection_consistency("phi(-q)", 3, parts, 300, false);
    CHECK(rep.pass);
    CHECK(rep.instances_checked == 2);

    // with the completeness flag the residue-2 slice must vanish
    auto rep2 = check_dissection_consistency("phi(-q)", 3, parts, 300, true);
    CHECK(rep2.pass);
    CHECK(rep2.instances_checked == 3);
}

TEST_CASE("dissection consistency: trivial and modular cases") {
    auto rep = check_dissection_consistency("q", 2, {{1, "1"}}, 9, false);
    CHECK(rep.pass);

    // odd-indexed biregular counts are all even
    auto rep2 = check_dissection_consistency(kBiregular43, 2, {{1, "0"}}, 400,
                                             false, Coeff(2));
    CHECK(rep2.pass);

    CHECK_THROWS_AS(check_dissection_consistency("q", 2, {{1, "1"}, {1, "1"}},
                                                 9, false),
                    domain_error);
    CHECK_THROWS_AS(check_dissection_consistency("q", 2, {{2, "1"}}, 9, false),
                    domain_error);
}

TEST_CASE("fixture parsing accepts the documented format") {
    const char* text =
        "# comment\n"
        "name: demo\n"
        "lhs: q\n"
        "rhs: q\n"
        "mod: {p}\n"
        "order: 50\n"
        "params: {p=3} {p=5}\n"
        "\n"
        "name: second\n"
        "dissect: 2\n"
        "residue: 1\n"
        "lhs: q\n"
        "rhs: 1\n";
    auto fx = parse_fixtures(text);
    REQUIRE(fx.size() == 2);
    CHECK(fx[0].name == "demo");
    CHECK(fx[0].mod_text == "{p}");
    CHECK(fx[0].order == 50);
    CHECK(fx[0].params.size() == 2);
    CHECK(fx[0].params[1].at("p") == 5);
    CHECK(fx[1].dissect_modulus == 2);
    CHECK(fx[1].dissect_residue == 1);

    CHECK(check_identity(fx[0], 100).pass);
    CHECK(check_identity(fx[1], 100).pass);
}

TEST_CASE("fixture parsing rejects malformed records") {
    CHECK_THROWS_AS(parse_fixtures("name: x\nlhs: q\n"), error);
    CHECK_THROWS_AS(parse_fixtures("name: x\nlhs: q\nrhs: q\nbogus: 1\n"), error);
    CHECK_THROWS_AS(parse_fixtures("name: x\nlhs: q\nrhs: q\nparams: {a&2}\n"),
                    error);
    CHECK_THROWS_AS(
        parse_fixtures("name: x\nlhs: q\nrhs: q\ndissect: 2\nresidue: 5\n"),
        error);
}

TEST_CASE("shipped fixture file matches the builtin suite") {
    std::ifstream in(std::string(QCONG_DATA_DIR) + "/identities.qfx");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == builtin_fixture_text());
}
