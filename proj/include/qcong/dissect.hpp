#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcong/report.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Arithmetic progression a*n + b of exponents, 0 <= b < a.
struct Progression {
    long long modulus = 1; // a
    long long residue = 0; // b

    Progression(long long a, long long b) : modulus(a), residue(b) {
        if (a < 1 || b < 0 || b >= a)
            throw domain_error("invalid progression " + std::to_string(a) +
                               "n+" + std::to_string(b));
    }
};

/// Coefficients of s on the progression, reindexed q^{an+b} -> q^n:
/// result order floor((s.order - b)/a), coefficient i = s[a*i + b].
TruncatedSeries extract(const TruncatedSeries& s, const Progression& p);

/// One record of the fixture file.  Plain records assert lhs == rhs
/// (optionally mod m); dissection records assert
/// extract(lhs, (dissect_modulus, dissect_residue)) == rhs.
struct IdentityFixture {
    std::string name;
    std::string lhs;
    std::string rhs;
    std::optional<std::string> mod_text; // literal or templated
    std::optional<long> order;           // pinned order, wins over caller's
    std::optional<long long> dissect_modulus;
    long long dissect_residue = 0;
    std::vector<std::map<std::string, long long>> params;
    std::string note;
};

/// Parses the repo fixture format: blank-line separated records of
/// "key: value" lines with keys name/lhs/rhs/mod/order/dissect/
/// residue/params/note; '#' starts a comment line.  `params` is a
/// whitespace-separated list of {a=2,b=1}-style binding groups.
std::vector<IdentityFixture> parse_fixtures(const std::string& text);

/// The compiled-in suite (same content as data/identities.qfx).
const std::vector<IdentityFixture>& builtin_fixtures();
const std::string& builtin_fixture_text();

/// Evaluates lhs - rhs (or the extracted progression minus rhs) for
/// every parameter binding at order N (the fixture's pinned order
/// wins) and reports the first nonzero coefficient if any.
VerificationReport check_identity(const IdentityFixture& f, std::size_t N);

/// Asserts extract(eval(expr), (a, r)) == eval(part_r) for every
/// provided residue, each reduced mod `modulus` when given; with
/// `complete`, unlisted residues must extract to zero.
VerificationReport check_dissection_consistency(
    const std::string& expr, long long a,
    const std::vector<std::pair<long long, std::string>>& parts, std::size_t N,
    bool complete = false, std::optional<Coeff> modulus = std::nullopt);

} // namespace qcong
