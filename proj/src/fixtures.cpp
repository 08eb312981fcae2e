#include "qcong/dissect.hpp"

namespace qcong {

namespace {

// Byte-identical to data/identities.qfx; a unit test keeps the two in sync.
const char kBuiltinFixtures[] = R"qfx(# Identity suite for the q-series verifier.
#
# Record format: blank-line separated groups of "key: value" lines.
#   name     required, unique
#   lhs/rhs  required, expression text (may contain {..} placeholders)
#   params   optional, whitespace-separated {a=2,b=1} binding groups;
#            lhs/rhs/mod are instantiated once per group
#   mod      optional, check the identity as a congruence mod this value
#            (literal or templated)
#   dissect/residue  optional pair: check extract(lhs, dissect, residue)
#            against rhs instead of lhs itself (extraction reindexes
#            q^{dissect*n+residue} -> q^n)
#   order    optional pinned truncation order; wins over the runner's
#   note     optional, reported on failure

# -- classical 2- and 3-dissections ---------------------------------------

name: poch3sq_over_poch1sq_2dissection
lhs: P(3)^2 / P(1)^2
rhs: P(4)^4*P(6)*P(12)^2 / (P(2)^5*P(8)*P(24)) + 2*q*P(4)*P(6)^2*P(8)*P(24) / (P(2)^4*P(12))

name: poch3_over_poch1cubed_2dissection
lhs: P(3) / P(1)^3
rhs: P(4)^6*P(6)^3 / (P(2)^9*P(12)^2) + 3*q*P(4)^2*P(6)*P(12)^2 / P(2)^7

name: inv_poch1_pow4_2dissection
lhs: 1 / P(1)^4
rhs: P(4)^14 / (P(2)^14*P(8)^4) + 4*q*P(4)^2*P(8)^4 / P(2)^10

name: inv_poch1_sq_2dissection
lhs: 1 / P(1)^2
rhs: P(8)^5 / (P(2)^5*P(16)^2) + 2*q*P(4)^2*P(16)^2 / (P(2)^5*P(8))

name: phi_neg_3dissection
lhs: P(1)^2 / P(2)
rhs: P(9)^2 / P(18) - 2*q*P(3)*P(18)^2 / (P(6)*P(9))

name: overpartition_gf_3dissection
lhs: P(2) / P(1)^2
rhs: P(6)^4*P(9)^6 / (P(3)^8*P(18)^3) + 2*q*P(6)^3*P(9)^3 / P(3)^7 + 4*q^2*P(6)^2*P(18)^3 / P(3)^6

# -- theta function product forms ------------------------------------------

name: phi_as_eta_quotient
lhs: phi(q)
rhs: P(2)^5 / (P(1)^2*P(4)^2)

name: phi_as_pochhammer_ratio
lhs: phi(q)
rhs: PG(-,1,2)*P(2) / (PG(+,1,2)*PG(-,2,2))

name: phi_neg_as_eta_quotient
lhs: phi(-q)
rhs: P(1)^2 / P(2)

name: jacobi_triple_product_pos
lhs: f(q^{x}, q^{y})
rhs: PG(-,{x},{x+y})*PG(-,{y},{x+y})*P({x+y})
params: {x=1,y=1} {x=1,y=2} {x=2,y=1} {x=1,y=3}

name: jacobi_triple_product_neg
lhs: f(-q^{x}, -q^{y})
rhs: PG(+,{x},{x+y})*PG(+,{y},{x+y})*P({x+y})
params: {x=1,y=1} {x=1,y=2} {x=2,y=1} {x=1,y=3}

name: phi_inverse_factorization
lhs: P(2) / P(1)^2
rhs: phi(q)*phi(q^2)^2*phi(q^4)^4*phi(q^8)^8*phi(q^16)^16*phi(q^32)^32*phi(q^64)^64*phi(q^128)^128*phi(q^256)^256
order: 400
note: factor list is complete for orders below 512 only

# -- prime-power Pochhammer congruence --------------------------------------

name: poch_prime_power_congruence
lhs: P({p*m})^{p^(k-1)}
rhs: P({m})^{p^k}
mod: {p^k}
params: {p=2,k=1,m=1} {p=2,k=2,m=1} {p=3,k=1,m=1} {p=3,k=1,m=2} {p=3,k=2,m=1}

# -- biregular generating function, theta form ------------------------------

name: biregular_gf_phi_form
lhs: P(2)*P({2^a})^2*P({3^b})^2*P({2^(a+1)*3^b}) / (P(1)^2*P({2^(a+1)})*P({2*3^b})*P({2^a*3^b})^2)
rhs: phi(-q^{2^a})*phi(-q^{3^b}) / (phi(-q)*phi(-q^{2^a*3^b}))
params: {a=1,b=1} {a=2,b=1} {a=3,b=2}

name: phi_product_square_expansion_mod8
lhs: phi(-q^{2^a})*phi(-q^{3^b})*phi(q)*phi(q^2)^2
rhs: 1 + (phi(-q^{2^a})-1) + (phi(-q^{3^b})-1) + (phi(q)-1) + 2*(phi(q^2)-1) + (phi(q^2)-1)^2 + (phi(-q^{2^a})-1)*(phi(-q^{3^b})-1) + (phi(-q^{2^a})-1)*(phi(q)-1) + (phi(-q^{3^b})-1)*(phi(q)-1)
mod: 8
params: {a=2,b=1} {a=3,b=2} {a=2,b=2}

# -- dissection chain for the (2^a, 3) family -------------------------------
# lhs is always the (2^a,3) biregular generating function.

name: expand_2a3
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: P(4)^4*P(12)^2*P({2^a})^2*P({3*2^(a+1)}) / (P(2)^4*P(8)*P(24)*P({2^(a+1)})*P({3*2^a})^2) + 2*q*P(4)*P(6)*P(8)*P(24)*P({2^a})^2*P({3*2^(a+1)}) / (P(2)^3*P(12)*P({2^(a+1)})*P({3*2^a})^2)
params: {a=2} {a=3} {a=4} {a=5}

name: slice_2a3_even
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: P(2)^4*P(6)^2*P({2^(a-1)})^2*P({3*2^a}) / (P(1)^4*P(4)*P(12)*P({2^a})*P({3*2^(a-1)})^2)
dissect: 2
residue: 0
params: {a=2} {a=3} {a=4} {a=5}
note: source display has an unbalanced parenthesis; the balanced reading is used

name: slice_2a3_odd
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: 2*(P(4)^6*P(6)^3/(P(2)^9*P(12)^2) + 3*q*P(4)^2*P(6)*P(12)^2/P(2)^7) * P(2)*P(4)*P(12)*P({2^(a-1)})^2*P({3*2^a}) / (P(6)*P({2^a})*P({3*2^(a-1)})^2)
dissect: 2
residue: 1
params: {a=2} {a=3} {a=4} {a=5}

name: slice_2a3_4n2
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: 4*P(2)*P(4)^4*P(3)^2*P({2^(a-2)})^2*P({3*2^(a-1)}) / (P(1)^6*P(6)*P({2^(a-1)})*P({3*2^(a-2)})^2)
dissect: 4
residue: 2
params: {a=2} {a=3} {a=4} {a=5}
note: source display has an unbalanced parenthesis; the balanced reading is used

name: slice_2a3_4n2_expanded
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: 4*P(4)^22*P(12)^2*P({2^(a-2)})^2*P({3*2^(a-1)}) / (P(2)^18*P(8)^5*P(24)*P({2^(a-1)})*P({3*2^(a-2)})^2) + 8*q*P(4)^19*P(6)*P(24)*P({2^(a-2)})^2*P({3*2^(a-1)}) / (P(2)^17*P(12)*P(8)^3*P({2^(a-1)})*P({3*2^(a-2)})^2) + 16*q*P(4)^10*P(12)^2*P(8)^3*P({2^(a-2)})^2*P({3*2^(a-1)}) / (P(2)^14*P(24)*P({2^(a-1)})*P({3*2^(a-2)})^2) + 32*q^2*P(4)^7*P(6)*P(8)^5*P(24)*P({2^(a-2)})^2*P({3*2^(a-1)}) / (P(2)^13*P(12)*P({2^(a-1)})*P({3*2^(a-2)})^2)
dissect: 4
residue: 2
params: {a=2} {a=3} {a=4} {a=5}

name: slice_2a3_8n6
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: 8*P(2)^19*P(3)*P(12)*P({2^(a-3)})^2*P({3*2^(a-2)}) / (P(1)^17*P(6)*P(4)^3*P({2^(a-2)})*P({3*2^(a-3)})^2) + 16*P(2)^10*P(6)^2*P(4)^3*P({2^(a-3)})^2*P({3*2^(a-2)}) / (P(1)^14*P(12)*P({2^(a-2)})*P({3*2^(a-3)})^2)
dissect: 8
residue: 6
params: {a=3} {a=4} {a=5}

name: slice_2a3_4n3
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: 6*P(2)^3*P(6)^3*P({2^(a-2)})^2*P({3*2^(a-1)}) / (P(1)^6*P({2^(a-1)})*P({3*2^(a-2)})^2)
dissect: 4
residue: 3
params: {a=2} {a=3} {a=4} {a=5}

name: evenness_2a3_odd_slice
lhs: P(2)*P({2^a})^2*P(3)^2*P({3*2^(a+1)}) / (P(1)^2*P({2^(a+1)})*P(6)*P({3*2^a})^2)
rhs: 0
mod: 2
dissect: 2
residue: 1
order: 400
params: {a=2}

# -- dissection chain for (2^(2a+1), 3^b) and (2^(2a), 3^b) -----------------

name: gf_2odd_3b
lhs: P(2)*P({2^(2*a+1)})^2*P({3^b})^2*P({2^(2*a+2)*3^b}) / (P(1)^2*P({2^(2*a+2)})*P({2*3^b})*P({2^(2*a+1)*3^b})^2)
rhs: P(2)*P({2^(2*a+1)})^2*P({3^b})^2*P({2*2^(2*a+1)*3^b}) / (P(1)^2*P({2*2^(2*a+1)})*P({2*3^b})*P({2^(2*a+1)*3^b})^2)
params: {a=0,b=2} {a=1,b=2} {a=0,b=3} {a=1,b=3}

name: factored_2odd_3b
lhs: P(2)*P({2^(2*a+1)})^2*P({3^b})^2*P({2^(2*a+2)*3^b}) / (P(1)^2*P({2^(2*a+2)})*P({2*3^b})*P({2^(2*a+1)*3^b})^2)
rhs: (P(6)^4*P(9)^6/(P(3)^8*P(18)^3) + 2*q*P(6)^3*P(9)^3/P(3)^7 + 4*q^2*P(6)^2*P(18)^3/P(3)^6) * (P({9*2^(2*a+1)})^2/P({18*2^(2*a+1)}) - 2*q^{2^(2*a+1)}*P({3*2^(2*a+1)})*P({18*2^(2*a+1)})^2/(P({6*2^(2*a+1)})*P({9*2^(2*a+1)}))) * P({3^b})^2*P({2*2^(2*a+1)*3^b}) / (P({2*3^b})*P({2^(2*a+1)*3^b})^2)
params: {a=0,b=2} {a=1,b=2} {a=0,b=3} {a=1,b=3}

name: slice_2odd_3b_3n_mod4
lhs: P(2)*P({2^(2*a+1)})^2*P({3^b})^2*P({2^(2*a+2)*3^b}) / (P(1)^2*P({2^(2*a+2)})*P({2*3^b})*P({2^(2*a+1)*3^b})^2)
rhs: P(6)^13*P(9)^24*P({3*2^(2*a+1)})^2*P({3^(b-1)})^2*P({2*2^(2*a+1)*3^(b-1)}) / (P(3)^26*P(18)^12*P({6*2^(2*a+1)})*P({2*3^(b-1)})*P({2^(2*a+1)*3^(b-1)})^2)
mod: 4
dissect: 3
residue: 0
params: {a=0,b=2} {a=1,b=2} {a=0,b=3} {a=1,b=3}
note: source display has an unbalanced parenthesis; the balanced reading is used

name: gf_2even_3b
lhs: P(2)*P({2^(2*a)})^2*P({3^b})^2*P({2^(2*a+1)*3^b}) / (P(1)^2*P({2^(2*a+1)})*P({2*3^b})*P({2^(2*a)*3^b})^2)
rhs: P(2)*P({2^(2*a)})^2*P({3^b})^2*P({2*2^(2*a)*3^b}) / (P(1)^2*P({2*2^(2*a)})*P({2*3^b})*P({2^(2*a)*3^b})^2)
params: {a=1,b=2} {a=1,b=3}

name: factored_2even_3b
lhs: P(2)*P({2^(2*a)})^2*P({3^b})^2*P({2^(2*a+1)*3^b}) / (P(1)^2*P({2^(2*a+1)})*P({2*3^b})*P({2^(2*a)*3^b})^2)
rhs: (P(6)^4*P(9)^6/(P(3)^8*P(18)^3) + 2*q*P(6)^3*P(9)^3/P(3)^7 + 4*q^2*P(6)^2*P(18)^3/P(3)^6) * (P({9*2^(2*a)})^2/P({18*2^(2*a)}) - 2*q^{2^(2*a)}*P({3*2^(2*a)})*P({18*2^(2*a)})^2/(P({6*2^(2*a)})*P({9*2^(2*a)}))) * P({3^b})^2*P({2*2^(2*a)*3^b}) / (P({2*3^b})*P({2^(2*a)*3^b})^2)
params: {a=1,b=2} {a=1,b=3}

name: slice_2even_3b_3n_mod8
lhs: P(2)*P({2^(2*a)})^2*P({3^b})^2*P({2^(2*a+1)*3^b}) / (P(1)^2*P({2^(2*a+1)})*P({2*3^b})*P({2^(2*a)*3^b})^2)
rhs: P(6)^13*P(9)^24*P({3*2^(2*a)})^2*P({3^(b-1)})^2*P({2*2^(2*a)*3^(b-1)}) / (P(3)^26*P(18)^12*P({6*2^(2*a)})*P({2*3^(b-1)})*P({2^(2*a)*3^(b-1)})^2)
mod: 8
dissect: 3
residue: 0
params: {a=1,b=2} {a=1,b=3}
note: source display has an unbalanced parenthesis; the balanced reading is used

# -- 3-dissection of phi(-q), residue by residue ----------------------------

name: phi_neg_mod3_r0
lhs: phi(-q)
rhs: P(3)^2 / P(6)
dissect: 3
residue: 0

name: phi_neg_mod3_r1
lhs: phi(-q)
rhs: -2*P(1)*P(6)^2 / (P(2)*P(3))
dissect: 3
residue: 1

name: phi_neg_mod3_r2
lhs: phi(-q)
rhs: 0
dissect: 3
residue: 2
)qfx";

} // namespace

const std::string& builtin_fixture_text() {
    static const std::string text(kBuiltinFixtures);
    return text;
}

const std::vector<IdentityFixture>& builtin_fixtures() {
    static const std::vector<IdentityFixture> fixtures =
        parse_fixtures(builtin_fixture_text());
    return fixtures;
}

} // namespace qcong
