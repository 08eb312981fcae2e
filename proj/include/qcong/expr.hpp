#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// AST of a q-series expression.  Small integer payloads are packed
/// into the node; children live in `kids`.
///
///   IntLit       ival = value
///   Monomial     ival = coefficient, a = exponent          (c * q^e)
///   PochSimple   a = k                                     P(k)
///   PochGeneral  sign, a = offset r, b = step s            PG(sign,r,s)
///   Phi          sign, a = scale                           phi(sign q^scale)
///   Theta        sign/a and sign2/b                        f(s1 q^a, s2 q^b)
///   Neg/Add/Sub/Mul/Div                                    kids
///   Pow          kids[0], ival = exponent
///   Subst        kids[0], ival = step k                    q -> q^k
struct QExpr {
    enum class Kind {
        IntLit,
        Monomial,
        PochSimple,
        PochGeneral,
        Phi,
        Theta,
        Neg,
        Add,
        Sub,
        Mul,
        Div,
        Pow,
        Subst,
    };

    Kind kind = Kind::IntLit;
    long long ival = 0;
    int sign = 1;
    int sign2 = 1;
    long long a = 0;
    long long b = 0;
    std::vector<QExpr> kids;
    // byte range in the source text; 0,0 for programmatic nodes
    std::size_t span_begin = 0;
    std::size_t span_end = 0;

    bool structurally_equal(const QExpr& o) const;
};

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' signed_int)?
///   atom   := '(' expr ')' | '-' atom | int | 'q' ('^' int)?
///           | 'P' '(' int ')' | 'PG' '(' sign ',' int ',' int ')'
///           | 'phi' '(' sign? 'q' ('^' int)? ')'
///           | 'f' '(' sign? 'q' ('^' int)? ',' sign? 'q' ('^' int)? ')'
///           | 'subst' '(' expr ',' int ')'
/// Whitespace-insensitive; errors carry the byte offset and the
/// expected tokens.
QExpr parse(const std::string& text);

/// Evaluates by structural recursion over series_core and qproducts.
/// Division is multiplication by the inverse; a non-unit denominator
/// reports the offending subexpression's source span.
TruncatedSeries eval(const QExpr& e, std::size_t N);

/// Same, with the original text available so non-unit errors can
/// quote the offending subexpression.
TruncatedSeries eval(const QExpr& e, std::size_t N, const std::string& source);

/// Renders to text that reparses to a structurally identical tree.
std::string render(const QExpr& e);

/// Replaces `{...}` placeholders by the value of the enclosed integer
/// arithmetic (+ - * ^, parentheses) over the bound names.  Every
/// computed value must be a positive integer.
std::string parametrize(const std::string& templ,
                        const std::map<std::string, long long>& bindings);

} // namespace qcong
