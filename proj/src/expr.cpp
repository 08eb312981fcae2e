#include "qcong/expr.hpp"

#include <cctype>
#include <limits>

#include "qcong/products.hpp"

namespace qcong {

bool QExpr::structurally_equal(const QExpr& o) const {
    if (kind != o.kind || ival != o.ival || sign != o.sign ||
        sign2 != o.sign2 || a != o.a || b != o.b ||
        kids.size() != o.kids.size())
        return false;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (!kids[i].structurally_equal(o.kids[i])) return false;
    return true;
}

namespace {

enum class Tok {
    End,
    Int,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    KwQ,
    KwP,
    KwPG,
    KwPhi,
    KwF,
    KwSubst,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Int: return "integer";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::KwQ: return "'q'";
        case Tok::KwP: return "'P'";
        case Tok::KwPG: return "'PG'";
        case Tok::KwPhi: return "'phi'";
        case Tok::KwF: return "'f'";
        case Tok::KwSubst: return "'subst'";
    }
    return "?";
}

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    long long value = 0;       // for Int
    std::size_t tok_begin = 0;

    explicit Lexer(const std::string& s) : src(s) { next(); }

    void next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
        tok_begin = pos;
        if (pos >= src.size()) {
            tok = Tok::End;
            return;
        }
        char c = src[pos];
        switch (c) {
            case '+': ++pos; tok = Tok::Plus; return;
            case '-': ++pos; tok = Tok::Minus; return;
            case '*': ++pos; tok = Tok::Star; return;
            case '/': ++pos; tok = Tok::Slash; return;
            case '^': ++pos; tok = Tok::Caret; return;
            case '(': ++pos; tok = Tok::LParen; return;
            case ')': ++pos; tok = Tok::RParen; return;
            case ',': ++pos; tok = Tok::Comma; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[pos]))) {
                int d = src[pos] - '0';
                if (v > (std::numeric_limits<long long>::max() - d) / 10)
                    throw parse_error(tok_begin, "integer literal overflows at offset " +
                                                     std::to_string(tok_begin));
                v = v * 10 + d;
                ++pos;
            }
            tok = Tok::Int;
            value = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() &&
                   std::isalnum(static_cast<unsigned char>(src[pos])))
                ++pos;
            std::string word = src.substr(start, pos - start);
            if (word == "q") { tok = Tok::KwQ; return; }
            if (word == "P") { tok = Tok::KwP; return; }
            if (word == "PG") { tok = Tok::KwPG; return; }
            if (word == "phi") { tok = Tok::KwPhi; return; }
            if (word == "f") { tok = Tok::KwF; return; }
            if (word == "subst") { tok = Tok::KwSubst; return; }
            throw parse_error(start, "unknown symbol '" + word + "' at offset " +
                                         std::to_string(start));
        }
        throw parse_error(pos, std::string("unexpected character '") + c +
                                   "' at offset " + std::to_string(pos));
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& s) : lex(s) {}

    [[noreturn]] void fail(const std::string& expected) {
        throw parse_error(lex.tok_begin,
                          "expected " + expected + " at offset " +
                              std::to_string(lex.tok_begin) + ", found " +
                              tok_name(lex.tok));
    }

    void expect(Tok t) {
        if (lex.tok != t) fail(tok_name(t));
        lex.next();
    }

    long long expect_int() {
        if (lex.tok != Tok::Int) fail("integer");
        long long v = lex.value;
        lex.next();
        return v;
    }

    // ('+'|'-')? int
    long long signed_int() {
        int s = 1;
        if (lex.tok == Tok::Plus) {
            lex.next();
        } else if (lex.tok == Tok::Minus) {
            s = -1;
            lex.next();
        }
        return s * expect_int();
    }

    int sign_token() {
        if (lex.tok == Tok::Plus) { lex.next(); return 1; }
        if (lex.tok == Tok::Minus) { lex.next(); return -1; }
        fail("'+' or '-'");
    }

    // sign? 'q' ('^' int)?  ->  (sign, exponent)
    std::pair<int, long long> signed_q_power() {
        int s = 1;
        if (lex.tok == Tok::Plus) {
            lex.next();
        } else if (lex.tok == Tok::Minus) {
            s = -1;
            lex.next();
        }
        expect(Tok::KwQ);
        long long e = 1;
        if (lex.tok == Tok::Caret) {
            lex.next();
            e = expect_int();
        }
        return {s, e};
    }

    QExpr parse_expr() {
        std::size_t begin = lex.tok_begin;
        QExpr lhs = parse_term();
        while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
            bool plus = lex.tok == Tok::Plus;
            lex.next();
            QExpr rhs = parse_term();
            QExpr node;
            node.kind = plus ? QExpr::Kind::Add : QExpr::Kind::Sub;
            node.span_begin = begin;
            node.span_end = lex.tok_begin;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    QExpr parse_term() {
        std::size_t begin = lex.tok_begin;
        QExpr lhs = parse_factor();
        while (lex.tok == Tok::Star || lex.tok == Tok::Slash) {
            bool star = lex.tok == Tok::Star;
            lex.next();
            QExpr rhs = parse_factor();
            QExpr node;
            node.kind = star ? QExpr::Kind::Mul : QExpr::Kind::Div;
            node.span_begin = begin;
            node.span_end = lex.tok_begin;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    QExpr parse_factor() {
        std::size_t begin = lex.tok_begin;
        QExpr base = parse_atom();
        if (lex.tok == Tok::Caret) {
            lex.next();
            long long e = signed_int();
            QExpr node;
            node.kind = QExpr::Kind::Pow;
            node.ival = e;
            node.span_begin = begin;
            node.span_end = lex.tok_begin;
            node.kids.push_back(std::move(base));
            return node;
        }
        return base;
    }

    QExpr parse_atom() {
        std::size_t begin = lex.tok_begin;
        QExpr node;
        node.span_begin = begin;
        switch (lex.tok) {
            case Tok::LParen: {
                lex.next();
                QExpr inner = parse_expr();
                expect(Tok::RParen);
                inner.span_begin = begin;
                inner.span_end = lex.tok_begin;
                return inner;
            }
            case Tok::Minus: {
                lex.next();
                QExpr inner = parse_atom();
                node.kind = QExpr::Kind::Neg;
                node.kids.push_back(std::move(inner));
                break;
            }
            case Tok::Int: {
                node.kind = QExpr::Kind::IntLit;
                node.ival = lex.value;
                lex.next();
                break;
            }
            case Tok::KwQ: {
                lex.next();
                long long e = 1;
                if (lex.tok == Tok::Caret) {
                    lex.next();
                    e = expect_int();
                }
                node.kind = QExpr::Kind::Monomial;
                node.ival = 1;
                node.a = e;
                break;
            }
            case Tok::KwP: {
                lex.next();
                expect(Tok::LParen);
                long long k = expect_int();
                expect(Tok::RParen);
                node.kind = QExpr::Kind::PochSimple;
                node.a = k;
                break;
            }
            case Tok::KwPG: {
                lex.next();
                expect(Tok::LParen);
                int s = sign_token();
                expect(Tok::Comma);
                long long r = expect_int();
                expect(Tok::Comma);
                long long st = expect_int();
                expect(Tok::RParen);
                node.kind = QExpr::Kind::PochGeneral;
                node.sign = s;
                node.a = r;
                node.b = st;
                break;
            }
            case Tok::KwPhi: {
                lex.next();
                expect(Tok::LParen);
                auto [s, e] = signed_q_power();
                expect(Tok::RParen);
                node.kind = QExpr::Kind::Phi;
                node.sign = s;
                node.a = e;
                break;
            }
            case Tok::KwF: {
                lex.next();
                expect(Tok::LParen);
                auto [s1, e1] = signed_q_power();
                expect(Tok::Comma);
                auto [s2, e2] = signed_q_power();
                expect(Tok::RParen);
                node.kind = QExpr::Kind::Theta;
                node.sign = s1;
                node.a = e1;
                node.sign2 = s2;
                node.b = e2;
                break;
            }
            case Tok::KwSubst: {
                lex.next();
                expect(Tok::LParen);
                QExpr inner = parse_expr();
                expect(Tok::Comma);
                long long k = expect_int();
                expect(Tok::RParen);
                node.kind = QExpr::Kind::Subst;
                node.ival = k;
                node.kids.push_back(std::move(inner));
                break;
            }
            default:
                fail("'(' , '-', integer, 'q', 'P', 'PG', 'phi', 'f' or 'subst'");
        }
        node.span_end = lex.tok_begin;
        return node;
    }
};

std::string span_text(const QExpr& e, const std::string* src) {
    if (!src || e.span_end <= e.span_begin || e.span_end > src->size())
        return {};
    return src->substr(e.span_begin, e.span_end - e.span_begin);
}

// The source text is threaded through evaluation only to improve the
// non-unit division diagnostic.
TruncatedSeries eval_node(const QExpr& e, std::size_t N, const std::string* src) {
    switch (e.kind) {
        case QExpr::Kind::IntLit:
            return make_monomial(Coeff(static_cast<long>(e.ival)), 0, N);
        case QExpr::Kind::Monomial:
            return make_monomial(Coeff(static_cast<long>(e.ival)),
                                 static_cast<std::size_t>(e.a), N);
        case QExpr::Kind::PochSimple:
            return pochhammer_simple(e.a, N);
        case QExpr::Kind::PochGeneral:
            return pochhammer_general({e.sign, e.a, e.b, 1}, N);
        case QExpr::Kind::Phi:
            return phi(e.sign, e.a, N);
        case QExpr::Kind::Theta:
            return theta_f(e.sign, e.a, e.sign2, e.b, N);
        case QExpr::Kind::Neg:
            return negate(eval_node(e.kids[0], N, src));
        case QExpr::Kind::Add:
            return add(eval_node(e.kids[0], N, src), eval_node(e.kids[1], N, src));
        case QExpr::Kind::Sub:
            return sub(eval_node(e.kids[0], N, src), eval_node(e.kids[1], N, src));
        case QExpr::Kind::Mul:
            return mul(eval_node(e.kids[0], N, src), eval_node(e.kids[1], N, src));
        case QExpr::Kind::Div: {
            TruncatedSeries num = eval_node(e.kids[0], N, src);
            TruncatedSeries den = eval_node(e.kids[1], N, src);
            if (den[0] != 1 && den[0] != -1) {
                std::string where = span_text(e.kids[1], src);
                throw non_unit_error(
                    "division by series with constant term " + den[0].get_str() +
                    (where.empty() ? "" : " in '" + where + "'"));
            }
            return mul(num, invert(den));
        }
        case QExpr::Kind::Pow: {
            if (e.ival < 0) {
                TruncatedSeries base = eval_node(e.kids[0], N, src);
                if (base[0] != 1 && base[0] != -1) {
                    std::string where = span_text(e.kids[0], src);
                    throw non_unit_error(
                        "negative power of series with constant term " +
                        base[0].get_str() +
                        (where.empty() ? "" : " in '" + where + "'"));
                }
                return pow(base, e.ival);
            }
            return pow(eval_node(e.kids[0], N, src), e.ival);
        }
        case QExpr::Kind::Subst:
            return substitute_power(eval_node(e.kids[0], N, src),
                                    static_cast<std::size_t>(e.ival));
    }
    throw error("unreachable expression kind");
}

int precedence(const QExpr& e) {
    switch (e.kind) {
        case QExpr::Kind::Add:
        case QExpr::Kind::Sub: return 1;
        case QExpr::Kind::Mul:
        case QExpr::Kind::Div: return 2;
        case QExpr::Kind::Pow: return 3;
        case QExpr::Kind::Monomial:
            // c*q^e with c != 1 renders as a product
            return e.ival == 1 ? 4 : 2;
        default: return 4; // atoms
    }
}

void render_node(const QExpr& e, std::string& out);

void render_child(const QExpr& child, int parent_prec, bool force_paren,
                  std::string& out) {
    bool paren = force_paren || precedence(child) < parent_prec;
    if (paren) out += '(';
    render_node(child, out);
    if (paren) out += ')';
}

void render_node(const QExpr& e, std::string& out) {
    switch (e.kind) {
        case QExpr::Kind::IntLit:
            out += std::to_string(e.ival);
            return;
        case QExpr::Kind::Monomial:
            if (e.ival != 1) {
                out += std::to_string(e.ival);
                out += '*';
            }
            out += 'q';
            if (e.a != 1) out += "^" + std::to_string(e.a);
            return;
        case QExpr::Kind::PochSimple:
            out += "P(" + std::to_string(e.a) + ")";
            return;
        case QExpr::Kind::PochGeneral:
            out += std::string("PG(") + (e.sign > 0 ? "+" : "-") + "," +
                   std::to_string(e.a) + "," + std::to_string(e.b) + ")";
            return;
        case QExpr::Kind::Phi:
            out += std::string("phi(") + (e.sign > 0 ? "" : "-") + "q";
            if (e.a != 1) out += "^" + std::to_string(e.a);
            out += ')';
            return;
        case QExpr::Kind::Theta:
            out += std::string("f(") + (e.sign > 0 ? "" : "-") + "q";
            if (e.a != 1) out += "^" + std::to_string(e.a);
            out += ", ";
            out += (e.sign2 > 0 ? "" : "-");
            out += 'q';
            if (e.b != 1) out += "^" + std::to_string(e.b);
            out += ')';
            return;
        case QExpr::Kind::Neg:
            out += '-';
            // '-' binds an atom in the grammar
            render_child(e.kids[0], 4, false, out);
            return;
        case QExpr::Kind::Add:
            render_child(e.kids[0], 1, false, out);
            out += " + ";
            render_child(e.kids[1], 2, false, out);
            return;
        case QExpr::Kind::Sub:
            render_child(e.kids[0], 1, false, out);
            out += " - ";
            render_child(e.kids[1], 2, false, out);
            return;
        case QExpr::Kind::Mul:
            render_child(e.kids[0], 2, false, out);
            out += '*';
            render_child(e.kids[1], 3, false, out);
            return;
        case QExpr::Kind::Div:
            render_child(e.kids[0], 2, false, out);
            out += '/';
            render_child(e.kids[1], 3, false, out);
            return;
        case QExpr::Kind::Pow:
            render_child(e.kids[0], 4, false, out);
            out += '^' + std::to_string(e.ival);
            return;
        case QExpr::Kind::Subst:
            out += "subst(";
            render_node(e.kids[0], out);
            out += ", " + std::to_string(e.ival) + ")";
            return;
    }
}

// --- template arithmetic -------------------------------------------------

struct TemplateEval {
    const std::string& src; // the text inside {...}
    std::size_t pos = 0;
    const std::map<std::string, long long>& bindings;

    TemplateEval(const std::string& s, const std::map<std::string, long long>& b)
        : src(s), bindings(b) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw template_error("template '{" + src + "}': " + msg);
    }

    long long checked_mul(long long x, long long y) {
        long long r;
        if (__builtin_mul_overflow(x, y, &r)) fail("integer overflow");
        return r;
    }

    long long parse_sum() {
        long long v = parse_product();
        for (;;) {
            skip_ws();
            if (pos < src.size() && src[pos] == '+') {
                ++pos;
                long long r;
                if (__builtin_add_overflow(v, parse_product(), &r))
                    fail("integer overflow");
                v = r;
            } else if (pos < src.size() && src[pos] == '-') {
                ++pos;
                long long r;
                if (__builtin_sub_overflow(v, parse_product(), &r))
                    fail("integer overflow");
                v = r;
            } else {
                return v;
            }
        }
    }

    long long parse_product() {
        long long v = parse_power();
        for (;;) {
            skip_ws();
            if (pos < src.size() && src[pos] == '*') {
                ++pos;
                v = checked_mul(v, parse_power());
            } else {
                return v;
            }
        }
    }

    long long parse_power() {
        long long base = parse_primary();
        skip_ws();
        if (pos < src.size() && src[pos] == '^') {
            ++pos;
            long long e = parse_power(); // right associative
            if (e < 0) fail("negative exponent");
            long long v = 1;
            for (long long i = 0; i < e; ++i) v = checked_mul(v, base);
            return v;
        }
        return base;
    }

    long long parse_primary() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            long long v = parse_sum();
            skip_ws();
            if (pos >= src.size() || src[pos] != ')') fail("missing ')'");
            ++pos;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[pos]))) {
                int d = src[pos] - '0';
                if (v > (std::numeric_limits<long long>::max() - d) / 10)
                    fail("integer overflow");
                v = v * 10 + d;
                ++pos;
            }
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                    src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            auto it = bindings.find(name);
            if (it == bindings.end()) fail("unbound placeholder name '" + name + "'");
            return it->second;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long long run() {
        long long v = parse_sum();
        skip_ws();
        if (pos != src.size()) fail("trailing input");
        return v;
    }
};

} // namespace

QExpr parse(const std::string& text) {
    Parser p(text);
    QExpr e = p.parse_expr();
    if (p.lex.tok != Tok::End) p.fail("end of input");
    return e;
}

TruncatedSeries eval(const QExpr& e, std::size_t N) {
    return eval_node(e, N, nullptr);
}

TruncatedSeries eval(const QExpr& e, std::size_t N, const std::string& source) {
    return eval_node(e, N, &source);
}

std::string render(const QExpr& e) {
    std::string out;
    render_node(e, out);
    return out;
}

std::string parametrize(const std::string& templ,
                        const std::map<std::string, long long>& bindings) {
    std::string out;
    out.reserve(templ.size());
    std::size_t i = 0;
    while (i < templ.size()) {
        if (templ[i] != '{') {
            out += templ[i++];
            continue;
        }
        std::size_t close = templ.find('}', i);
        if (close == std::string::npos)
            throw template_error("unterminated '{' in template");
        std::string inner = templ.substr(i + 1, close - i - 1);
        long long v = TemplateEval(inner, bindings).run();
        if (v < 1)
            throw template_error("template '{" + inner + "}' evaluated to " +
                                 std::to_string(v) + ", expected a positive integer");
        out += std::to_string(v);
        i = close + 1;
    }
    return out;
}

} // namespace qcong
