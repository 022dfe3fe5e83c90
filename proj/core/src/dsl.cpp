#include "umbral/dsl.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace umbral {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {"inv", "cinv", "adj",   "d",     "dsum",
                                                        "ddiff", "bar", "mul", "scale", "fresh"};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string describe_char(unsigned char c) {
    if (c >= 0x20 && c < 0x7f) return std::string("'") + static_cast<char>(c) + "'";
    char buf[16];
    std::snprintf(buf, sizeof buf, "byte 0x%02X", c);
    return buf;
}

} // namespace

const char* token_kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::Name: return "name";
    case TokenKind::Int: return "integer";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::CaretDot: return "'^.'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Prime: return "'''";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::End: return "end of input";
    }
    return "?";
}

bool is_keyword(std::string_view word) {
    for (auto k : kKeywords)
        if (k == word) return true;
    return false;
}

std::vector<Token> tokenize(std::string_view in) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (in[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
        pos.offset = i;
    };

    while (true) {
        const std::size_t trivia_begin = i;
        while (i < in.size() && space(in[i])) advance(1);
        Token tok;
        tok.trivia = std::string(in.substr(trivia_begin, i - trivia_begin));
        tok.pos = pos;
        if (i == in.size()) {
            out.push_back(std::move(tok));
            return out;
        }
        const char c = in[i];
        std::size_t len = 1;
        if (name_start(c)) {
            while (i + len < in.size() && name_char(in[i + len])) ++len;
            tok.kind = is_keyword(in.substr(i, len)) ? TokenKind::Keyword : TokenKind::Name;
        } else if (digit(c)) {
            while (i + len < in.size() && digit(in[i + len])) ++len;
            tok.kind = TokenKind::Int;
        } else if (c == '^') {
            if (i + 1 < in.size() && in[i + 1] == '.') {
                len = 2;
                tok.kind = TokenKind::CaretDot;
            } else {
                tok.kind = TokenKind::Caret;
            }
        } else if (c == '.') {
            if (i + 1 < in.size() && in[i + 1] == '.') throw SyntaxError("unexpected '..'", pos);
            tok.kind = TokenKind::Dot;
        } else {
            switch (c) {
            case '/': tok.kind = TokenKind::Slash; break;
            case '+': tok.kind = TokenKind::Plus; break;
            case '-': tok.kind = TokenKind::Minus; break;
            case '(': tok.kind = TokenKind::LParen; break;
            case ')': tok.kind = TokenKind::RParen; break;
            case ',': tok.kind = TokenKind::Comma; break;
            case '\'': tok.kind = TokenKind::Prime; break;
            default:
                throw SyntaxError("illegal character " + describe_char(static_cast<unsigned char>(c)), pos);
            }
        }
        tok.lexeme = std::string(in.substr(i, len));
        advance(len);
        out.push_back(std::move(tok));
    }
}

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : t_(toks) {
        if (t_.empty() || t_.back().kind != TokenKind::End)
            throw SyntaxError("token stream must end with an end-of-input token", SourcePos{});
    }

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().kind != TokenKind::End) fail("'+', '-', '.', '^', '^.' or end of input");
        return e;
    }

private:
    const Token& peek() const { return t_[p_]; }
    bool at(TokenKind k) const { return peek().kind == k; }
    const Token& take() {
        const Token& tok = t_[p_];
        if (tok.kind != TokenKind::End) ++p_;
        return tok;
    }
    std::size_t end_of_last() const {
        const Token& tok = t_[p_ - 1];
        return tok.pos.offset + tok.lexeme.size();
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& tok = peek();
        const std::string found =
            tok.kind == TokenKind::End ? "end of input" : "'" + tok.lexeme + "'";
        throw SyntaxError("expected " + expected + ", found " + found, tok.pos);
    }

    const Token& expect(TokenKind k) {
        if (!at(k)) fail(token_kind_name(k));
        return take();
    }

    static ExprPtr with_span(ExprPtr e, std::size_t b, std::size_t end) {
        auto copy = std::make_shared<Expr>(*e);
        copy->span = {b, end};
        return copy;
    }

    // expr := term (('+'|'-') term)*
    ExprPtr expr() {
        const std::size_t b = peek().pos.offset;
        ExprPtr lhs = term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const bool minus = take().kind == TokenKind::Minus;
            const std::size_t rb = peek().pos.offset;
            ExprPtr rhs = term();
            if (minus) rhs = ex::unary(ExprKind::InverseDot, rhs, {rb, end_of_last()});
            lhs = ex::binary(ExprKind::Sum, lhs, rhs, {b, end_of_last()});
        }
        return lhs;
    }

    // term := unary ('.' unary)*, grouped to the right.
    ExprPtr term() {
        const std::size_t b = peek().pos.offset;
        ExprPtr lhs = unary();
        if (!at(TokenKind::Dot)) return lhs;
        take();
        ExprPtr rhs = term();
        return ex::binary(ExprKind::Dot, lhs, rhs, {b, end_of_last()});
    }

    // unary := '-' INT ('/' INT)? suffix* | '-' unary | primary suffix*
    ExprPtr unary() {
        const std::size_t b = peek().pos.offset;
        if (at(TokenKind::Minus)) {
            take();
            if (at(TokenKind::Int)) {
                Rational v = rational_literal();
                return suffixes(ex::number(-v, {b, end_of_last()}), b);
            }
            ExprPtr operand = unary();
            return ex::scalar_mul(Rational(-1), operand, {b, end_of_last()});
        }
        return suffixes(primary(), b);
    }

    ExprPtr suffixes(ExprPtr base, std::size_t b) {
        while (at(TokenKind::Caret) || at(TokenKind::CaretDot)) {
            const ExprKind kind = take().kind == TokenKind::Caret ? ExprKind::Power : ExprKind::DotPower;
            base = ex::power(kind, base, exponent(), {b, end_of_last()});
        }
        return base;
    }

    unsigned exponent() {
        if (!at(TokenKind::Int)) fail("integer exponent");
        const Token& tok = peek();
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(tok.lexeme.data(), tok.lexeme.data() + tok.lexeme.size(), value);
        if (ec != std::errc() || value > max_exponent)
            throw SyntaxError("exponent larger than " + std::to_string(max_exponent), tok.pos);
        take();
        return value;
    }

    // INT ('/' INT)?
    Rational rational_literal() {
        const Token& num = expect(TokenKind::Int);
        if (!at(TokenKind::Slash)) return Rational::parse(num.lexeme);
        take();
        if (!at(TokenKind::Int)) fail("integer denominator");
        const Token& den = peek();
        if (den.lexeme.find_first_not_of('0') == std::string::npos)
            throw SyntaxError("zero denominator", den.pos);
        take();
        return Rational::parse(num.lexeme + "/" + den.lexeme);
    }

    // Signed rational for scale(c, e).
    Rational signed_literal() {
        bool negative = false;
        if (at(TokenKind::Minus)) {
            take();
            negative = true;
        }
        if (!at(TokenKind::Int)) fail("rational constant");
        Rational v = rational_literal();
        return negative ? -v : v;
    }

    ExprPtr primary() {
        const Token& tok = peek();
        const std::size_t b = tok.pos.offset;
        switch (tok.kind) {
        case TokenKind::Name: {
            take();
            if (tok.lexeme == "x" || tok.lexeme == "y") {
                if (at(TokenKind::Prime)) throw SyntaxError("indeterminates cannot be primed", peek().pos);
                return ex::indeterminate(tok.lexeme == "x" ? Var::X : Var::Y, {b, end_of_last()});
            }
            unsigned primes = 0;
            while (at(TokenKind::Prime)) {
                take();
                ++primes;
            }
            return ex::atom(tok.lexeme, primes, {b, end_of_last()});
        }
        case TokenKind::Int: {
            Rational v = rational_literal();
            return ex::number(v, {b, end_of_last()});
        }
        case TokenKind::LParen: {
            take();
            ExprPtr inner = expr();
            expect(TokenKind::RParen);
            return with_span(inner, b, end_of_last());
        }
        case TokenKind::Keyword:
            return call();
        default:
            fail("name, number, '(', '-' or keyword");
        }
    }

    ExprPtr call() {
        const Token& kw = take();
        const std::size_t b = kw.pos.offset;
        const std::string& name = kw.lexeme;
        expect(TokenKind::LParen);
        ExprPtr result;
        if (name == "scale") {
            Rational c = signed_literal();
            expect(TokenKind::Comma);
            ExprPtr e = expr();
            expect(TokenKind::RParen);
            return ex::scalar_mul(c, e, {b, end_of_last()});
        }
        ExprPtr a = expr();
        ExprKind binary_kind;
        if (name == "dsum") binary_kind = ExprKind::DisjointSum;
        else if (name == "ddiff") binary_kind = ExprKind::DisjointDiff;
        else if (name == "mul") binary_kind = ExprKind::Product;
        else {
            expect(TokenKind::RParen);
            ExprKind k = ExprKind::InverseDot;
            if (name == "cinv") k = ExprKind::CompInv;
            else if (name == "adj") k = ExprKind::Adjoint;
            else if (name == "d") k = ExprKind::Deriv;
            else if (name == "bar") k = ExprKind::Bar;
            else if (name == "fresh") k = ExprKind::Fresh;
            return ex::unary(k, a, {b, end_of_last()});
        }
        expect(TokenKind::Comma);
        ExprPtr c = expr();
        expect(TokenKind::RParen);
        return ex::binary(binary_kind, a, c, {b, end_of_last()});
    }

    const std::vector<Token>& t_;
    std::size_t p_ = 0;
};

// Precedence levels for printing.
enum Level { kExpr = 0, kTerm = 1, kUnary = 2, kPostfix = 3 };

std::string print(const ExprPtr& e, int level);

std::string wrap(const std::string& s, bool paren) { return paren ? "(" + s + ")" : s; }

std::string call_text(const char* kw, const ExprPtr& a) { return std::string(kw) + "(" + print(a, kExpr) + ")"; }

std::string call_text(const char* kw, const ExprPtr& a, const ExprPtr& b) {
    return std::string(kw) + "(" + print(a, kExpr) + ", " + print(b, kExpr) + ")";
}

std::string print(const ExprPtr& e, int level) {
    switch (e->kind) {
    case ExprKind::Atom:
        return e->label();
    case ExprKind::Indeterminate:
        return e->var == Var::X ? "x" : "y";
    case ExprKind::Number: {
        const std::string s = e->value.to_string();
        // A negative literal is its own unary form; as a base it needs parens for clarity.
        return wrap(s, e->value.sign() < 0 && level >= kPostfix);
    }
    case ExprKind::Sum: {
        std::string rhs;
        std::string op = " + ";
        if (e->rhs->kind == ExprKind::InverseDot) {
            op = " - ";
            rhs = print(e->rhs->lhs, kTerm);
        } else {
            rhs = print(e->rhs, kTerm);
        }
        return wrap(print(e->lhs, kExpr) + op + rhs, level > kExpr);
    }
    case ExprKind::Dot:
        return wrap(print(e->lhs, kUnary) + " . " + print(e->rhs, kTerm), level > kTerm);
    case ExprKind::ScalarMul: {
        if (e->value == Rational(-1)) {
            std::string operand = print(e->lhs, kUnary);
            if (digit(operand[0])) operand = "(" + operand + ")";
            return wrap("-" + operand, level > kUnary);
        }
        return "scale(" + e->value.to_string() + ", " + print(e->lhs, kExpr) + ")";
    }
    case ExprKind::Power:
    case ExprKind::DotPower: {
        const char* op = e->kind == ExprKind::Power ? " ^ " : " ^. ";
        return print(e->lhs, kPostfix) + op + std::to_string(e->exponent);
    }
    case ExprKind::InverseDot: return call_text("inv", e->lhs);
    case ExprKind::CompInv: return call_text("cinv", e->lhs);
    case ExprKind::Adjoint: return call_text("adj", e->lhs);
    case ExprKind::Deriv: return call_text("d", e->lhs);
    case ExprKind::Bar: return call_text("bar", e->lhs);
    case ExprKind::Fresh: return call_text("fresh", e->lhs);
    case ExprKind::Product: return call_text("mul", e->lhs, e->rhs);
    case ExprKind::DisjointSum: return call_text("dsum", e->lhs, e->rhs);
    case ExprKind::DisjointDiff: return call_text("ddiff", e->lhs, e->rhs);
    }
    return "?";
}

} // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view input) { return parse(tokenize(input)); }

std::string pretty_print(const ExprPtr& e) { return print(e, kExpr); }

} // namespace umbral
