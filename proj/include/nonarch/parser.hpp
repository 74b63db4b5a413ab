#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {
namespace lang {

struct SourceLoc {
    int line = 1;
    int col = 1;
};

inline std::string loc_str(SourceLoc loc) {
    return std::to_string(loc.line) + ":" + std::to_string(loc.col);
}

struct SyntaxError : std::runtime_error {
    SourceLoc loc;
    std::string expected;
    SyntaxError(SourceLoc l, const std::string& expect, const std::string& got)
        : std::runtime_error("SyntaxError at " + loc_str(l) + ": expected " + expect + ", got " +
                             got),
          loc(l),
          expected(expect) {}
};

struct IntegerExponentRequired : std::runtime_error {
    SourceLoc loc;
    explicit IntegerExponentRequired(SourceLoc l)
        : std::runtime_error("IntegerExponentRequired at " + loc_str(l)), loc(l) {}
};

// --- tokens ---

enum class TokKind { Number, Ident, Op, LParen, RParen, Comma, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;        // ident name or operator spelling
    ExactRational value;     // for Number
    bool integer_literal = false;  // Number with no decimal point
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> tokenize() {
        std::vector<Token> out;
        while (true) {
            Token t = next();
            bool end = t.kind == TokKind::End;
            out.push_back(std::move(t));
            if (end) break;
        }
        return out;
    }

private:
    Token next() {
        skip_ws();
        Token t;
        t.loc = loc();
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number(t);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(t);
        switch (c) {
            case '(': advance(); t.kind = TokKind::LParen; t.text = "("; return t;
            case ')': advance(); t.kind = TokKind::RParen; t.text = ")"; return t;
            case ',': advance(); t.kind = TokKind::Comma; t.text = ","; return t;
            case '+': case '-': case '*': case '/': case '^':
                advance();
                t.kind = TokKind::Op;
                t.text = std::string(1, c);
                return t;
            case '<': case '>': case '=': {
                advance();
                t.kind = TokKind::Op;
                t.text = std::string(1, c);
                if (pos_ < src_.size() && src_[pos_] == '=') {
                    advance();
                    t.text += '=';
                }
                if (t.text == "=")
                    throw SyntaxError(t.loc, "'==' or expression", "'='");
                return t;
            }
            default:
                throw SyntaxError(t.loc, "token", "'" + std::string(1, c) + "'");
        }
    }

    Token number(Token t) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_];
            advance();
        }
        t.kind = TokKind::Number;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            advance();
            std::string frac;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                frac += src_[pos_];
                advance();
            }
            if (frac.empty()) throw SyntaxError(loc(), "digits after '.'", "end of number");
            // Decimal converted exactly: d.f = (d*10^|f| + f) / 10^|f|.
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            t.value = ExactRational(BigInt(digits) * scale + BigInt(frac), scale);
            t.integer_literal = false;
        } else {
            t.value = ExactRational(BigInt(digits));
            t.integer_literal = true;
        }
        t.text = digits;
        return t;
    }

    Token ident(Token t) {
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            name += src_[pos_];
            advance();
        }
        t.kind = TokKind::Ident;
        t.text = std::move(name);
        return t;
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    SourceLoc loc() const { return {line_, col_}; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

// --- AST ---

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumberNode {
    ExactRational value;
};
struct OmegaNode {};
struct NegNode {
    ExprPtr operand;
};
struct BinaryNode {  // + - * /
    char op;
    ExprPtr lhs, rhs;
};
struct PowNode {
    ExprPtr base;
    long long exponent;
};
struct CompareNode {  // < <= == >= >
    std::string op;
    ExprPtr lhs, rhs;
};
struct CallNode {
    std::string name;
    std::vector<ExprPtr> args;
};

struct Expr {
    std::variant<NumberNode, OmegaNode, NegNode, BinaryNode, PowNode, CompareNode, CallNode> node;
    SourceLoc loc;
};

inline ExprPtr make_expr(decltype(Expr::node) node, SourceLoc loc) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    e->loc = loc;
    return e;
}

/// Recursive descent over:
///   expr := cmp ; cmp := sum (relop sum)? ; sum := term (('+'|'-') term)* ;
///   term := unary (('*'|'/') unary)* ; unary := '-' unary | power ;
///   power := atom ('^' integer)? ; atom := rational | 'w' | 'eps' | call | '(' expr ')'
/// 'eps' is sugar for 1/w and is desugared here.
class Parser {
public:
    explicit Parser(const std::string& src) : toks_(Lexer(src).tokenize()) {}

    ExprPtr parse() {
        ExprPtr e = cmp();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    bool at_op(const char* spelling) const {
        return peek().kind == TokKind::Op && peek().text == spelling;
    }

    void expect_end() {
        if (peek().kind != TokKind::End)
            throw SyntaxError(peek().loc, "end of input", describe(peek()));
    }

    static std::string describe(const Token& t) {
        if (t.kind == TokKind::End) return "end of input";
        return "'" + t.text + "'";
    }

    ExprPtr cmp() {
        ExprPtr lhs = sum();
        if (peek().kind == TokKind::Op &&
            (peek().text == "<" || peek().text == "<=" || peek().text == "==" ||
             peek().text == ">=" || peek().text == ">")) {
            Token op = take();
            ExprPtr rhs = sum();
            return make_expr(CompareNode{op.text, std::move(lhs), std::move(rhs)}, op.loc);
        }
        return lhs;
    }

    ExprPtr sum() {
        ExprPtr lhs = term();
        while (at_op("+") || at_op("-")) {
            Token op = take();
            ExprPtr rhs = term();
            lhs = make_expr(BinaryNode{op.text[0], std::move(lhs), std::move(rhs)}, op.loc);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (at_op("*") || at_op("/")) {
            Token op = take();
            ExprPtr rhs = unary();
            lhs = make_expr(BinaryNode{op.text[0], std::move(lhs), std::move(rhs)}, op.loc);
        }
        return lhs;
    }

    ExprPtr unary() {
        if (at_op("-")) {
            Token op = take();
            return make_expr(NegNode{unary()}, op.loc);
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (at_op("^")) {
            Token caret = take();
            long long e = integer_exponent();
            return make_expr(PowNode{std::move(base), e}, caret.loc);
        }
        return base;
    }

    long long integer_exponent() {
        bool negative = false;
        if (at_op("-")) {
            take();
            negative = true;
        }
        const Token& t = peek();
        if (t.kind != TokKind::Number || !t.integer_literal)
            throw IntegerExponentRequired(t.loc);
        Token num = take();
        long long e = num.value.numerator().convert_to<long long>();
        return negative ? -e : e;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::Number: {
                Token n = take();
                return make_expr(NumberNode{n.value}, n.loc);
            }
            case TokKind::Ident: {
                Token id = take();
                if (id.text == "w") return make_expr(OmegaNode{}, id.loc);
                if (id.text == "eps") {
                    // eps == 1/w
                    return make_expr(
                        BinaryNode{'/', make_expr(NumberNode{ExactRational(1)}, id.loc),
                                   make_expr(OmegaNode{}, id.loc)},
                        id.loc);
                }
                return call(std::move(id));
            }
            case TokKind::LParen: {
                take();
                ExprPtr e = cmp();
                if (peek().kind != TokKind::RParen)
                    throw SyntaxError(peek().loc, "')'", describe(peek()));
                take();
                return e;
            }
            default:
                throw SyntaxError(t.loc, "number, 'w', 'eps', call or '('", describe(t));
        }
    }

    ExprPtr call(Token id) {
        if (peek().kind != TokKind::LParen)
            throw SyntaxError(peek().loc, "'(' after '" + id.text + "'", describe(peek()));
        take();
        std::vector<ExprPtr> args;
        if (peek().kind != TokKind::RParen) {
            args.push_back(cmp());
            while (peek().kind == TokKind::Comma) {
                take();
                args.push_back(cmp());
            }
        }
        if (peek().kind != TokKind::RParen)
            throw SyntaxError(peek().loc, "')' or ','", describe(peek()));
        take();
        return make_expr(CallNode{std::move(id.text), std::move(args)}, id.loc);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline ExprPtr parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace lang
}  // namespace nonarch
