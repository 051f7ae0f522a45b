#pragma once

// Small expression grammar for elements entered on the command line.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (['*'] factor)*
//   factor  := atom ['^' ['-'] integer]
//   atom    := integer ['/' integer]            rational scalar
//            | 'q' | 'zeta'                     root-of-unity scalars (q = zeta^2)
//            | word in a, b, c, d               coordinate-algebra letters
//            | 'x' '[' integer ']'              torus generator, 1-based
//            | 'alpha' '[' integer ']'          puncture variable, 0-based
//            | '(' expr ')'
//
// A multi-letter word such as "adb^2c^2" multiplies letter by letter, the
// exponent binding to the letter it follows. Which atoms are admissible
// depends on the target algebra: letters for the coordinate algebra of SL_2,
// x[i]/alpha[p] for a quantum torus, neither for plain scalars.

#include <qtrace/cyclotomic.hpp>
#include <qtrace/oq.hpp>
#include <qtrace/qtorus.hpp>
#include <qtrace/rational.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtrace {

struct ExprError : std::runtime_error {
    explicit ExprError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct Token {
    enum Kind { End, Int, Name, Sym };
    Kind kind = End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string src) : src_(std::move(src)) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_ = Token{Token::End, "", i_};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = Token{Token::Int, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isalpha(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = Token{Token::Name, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        static const std::string syms = "+-*/^()[]";
        if (syms.find(c) != std::string::npos) {
            tok_ = Token{Token::Sym, std::string(1, c), i_};
            ++i_;
            return;
        }
        throw ExprError("unexpected character '" + std::string(1, c) + "' at position " +
                        std::to_string(i_));
    }

    std::string src_;
    std::size_t i_ = 0;
    Token tok_;
};

template <typename Builder>
class ExprParser {
  public:
    using Value = typename Builder::Value;

    ExprParser(Builder builder, std::string src) : b_(std::move(builder)), lex_(std::move(src)) {}

    Value parse() {
        Value v = parse_expr();
        if (lex_.peek().kind != Token::End)
            throw ExprError("trailing input at position " + std::to_string(lex_.peek().pos));
        return v;
    }

  private:
    bool peek_sym(char c) const {
        return lex_.peek().kind == Token::Sym && lex_.peek().text[0] == c;
    }
    void expect_sym(char c) {
        if (!peek_sym(c))
            throw ExprError(std::string("expected '") + c + "' at position " +
                            std::to_string(lex_.peek().pos));
        lex_.take();
    }

    long long parse_integer() {
        bool neg = false;
        if (peek_sym('-')) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Int)
            throw ExprError("expected an integer at position " + std::to_string(lex_.peek().pos));
        Token t = lex_.take();
        long long v = 0;
        try {
            v = std::stoll(t.text);
        } catch (const std::exception&) {
            throw ExprError("integer literal out of range at position " + std::to_string(t.pos));
        }
        return neg ? -v : v;
    }

    // exponent suffix; 1 when absent
    long long parse_exponent() {
        if (!peek_sym('^')) return 1;
        lex_.take();
        return parse_integer();
    }

    Value parse_expr() {
        bool neg = false;
        if (peek_sym('-')) {
            lex_.take();
            neg = true;
        } else if (peek_sym('+')) {
            lex_.take();
        }
        Value acc = parse_term();
        if (neg) acc = b_.negate(std::move(acc));
        while (peek_sym('+') || peek_sym('-')) {
            bool minus = lex_.take().text[0] == '-';
            Value t = parse_term();
            if (minus) t = b_.negate(std::move(t));
            acc = b_.add(std::move(acc), std::move(t));
        }
        return acc;
    }

    bool at_factor_start() const {
        const Token& t = lex_.peek();
        return t.kind == Token::Int || t.kind == Token::Name ||
               (t.kind == Token::Sym && t.text[0] == '(');
    }

    Value parse_term() {
        Value acc = parse_factor();
        for (;;) {
            if (peek_sym('*')) {
                lex_.take();
                acc = b_.multiply(std::move(acc), parse_factor());
            } else if (at_factor_start()) {
                acc = b_.multiply(std::move(acc), parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Value parse_factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Int) {
            Token num = lex_.take();
            Rational r(num.text);
            if (peek_sym('/')) {
                lex_.take();
                if (lex_.peek().kind != Token::Int)
                    throw ExprError("expected a denominator at position " +
                                    std::to_string(lex_.peek().pos));
                Token den = lex_.take();
                Rational d(den.text);
                if (d == 0) throw ExprError("zero denominator at position " + std::to_string(den.pos));
                r /= d;
            }
            r.canonicalize();
            long long e = parse_exponent();
            return b_.rational(rational_pow(r, static_cast<long>(e)));
        }
        if (t.kind == Token::Name) return parse_name(lex_.take());
        if (peek_sym('(')) {
            Token open = lex_.take();
            Value inner = parse_expr();
            expect_sym(')');
            long long e = parse_exponent();
            if (e < 0)
                throw ExprError("negative exponent on a parenthesized expression at position " +
                                std::to_string(open.pos));
            Value acc = b_.one();
            for (long long i = 0; i < e; ++i) acc = b_.multiply(std::move(acc), inner);
            return acc;
        }
        throw ExprError("expected a value at position " + std::to_string(t.pos));
    }

    Value parse_name(Token name) {
        if (name.text == "q") return b_.zeta(2 * parse_exponent());
        if (name.text == "zeta") return b_.zeta(parse_exponent());
        if (name.text == "x" || name.text == "alpha") {
            if (!peek_sym('['))
                throw ExprError("'" + name.text + "' needs an index in brackets at position " +
                                std::to_string(name.pos));
            lex_.take();
            long long idx = parse_integer();
            expect_sym(']');
            long long e = parse_exponent();
            return name.text == "x" ? b_.x_power(idx, e, name.pos) : b_.alpha_power(idx, e, name.pos);
        }
        for (char c : name.text)
            if (c != 'a' && c != 'b' && c != 'c' && c != 'd')
                throw ExprError("unknown name '" + name.text + "' at position " +
                                std::to_string(name.pos));
        // a word in a..d: the exponent binds to the final letter
        Value acc = b_.one();
        for (std::size_t i = 0; i + 1 < name.text.size(); ++i)
            acc = b_.multiply(std::move(acc), b_.letter(name.text[i], 1, name.pos));
        long long e = parse_exponent();
        return b_.multiply(std::move(acc), b_.letter(name.text.back(), e, name.pos));
    }

    Builder b_;
    Lexer lex_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Builders for the three target algebras.

class ScalarExprBuilder {
  public:
    using Value = Cyclotomic;
    explicit ScalarExprBuilder(RootPtr root) : root_(std::move(root)) {}

    Value one() const { return Cyclotomic(root_, Rational(1)); }
    Value rational(const Rational& r) const { return Cyclotomic(root_, r); }
    Value zeta(long long e) const { return zeta_power(root_, e); }
    Value add(Value a, Value b) const { return a + b; }
    Value multiply(Value a, Value b) const { return a * b; }
    Value negate(Value a) const { return -a; }
    Value letter(char, long long, std::size_t pos) const {
        throw ExprError("letters are not scalars (position " + std::to_string(pos) + ")");
    }
    Value x_power(long long, long long, std::size_t pos) const {
        throw ExprError("x[] is not a scalar (position " + std::to_string(pos) + ")");
    }
    Value alpha_power(long long, long long, std::size_t pos) const {
        throw ExprError("alpha[] is not a scalar (position " + std::to_string(pos) + ")");
    }

  private:
    RootPtr root_;
};

class OqExprBuilder {
  public:
    using Value = OqElement;
    explicit OqExprBuilder(OqPtr ctx) : ctx_(std::move(ctx)) {}

    Value one() const { return ctx_->one(); }
    Value rational(const Rational& r) const { return ctx_->scalar(Cyclotomic(ctx_->root(), r)); }
    Value zeta(long long e) const { return ctx_->scalar(zeta_power(ctx_->root(), e)); }
    Value add(Value a, Value b) const { return a + b; }
    Value multiply(Value a, Value b) const { return a * b; }
    Value negate(Value a) const { return -a; }
    Value letter(char c, long long e, std::size_t pos) const {
        if (e < 0)
            throw ExprError(std::string("generator '") + c +
                            "' cannot carry a negative exponent (position " + std::to_string(pos) +
                            ")");
        return oq_pow(ctx_->gen(c), e);
    }
    Value x_power(long long, long long, std::size_t pos) const {
        throw ExprError("x[] belongs to torus expressions (position " + std::to_string(pos) + ")");
    }
    Value alpha_power(long long, long long, std::size_t pos) const {
        throw ExprError("alpha[] belongs to torus expressions (position " + std::to_string(pos) + ")");
    }

  private:
    OqPtr ctx_;
};

class TorusExprBuilder {
  public:
    using Value = TorusElement;
    explicit TorusExprBuilder(TorusPtr alg) : alg_(std::move(alg)) {}

    Value one() const { return alg_->one(); }
    Value rational(const Rational& r) const { return alg_->scalar(Cyclotomic(alg_->root(), r)); }
    Value zeta(long long e) const { return alg_->scalar(zeta_power(alg_->root(), e)); }
    Value add(Value a, Value b) const { return a + b; }
    Value multiply(Value a, Value b) const { return a * b; }
    Value negate(Value a) const {
        return a * Cyclotomic(alg_->root(), Rational(-1));
    }
    Value letter(char c, long long, std::size_t pos) const {
        throw ExprError(std::string("letter '") + c + "' belongs to bigon expressions (position " +
                        std::to_string(pos) + ")");
    }
    Value x_power(long long idx, long long e, std::size_t pos) const {
        if (idx < 1 || idx > static_cast<long long>(alg_->rank()))
            throw ExprError("x index out of range 1.." + std::to_string(alg_->rank()) +
                            " (position " + std::to_string(pos) + ")");
        ExpVec k(alg_->rank(), 0);
        k[static_cast<std::size_t>(idx - 1)] = e;
        return alg_->monomial(std::move(k));
    }
    Value alpha_power(long long p, long long e, std::size_t pos) const {
        if (p < 0 || p >= static_cast<long long>(alg_->punctures()))
            throw ExprError("alpha index out of range 0.." +
                            std::to_string(alg_->punctures() == 0 ? 0 : alg_->punctures() - 1) +
                            " (position " + std::to_string(pos) + ")");
        if (e < 0)
            throw ExprError("alpha[] cannot carry a negative exponent (position " +
                            std::to_string(pos) + ")");
        ChebPoly acc = ChebPoly::variable_power(alg_->root(), alg_->punctures(),
                                                static_cast<std::size_t>(p), static_cast<unsigned>(e));
        return alg_->monomial(ExpVec(alg_->rank(), 0), acc);
    }

  private:
    TorusPtr alg_;
};

inline Cyclotomic parse_scalar(const RootPtr& root, const std::string& src) {
    return detail::ExprParser<ScalarExprBuilder>(ScalarExprBuilder(root), src).parse();
}

inline OqElement parse_oq_element(const OqPtr& ctx, const std::string& src) {
    return detail::ExprParser<OqExprBuilder>(OqExprBuilder(ctx), src).parse();
}

inline TorusElement parse_torus_element(const TorusPtr& alg, const std::string& src) {
    return detail::ExprParser<TorusExprBuilder>(TorusExprBuilder(alg), src).parse();
}

}  // namespace qtrace
