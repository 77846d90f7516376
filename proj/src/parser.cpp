#include "polybridge/parser.hpp"

namespace polybridge {

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Expr parse_all() {
        if (peek().kind == TokenKind::End) {
            fail(peek().span, "empty expression");
        }
        Expr e = expression();
        if (peek().kind == TokenKind::RParen) {
            fail(peek().span, "unbalanced ')'");
        }
        if (peek().kind != TokenKind::End) {
            fail(peek().span, std::string("unexpected ") + token_kind_name(peek().kind));
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool at(TokenKind kind) const { return peek().kind == kind; }

    [[noreturn]] void fail(Span span, const std::string& message) const {
        throw SourceError(SourceErrorKind::ParseError, span, message);
    }

    static Span cover(Span a, Span b) { return {a.begin, b.end}; }

    // The -1 factor takes the span of the minus sign.
    static Expr negated(const Token& minus, Expr operand) {
        Span span = cover(minus.span, *operand.span());
        return Expr::product({Expr::integer(-1).with_span(minus.span), std::move(operand)}).with_span(span);
    }

    bool starts_primary() const {
        switch (peek().kind) {
            case TokenKind::Integer:
            case TokenKind::Decimal:
            case TokenKind::Identifier:
            case TokenKind::LParen:
                return true;
            default:
                return false;
        }
    }

    Expr expression() {
        std::vector<Expr> terms{term()};
        Span span = *terms.front().span();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const Token& op = advance();
            Expr rhs = term();
            Span rhs_span = *rhs.span();
            if (op.kind == TokenKind::Minus) {
                rhs = negated(op, std::move(rhs));
            }
            terms.push_back(std::move(rhs));
            span = cover(span, rhs_span);
        }
        return Expr::sum(std::move(terms)).with_span(span);
    }

    Expr term() {
        std::vector<Expr> factors{unary()};
        Span span = *factors.front().span();
        while (true) {
            if (at(TokenKind::Star)) {
                advance();
                factors.push_back(unary());
            } else if (at(TokenKind::Slash)) {
                advance();
                Expr divisor = unary();
                span = cover(span, *divisor.span());
                Expr dividend = Expr::product(std::move(factors)).with_span(span);
                factors = {Expr::quotient(std::move(dividend), std::move(divisor)).with_span(span)};
                continue;
            } else if (starts_primary()) {
                factors.push_back(power());
            } else {
                break;
            }
            span = cover(span, *factors.back().span());
        }
        return Expr::product(std::move(factors)).with_span(span);
    }

    Expr unary() {
        if (at(TokenKind::Minus) || at(TokenKind::Plus)) {
            const Token& op = advance();
            Expr operand = unary();
            Span span = cover(op.span, *operand.span());
            if (op.kind == TokenKind::Plus) {
                return operand.with_span(span);
            }
            return negated(op, std::move(operand));
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (!at(TokenKind::Caret)) {
            return base;
        }
        const Token& caret = advance();
        if (!starts_primary()) {
            if (at(TokenKind::Minus) || at(TokenKind::Plus)) {
                fail(peek().span, "a signed exponent must be parenthesized, e.g. a^(-2)");
            }
            fail(at(TokenKind::End) ? peek().span : caret.span,
                 std::string("'^' needs an exponent, found ") + token_kind_name(peek().kind));
        }
        Expr exponent = power();
        Span span = cover(*base.span(), *exponent.span());
        return Expr::power(std::move(base), std::move(exponent)).with_span(span);
    }

    Expr primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::Integer:
                advance();
                return Expr::integer(mpz_class(tok.text, 10)).with_span(tok.span);
            case TokenKind::Decimal:
                advance();
                return Expr::rational(decimal_value(tok.text)).with_span(tok.span);
            case TokenKind::Identifier:
                advance();
                return Expr::symbol(tok.text).with_span(tok.span);
            case TokenKind::LParen: {
                const Token& open = advance();
                if (at(TokenKind::RParen)) {
                    fail(cover(open.span, peek().span), "empty parentheses");
                }
                Expr inner = expression();
                if (!at(TokenKind::RParen)) {
                    if (at(TokenKind::End)) {
                        fail(open.span, "unbalanced '(': missing ')'");
                    }
                    fail(peek().span, std::string("expected ')', found ") + token_kind_name(peek().kind));
                }
                const Token& close = advance();
                return inner.with_span(cover(open.span, close.span));
            }
            case TokenKind::End:
                fail(tok.span, "expected an operand, found end of input");
            default:
                fail(tok.span, std::string("expected an operand, found ") + token_kind_name(tok.kind));
        }
    }

    static mpq_class decimal_value(const std::string& text) {
        const auto dot = text.find('.');
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
        mpq_class value(mpz_class(digits.empty() ? "0" : digits, 10), scale);
        value.canonicalize();
        return value;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view input) { return Parser(tokenize(input)).parse_all(); }

}  // namespace polybridge
