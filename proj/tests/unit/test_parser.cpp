#include <gtest/gtest.h>

#include "polybridge/algebra.hpp"
#include "polybridge/parser.hpp"

using namespace polybridge;

namespace {

std::vector<TokenKind> kinds(std::string_view text) {
    std::vector<TokenKind> out;
    for (const auto& t : tokenize(text)) out.push_back(t.kind);
    return out;
}

SourceError source_error(std::string_view text) {
    try {
        parse(text);
    } catch (const SourceError& err) {
        return err;
    }
    ADD_FAILURE() << "parse succeeded: " << text;
    return SourceError(SourceErrorKind::ParseError, {}, "");
}

Expr sym(const char* n) { return Expr::symbol(n); }
Expr lit(long v) { return Expr::integer(v); }

}  // namespace

TEST(Tokenize, OperatorsAndOperands) {
    using K = TokenKind;
    EXPECT_EQ(kinds("a^2*b^3"),
              (std::vector<K>{K::Identifier, K::Caret, K::Integer, K::Star, K::Identifier, K::Caret, K::Integer,
                              K::End}));
    EXPECT_EQ(kinds("(x-1)/2.5+y"),
              (std::vector<K>{K::LParen, K::Identifier, K::Minus, K::Integer, K::RParen, K::Slash, K::Decimal,
                              K::Plus, K::Identifier, K::End}));
}

TEST(Tokenize, EmptyInputIsJustEnd) {
    auto toks = tokenize("");
    ASSERT_EQ(toks.size(), 1u);
    EXPECT_EQ(toks[0].kind, TokenKind::End);
    EXPECT_EQ(toks[0].span, (Span{0, 0}));
    EXPECT_EQ(tokenize("  \t\n").back().span, (Span{4, 4}));
}

TEST(Tokenize, NamedCharacterEscape) {
    auto toks = tokenize("\\[Beta]*x");
    ASSERT_EQ(toks.size(), 4u);
    EXPECT_EQ(toks[0].kind, TokenKind::Identifier);
    EXPECT_EQ(toks[0].text, "β");
    EXPECT_EQ(toks[0].span, (Span{0, 7}));
    EXPECT_EQ(toks[2].text, "x");
    EXPECT_EQ(tokenize("\\[CapitalOmega]B")[0].text, "ΩB");
}

TEST(Tokenize, GreekIdentifiersWithTails) {
    auto toks = tokenize("γ_b Ω_B Zx c2");
    std::vector<std::string> names;
    for (const auto& t : toks) {
        if (t.kind == TokenKind::Identifier) names.push_back(t.text);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"γ_b", "Ω_B", "Zx", "c2"}));
}

TEST(Tokenize, LexErrors) {
    for (std::string_view bad : {"a[1]", "f{x}", "a,b", "x $ y", "\\[Bogus]", "1.2.3", "x . y"}) {
        try {
            tokenize(bad);
            ADD_FAILURE() << bad;
        } catch (const SourceError& err) {
            EXPECT_EQ(err.kind(), SourceErrorKind::LexError) << bad;
            EXPECT_LE(err.span().end, bad.size()) << bad;
        }
    }
}

TEST(Tokenize, LexErrorPointsAtCharacter) {
    try {
        tokenize("a+b[2]");
        FAIL();
    } catch (const SourceError& err) {
        EXPECT_EQ(err.span().begin, 3u);
    }
}

TEST(Parse, QuotientStructure) {
    Expr e = parse("a^2 b^3/(c^4 (t-u))");
    Expr num = Expr::product({Expr::power(sym("a"), lit(2)), Expr::power(sym("b"), lit(3))});
    Expr den = Expr::product({Expr::power(sym("c"), lit(4)), Expr::sum({sym("t"), Expr::negate(sym("u"))})});
    EXPECT_EQ(e, Expr::quotient(num, den)) << full_form(e);
}

TEST(Parse, UnaryMinusBindsLooserThanPower) {
    Expr e = parse("-x^2+x");
    EXPECT_EQ(eval_at(e, {{"x", 3}}), -6);
    EXPECT_EQ(eval_at(parse("(-x)^2"), {{"x", 3}}), 9);
    EXPECT_EQ(eval_at(parse("2^3^2"), {}), 512);
}

TEST(Parse, JuxtapositionIsMultiplication) {
    Assignment pt{{"a", 2}, {"b", 3}, {"x", 5}};
    EXPECT_EQ(eval_at(parse("2 a b"), pt), 12);
    EXPECT_EQ(eval_at(parse("a (b + 1)"), pt), 8);
    EXPECT_EQ(eval_at(parse("(a)(b)"), pt), 6);
    EXPECT_EQ(eval_at(parse("2x"), pt), 10);
    EXPECT_EQ(eval_at(parse("a/b x"), pt), mpq_class(10, 3));
    EXPECT_EQ(eval_at(parse("x^2 a"), pt), 50);
}

TEST(Parse, LeftAssociativeDivisionAndSubtraction) {
    EXPECT_EQ(eval_at(parse("8/4/2"), {}), 1);
    EXPECT_EQ(eval_at(parse("8-4-2"), {}), 2);
    EXPECT_EQ(eval_at(parse("a-b+c"), {{"a", 1}, {"b", 2}, {"c", 3}}), 2);
}

TEST(Parse, DecimalsAreExactRationals) {
    Expr e = parse("0.5");
    ASSERT_TRUE(e.is<Expr::RationalLit>());
    EXPECT_EQ(e.as<Expr::RationalLit>()->value, mpq_class(1, 2));
    EXPECT_EQ(eval_at(parse("0.1+0.2"), {}), mpq_class(3, 10));
    EXPECT_EQ(parse("2.0"), lit(2));
}

TEST(Parse, SignedExponentNeedsParentheses) {
    SourceError err = source_error("a^-2");
    EXPECT_EQ(err.kind(), SourceErrorKind::ParseError);
    EXPECT_NE(std::string(err.what()).find("a^(-2)"), std::string::npos);
    EXPECT_EQ(eval_at(parse("a^(-2)"), {{"a", 2}}), mpq_class(1, 4));
}

TEST(Parse, StructuralErrors) {
    EXPECT_EQ(source_error("").kind(), SourceErrorKind::ParseError);
    EXPECT_EQ(source_error("x+").kind(), SourceErrorKind::ParseError);
    EXPECT_EQ(source_error("()").kind(), SourceErrorKind::ParseError);
    EXPECT_EQ(source_error("x)").span(), (Span{1, 2}));
    EXPECT_EQ(source_error("(x+1").span().begin, 0u);
    EXPECT_EQ(source_error("a * * b").span(), (Span{4, 5}));
}

TEST(Parse, SpansCoverTheirSource) {
    const std::string text = "2 a^3 - (b + c)/d";
    Expr e = parse(text);
    EXPECT_EQ(e.span(), (Span{0, text.size()}));
    const auto* sum = e.as<Expr::Sum>();
    ASSERT_NE(sum, nullptr);
    ASSERT_EQ(sum->terms.size(), 2u);
    Span first = sum->terms[0].span().value();
    EXPECT_EQ(text.substr(first.begin, first.end - first.begin), "2 a^3");
}

TEST(Parse, SpansNestAndStayInBounds) {
    const std::string text = "x^2 (a - b)/(c + 3 d) - -y";
    std::function<void(const Expr&, Span)> walk = [&](const Expr& e, Span outer) {
        ASSERT_TRUE(e.span());
        Span s = *e.span();
        ASSERT_LE(s.begin, s.end);
        ASSERT_LE(s.end, text.size());
        ASSERT_GE(s.begin, outer.begin);
        ASSERT_LE(s.end, outer.end);
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::Sum>) {
                    for (const auto& t : node.terms) walk(t, s);
                } else if constexpr (std::is_same_v<T, Expr::Product>) {
                    for (const auto& f : node.factors) walk(f, s);
                } else if constexpr (std::is_same_v<T, Expr::Power>) {
                    walk(node.base, s);
                    walk(node.exponent, s);
                } else if constexpr (std::is_same_v<T, Expr::Quotient>) {
                    walk(node.numerator, s);
                    walk(node.denominator, s);
                }
            },
            e.node());
    };
    walk(parse(text), Span{0, text.size()});
}

TEST(Parse, TrailingWhitespaceAndNewlines) {
    EXPECT_EQ(parse("x + 1\n"), parse("x+1"));
    EXPECT_EQ(parse("x\n+ 1"), parse("x+1"));
}

TEST(Identifier, Classification) {
    EXPECT_TRUE(is_identifier("gamma_b"));
    EXPECT_TRUE(is_identifier("γ_b"));
    EXPECT_FALSE(is_identifier("2x"));
    EXPECT_FALSE(is_identifier("a b"));
    EXPECT_FALSE(is_identifier(""));
    EXPECT_TRUE(is_ascii_identifier("Omega_B"));
    EXPECT_FALSE(is_ascii_identifier("Ω_B"));
    EXPECT_FALSE(is_ascii_identifier("_x"));
}

TEST(LineColumn, CountsCodePoints) {
    EXPECT_EQ(line_column("abc", 0).line, 1u);
    EXPECT_EQ(line_column("abc", 0).column, 1u);
    auto lc = line_column("ab\ncd", 4);
    EXPECT_EQ(lc.line, 2u);
    EXPECT_EQ(lc.column, 2u);
    // β is two bytes but one column.
    EXPECT_EQ(line_column("β+[", 3).column, 3u);
}
