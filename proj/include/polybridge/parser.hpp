#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polybridge/errors.hpp"
#include "polybridge/expr.hpp"

namespace polybridge {

enum class TokenKind {
    Integer,
    Decimal,
    Identifier,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    /// Identifier tokens hold the resolved name (escapes such as \[Beta]
    /// become the UTF-8 letter); other tokens hold the source slice.
    std::string text;
    Span span;
};

/// Splits `input` into tokens, always ending with an End token whose span is
/// empty and sits at the end of the input. Throws SourceError(LexError).
std::vector<Token> tokenize(std::string_view input);

/// Parses one expression. Throws SourceError on lex or parse failure.
///
/// Precedence, tightest first: `^` (right-assoc, exponent must be a primary),
/// unary `-`/`+`, then `*`, `/` and juxtaposition, then binary `+`, `-`.
Expr parse(std::string_view input);

/// True if `text` is exactly one identifier in the lexer's grammar, in its
/// resolved (escape-free) form.
bool is_identifier(std::string_view text);
/// Letter followed by letters, digits or underscores, all ASCII.
bool is_ascii_identifier(std::string_view text);

struct LineColumn {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// 1-based line and column (in code points) of a byte offset.
LineColumn line_column(std::string_view input, std::size_t offset);

}  // namespace polybridge
