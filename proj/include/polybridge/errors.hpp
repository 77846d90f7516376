#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "polybridge/expr.hpp"

namespace polybridge {

enum class SourceErrorKind { LexError, ParseError };

/// Lexing or parsing failure. The span always lies within the input.
class SourceError : public std::runtime_error {
public:
    SourceError(SourceErrorKind kind, Span span, const std::string& message)
        : std::runtime_error(message), kind_(kind), span_(span) {}

    SourceErrorKind kind() const { return kind_; }
    Span span() const { return span_; }

private:
    SourceErrorKind kind_;
    Span span_;
};

enum class AlgebraErrorKind {
    SymbolicExponent,
    ZeroDenominator,
    NotPolynomialInVar,
    UnboundSymbol,
    DivisionByZeroAtPoint,
};

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(AlgebraErrorKind kind, const std::string& message, std::optional<Span> span = {})
        : std::runtime_error(message), kind_(kind), span_(span) {}

    AlgebraErrorKind kind() const { return kind_; }
    /// Source span of the offending subexpression, when it came from the parser.
    const std::optional<Span>& span() const { return span_; }

private:
    AlgebraErrorKind kind_;
    std::optional<Span> span_;
};

enum class RenameErrorKind { Collision, InvalidSpec };

class RenameError : public std::runtime_error {
public:
    RenameError(RenameErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    RenameErrorKind kind() const { return kind_; }

private:
    RenameErrorKind kind_;
};

}  // namespace polybridge
