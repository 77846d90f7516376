#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace polybridge {

/// Half-open byte range [begin, end) into the source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

struct ExprNode;

/// Immutable parse-level expression tree.
///
/// Nodes are shared between copies; an Expr handle is cheap to copy. The
/// optional source span rides on the handle and takes no part in equality.
/// Negation has no node of its own: `-e` is Product(-1, e).
class Expr {
public:
    struct IntegerLit {
        mpz_class value;
    };
    /// Lowest terms, denominator > 1 (denominator 1 collapses to IntegerLit).
    struct RationalLit {
        mpq_class value;
    };
    struct SymbolRef {
        std::string name;
    };
    /// Two or more terms.
    struct Sum {
        std::vector<Expr> terms;
    };
    /// Two or more factors.
    struct Product {
        std::vector<Expr> factors;
    };
    struct Power;
    struct Quotient;

    static Expr integer(mpz_class value);
    static Expr integer(long value) { return integer(mpz_class(value)); }
    static Expr rational(mpq_class value);
    static Expr symbol(std::string name);
    /// A single-element sequence collapses to that element. Empty throws.
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr power(Expr base, Expr exponent);
    static Expr quotient(Expr numerator, Expr denominator);
    static Expr negate(Expr operand);

    using Node = std::variant<IntegerLit, RationalLit, SymbolRef, Sum, Product, Power, Quotient>;

    const Node& node() const;

    template <typename T>
    const T* as() const;
    template <typename T>
    bool is() const;

    const std::optional<Span>& span() const { return span_; }
    Expr with_span(Span span) const;

    /// Structural equality; spans are ignored.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const ExprNode> node_;
    std::optional<Span> span_;
};

struct Expr::Power {
    Expr base;
    Expr exponent;
};

struct Expr::Quotient {
    Expr numerator;
    Expr denominator;
};

struct ExprNode {
    Expr::Node value;
};

template <typename T>
const T* Expr::as() const {
    return std::get_if<T>(&node());
}

template <typename T>
bool Expr::is() const {
    return std::holds_alternative<T>(node());
}

/// Head-bracket rendering, e.g. `Quotient[Product[a, b], Sum[t, Product[-1, u]]]`.
/// Intended for diagnostics and test failure messages.
std::string full_form(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Every distinct symbol name occurring in `e`, sorted.
std::vector<std::string> symbols_of(const Expr& e);

}  // namespace polybridge
