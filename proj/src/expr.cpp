#include "polybridge/expr.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polybridge {

Expr Expr::integer(mpz_class value) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{IntegerLit{std::move(value)}}));
}

Expr Expr::rational(mpq_class value) {
    value.canonicalize();
    if (value.get_den() == 1) {
        return integer(value.get_num());
    }
    return Expr(std::make_shared<const ExprNode>(ExprNode{RationalLit{std::move(value)}}));
}

Expr Expr::symbol(std::string name) {
    if (name.empty()) {
        throw std::invalid_argument("symbol name must not be empty");
    }
    return Expr(std::make_shared<const ExprNode>(ExprNode{SymbolRef{std::move(name)}}));
}

Expr Expr::sum(std::vector<Expr> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("Sum needs at least one term");
    }
    if (terms.size() == 1) {
        return std::move(terms.front());
    }
    return Expr(std::make_shared<const ExprNode>(ExprNode{Sum{std::move(terms)}}));
}

Expr Expr::product(std::vector<Expr> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("Product needs at least one factor");
    }
    if (factors.size() == 1) {
        return std::move(factors.front());
    }
    return Expr(std::make_shared<const ExprNode>(ExprNode{Product{std::move(factors)}}));
}

Expr Expr::power(Expr base, Expr exponent) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{Power{std::move(base), std::move(exponent)}}));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
    return Expr(std::make_shared<const ExprNode>(
        ExprNode{Quotient{std::move(numerator), std::move(denominator)}}));
}

Expr Expr::negate(Expr operand) {
    return product({integer(-1), std::move(operand)});
}

const Expr::Node& Expr::node() const { return node_->value; }

Expr Expr::with_span(Span span) const {
    Expr copy = *this;
    copy.span_ = span;
    return copy;
}

namespace {

bool sequence_equal(const std::vector<Expr>& a, const std::vector<Expr>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

struct EqualVisitor {
    const Expr::Node& other;

    bool operator()(const Expr::IntegerLit& a) const {
        return std::get<Expr::IntegerLit>(other).value == a.value;
    }
    bool operator()(const Expr::RationalLit& a) const {
        return std::get<Expr::RationalLit>(other).value == a.value;
    }
    bool operator()(const Expr::SymbolRef& a) const {
        return std::get<Expr::SymbolRef>(other).name == a.name;
    }
    bool operator()(const Expr::Sum& a) const {
        return sequence_equal(a.terms, std::get<Expr::Sum>(other).terms);
    }
    bool operator()(const Expr::Product& a) const {
        return sequence_equal(a.factors, std::get<Expr::Product>(other).factors);
    }
    bool operator()(const Expr::Power& a) const {
        const auto& b = std::get<Expr::Power>(other);
        return a.base == b.base && a.exponent == b.exponent;
    }
    bool operator()(const Expr::Quotient& a) const {
        const auto& b = std::get<Expr::Quotient>(other);
        return a.numerator == b.numerator && a.denominator == b.denominator;
    }
};

void write_full_form(std::ostream& os, const Expr& e);

void write_sequence(std::ostream& os, const char* head, const std::vector<Expr>& items) {
    os << head << '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) {
            os << ", ";
        }
        write_full_form(os, items[i]);
    }
    os << ']';
}

void write_full_form(std::ostream& os, const Expr& e) {
    std::visit(
        [&os](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::IntegerLit>) {
                os << n.value.get_str();
            } else if constexpr (std::is_same_v<T, Expr::RationalLit>) {
                os << n.value.get_str();
            } else if constexpr (std::is_same_v<T, Expr::SymbolRef>) {
                os << n.name;
            } else if constexpr (std::is_same_v<T, Expr::Sum>) {
                write_sequence(os, "Sum", n.terms);
            } else if constexpr (std::is_same_v<T, Expr::Product>) {
                write_sequence(os, "Product", n.factors);
            } else if constexpr (std::is_same_v<T, Expr::Power>) {
                os << "Power[";
                write_full_form(os, n.base);
                os << ", ";
                write_full_form(os, n.exponent);
                os << ']';
            } else {
                os << "Quotient[";
                write_full_form(os, n.numerator);
                os << ", ";
                write_full_form(os, n.denominator);
                os << ']';
            }
        },
        e.node());
}

void collect_symbols(const Expr& e, std::set<std::string>& out) {
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::SymbolRef>) {
                out.insert(n.name);
            } else if constexpr (std::is_same_v<T, Expr::Sum>) {
                for (const auto& t : n.terms) collect_symbols(t, out);
            } else if constexpr (std::is_same_v<T, Expr::Product>) {
                for (const auto& f : n.factors) collect_symbols(f, out);
            } else if constexpr (std::is_same_v<T, Expr::Power>) {
                collect_symbols(n.base, out);
                collect_symbols(n.exponent, out);
            } else if constexpr (std::is_same_v<T, Expr::Quotient>) {
                collect_symbols(n.numerator, out);
                collect_symbols(n.denominator, out);
            }
        },
        e.node());
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.node().index() != b.node().index()) {
        return false;
    }
    return std::visit(EqualVisitor{b.node()}, a.node());
}

std::string full_form(const Expr& e) {
    std::ostringstream os;
    write_full_form(os, e);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) {
    write_full_form(os, e);
    return os;
}

std::vector<std::string> symbols_of(const Expr& e) {
    std::set<std::string> names;
    collect_symbols(e, names);
    return {names.begin(), names.end()};
}

}  // namespace polybridge
