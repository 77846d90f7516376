#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace polybridge {

/// Symbol name -> exact value.
using Assignment = std::map<std::string, mpq_class, std::less<>>;

/// Sorted, duplicate-free list of symbol names. A name's index is its rank.
class SymbolTable {
public:
    SymbolTable() = default;
    /// Sorts and deduplicates.
    explicit SymbolTable(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

SymbolTablePtr make_table(std::vector<std::string> names);
SymbolTablePtr merge_tables(const SymbolTablePtr& a, const SymbolTablePtr& b);

/// Exponent vector, one entry per table symbol. Compared lexicographically,
/// so the first symbol of the table is the most significant.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in ascending pure-lex monomial order; no stored coefficient
/// is zero. Binary operations on polynomials over different tables first lift
/// both onto the merged table.
class MultiPoly {
public:
    using Terms = std::map<Monomial, mpq_class>;

    MultiPoly();
    explicit MultiPoly(SymbolTablePtr table);

    static MultiPoly constant(SymbolTablePtr table, const mpq_class& value);
    /// Throws std::invalid_argument when `name` is not in the table.
    static MultiPoly variable(SymbolTablePtr table, std::string_view name);

    const SymbolTablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; only meaningful when is_constant().
    mpq_class constant_value() const;

    /// Adds `coeff * monomial`, dropping the term if it cancels.
    void add_term(const Monomial& monomial, const mpq_class& coeff);

    /// Greatest term under the monomial order. Precondition: nonzero.
    const Terms::value_type& leading_term() const { return *terms_.rbegin(); }

    /// Largest exponent of the symbol at `index` over all terms (0 if zero).
    std::uint32_t degree_in(std::size_t index) const;
    bool contains(std::string_view name) const;
    /// True when some term has a nonzero exponent for `name`.
    bool uses_symbol(std::size_t index) const;

    /// Componentwise minimum exponent over all terms (all zeros if zero).
    Monomial common_monomial() const;
    /// Exact division by a monomial that divides every term.
    void divide_by_monomial(const Monomial& m);

    /// Same polynomial over a superset table.
    MultiPoly lifted(const SymbolTablePtr& superset) const;
    /// Same polynomial over the table of symbols that actually occur.
    MultiPoly compacted() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& scale(const mpq_class& factor);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly pow(std::uint32_t exponent) const;

    /// Throws AlgebraError(UnboundSymbol) if a used symbol is unassigned.
    mpq_class evaluate(const Assignment& point) const;

    /// Equal as polynomials in named symbols (tables may differ).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    SymbolTablePtr table_;
    Terms terms_;
};

/// Univariate helpers over a polynomial whose only symbol is at `index`.
/// Coefficient i holds the factor of symbol^i.
std::vector<mpq_class> to_dense(const MultiPoly& p, std::size_t index);
MultiPoly from_dense(const SymbolTablePtr& table, std::size_t index,
                     const std::vector<mpq_class>& coeffs);

}  // namespace polybridge
