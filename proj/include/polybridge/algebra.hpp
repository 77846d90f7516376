#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polybridge/expr.hpp"
#include "polybridge/ratfunc.hpp"

namespace polybridge {

/// Largest |exponent| accepted in a Power node.
inline constexpr long kMaxExponent = 1 << 16;

/// P(var) = sum_i coeffs[i] * var^i with var-free rational coefficients.
/// The zero polynomial has degree 0 and a single zero coefficient.
struct MainVarPoly {
    std::string main_var;
    std::size_t degree = 0;
    std::vector<RatFunc> coeffs;

    const RatFunc& leading() const { return coeffs[degree]; }
};

/// Simultaneous symbol -> expression substitution rules.
using RenameMap = std::map<std::string, Expr, std::less<>>;

/// Canonical rational function of `e`.
///
/// Throws AlgebraError(SymbolicExponent) when an exponent does not reduce to
/// an integer constant, and AlgebraError(ZeroDenominator) when a divisor is
/// identically zero. Both carry the source span of the culprit if known.
RatFunc normalize(const Expr& e);

/// Highest power of `var` in the numerator; 0 for constants and for zero.
/// Throws AlgebraError(NotPolynomialInVar) if `var` occurs in the denominator.
std::size_t degree_in(const Expr& e, std::string_view var);
std::size_t degree_in(const RatFunc& r, std::string_view var);

/// Factor multiplying var^k. Zero for k beyond the degree.
RatFunc coefficient_of(const Expr& e, std::string_view var, std::size_t k);
RatFunc coefficient_of(const RatFunc& r, std::string_view var, std::size_t k);

MainVarPoly collect_main_var(const Expr& e, std::string_view var);
MainVarPoly collect_main_var(const RatFunc& r, std::string_view var);

/// sum_k coeffs[k] * var^k as a single rational function.
RatFunc reconstruct(const MainVarPoly& p);

/// One-pass simultaneous replacement of SymbolRef nodes named in `rules`.
Expr substitute(const Expr& e, const RenameMap& rules);

enum class SimplifyLevel { Canonical = 0, UnivariateGcd = 1 };

/// Canonical is the identity. UnivariateGcd also cancels the gcd of numerator
/// and denominator when both are polynomials in the same single symbol.
RatFunc simplify(const RatFunc& r, SimplifyLevel level);

/// Exact value at a point. Throws AlgebraError(UnboundSymbol) for symbols not
/// in `point` and AlgebraError(DivisionByZeroAtPoint) for vanishing divisors.
mpq_class eval_at(const Expr& e, const Assignment& point);
mpq_class eval_at(const RatFunc& r, const Assignment& point);

}  // namespace polybridge
