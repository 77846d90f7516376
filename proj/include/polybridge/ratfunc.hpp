#pragma once

#include <iosfwd>

#include "polybridge/multipoly.hpp"

namespace polybridge {

/// Exact rational function numerator/denominator in canonical form:
///  - integer coefficients whose combined content (num and den together) is 1,
///  - positive leading denominator coefficient,
///  - no monomial dividing every term of both numerator and denominator,
///  - both polynomials share one table holding exactly the symbols that occur.
///
/// Common non-monomial factors are not cancelled, so equal functions can have
/// different representations. Use ratfunc_equal for semantic equality; `==`
/// compares representations.
class RatFunc {
public:
    /// The zero function 0/1.
    RatFunc();

    /// Canonicalizes num/den. Throws AlgebraError(ZeroDenominator) if den is 0.
    static RatFunc make(MultiPoly numerator, MultiPoly denominator);
    static RatFunc constant(const mpq_class& value);
    static RatFunc symbol(std::string_view name);
    static RatFunc from_poly(MultiPoly p) { return make(std::move(p), MultiPoly::constant({}, 1)); }

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }
    const SymbolTablePtr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool contains(std::string_view name) const { return table()->index_of(name).has_value(); }

    /// Throws AlgebraError(UnboundSymbol / DivisionByZeroAtPoint).
    mpq_class evaluate(const Assignment& point) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws AlgebraError(ZeroDenominator) when b is zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    /// Negative exponents invert; zero base with negative exponent throws.
    RatFunc pow(long exponent) const;

    /// Representation equality.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    MultiPoly num_;
    MultiPoly den_;
};

/// Brings num/den into canonical form without compacting the table.
/// The caller guarantees den is nonzero and both share one table.
void reduce_fraction(MultiPoly& num, MultiPoly& den);

/// a.num * b.den == b.num * a.den, exact.
bool ratfunc_equal(const RatFunc& a, const RatFunc& b);

/// Debug rendering `(num)/(den)`, with terms listed as `coeff*[exponents]`.
std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace polybridge
