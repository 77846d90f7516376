#include "polybridge/ratfunc.hpp"

#include <ostream>

#include "polybridge/errors.hpp"

namespace polybridge {

void reduce_fraction(MultiPoly& num, MultiPoly& den) {
    if (num.is_zero()) {
        num = MultiPoly(num.table());
        den = MultiPoly::constant(num.table(), 1);
        return;
    }

    // Clear coefficient denominators and divide out the integer content.
    mpz_class lcm_den = 1;
    mpz_class gcd_num = 0;
    for (const MultiPoly* p : {&num, &den}) {
        for (const auto& [m, c] : p->terms()) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
        }
    }
    mpq_class factor(lcm_den, gcd_num);
    factor.canonicalize();
    if (den.leading_term().second < 0) {
        factor = -factor;
    }
    if (factor != 1) {
        num.scale(factor);
        den.scale(factor);
    }

    Monomial common = num.common_monomial();
    const Monomial den_common = den.common_monomial();
    bool any = false;
    for (std::size_t i = 0; i < common.size(); ++i) {
        common[i] = std::min(common[i], den_common[i]);
        any = any || common[i] != 0;
    }
    if (any) {
        num.divide_by_monomial(common);
        den.divide_by_monomial(common);
    }
}

RatFunc::RatFunc() : num_(), den_(MultiPoly::constant({}, 1)) {}

RatFunc RatFunc::make(MultiPoly numerator, MultiPoly denominator) {
    if (denominator.is_zero()) {
        throw AlgebraError(AlgebraErrorKind::ZeroDenominator, "denominator is zero");
    }
    auto table = merge_tables(numerator.table(), denominator.table());
    numerator = numerator.lifted(table);
    denominator = denominator.lifted(table);
    reduce_fraction(numerator, denominator);

    // Compact onto the symbols used by either half.
    std::vector<std::string> used;
    for (std::size_t i = 0; i < table->size(); ++i) {
        if (numerator.uses_symbol(i) || denominator.uses_symbol(i)) {
            used.push_back(table->names()[i]);
        }
    }
    if (used.size() != table->size()) {
        MultiPoly cn = numerator.compacted();
        MultiPoly cd = denominator.compacted();
        auto compact = used.empty() ? MultiPoly().table() : make_table(std::move(used));
        numerator = cn.lifted(compact);
        denominator = cd.lifted(compact);
    }
    return RatFunc(std::move(numerator), std::move(denominator));
}

RatFunc RatFunc::constant(const mpq_class& value) {
    return make(MultiPoly::constant({}, value), MultiPoly::constant({}, 1));
}

RatFunc RatFunc::symbol(std::string_view name) {
    auto table = make_table({std::string(name)});
    return make(MultiPoly::variable(table, name), MultiPoly::constant(table, 1));
}

mpq_class RatFunc::evaluate(const Assignment& point) const {
    mpq_class d = den_.evaluate(point);
    if (d == 0) {
        throw AlgebraError(AlgebraErrorKind::DivisionByZeroAtPoint,
                           "denominator vanishes at the evaluation point");
    }
    return num_.evaluate(point) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) {
        return RatFunc::make(a.num_ + b.num_, a.den_);
    }
    return RatFunc::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::make(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) {
        throw AlgebraError(AlgebraErrorKind::ZeroDenominator, "division by zero");
    }
    return RatFunc::make(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::pow(long exponent) const {
    if (exponent >= 0) {
        auto e = static_cast<std::uint32_t>(exponent);
        return make(num_.pow(e), den_.pow(e));
    }
    if (is_zero()) {
        throw AlgebraError(AlgebraErrorKind::ZeroDenominator, "zero raised to a negative power");
    }
    auto e = static_cast<std::uint32_t>(-exponent);
    return make(den_.pow(e), num_.pow(e));
}

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

namespace {

void write_poly(std::ostream& os, const MultiPoly& p) {
    if (p.is_zero()) {
        os << '0';
        return;
    }
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << '*' << p.table()->names()[i];
            if (it->first[i] != 1) os << '^' << it->first[i];
        }
    }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const RatFunc& r) {
    os << '(';
    write_poly(os, r.numerator());
    os << ")/(";
    write_poly(os, r.denominator());
    return os << ')';
}

}  // namespace polybridge
