#include "polybridge/algebra.hpp"

#include <cstdlib>
#include <utility>

#include "polybridge/errors.hpp"

namespace polybridge {

namespace {

/// Working fraction over one table fixed for the whole normalization.
struct Fraction {
    MultiPoly num;
    MultiPoly den;
};

class Normalizer {
public:
    explicit Normalizer(SymbolTablePtr table) : table_(std::move(table)) {}

    Fraction run(const Expr& e) {
        return std::visit([&](const auto& n) { return visit(e, n); }, e.node());
    }

private:
    Fraction constant(const mpq_class& v) const {
        return {MultiPoly::constant(table_, v), MultiPoly::constant(table_, 1)};
    }

    static Fraction reduced(MultiPoly num, MultiPoly den) {
        reduce_fraction(num, den);
        return {std::move(num), std::move(den)};
    }

    static Fraction add(const Fraction& a, const Fraction& b) {
        if (a.den == b.den) {
            return reduced(a.num + b.num, a.den);
        }
        return reduced(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    static Fraction multiply(const Fraction& a, const Fraction& b) {
        return reduced(a.num * b.num, a.den * b.den);
    }

    Fraction visit(const Expr&, const Expr::IntegerLit& n) const { return constant(mpq_class(n.value)); }
    Fraction visit(const Expr&, const Expr::RationalLit& n) const { return constant(n.value); }

    Fraction visit(const Expr&, const Expr::SymbolRef& n) const {
        return {MultiPoly::variable(table_, n.name), MultiPoly::constant(table_, 1)};
    }

    Fraction visit(const Expr&, const Expr::Sum& n) {
        Fraction acc = run(n.terms.front());
        for (std::size_t i = 1; i < n.terms.size(); ++i) {
            acc = add(acc, run(n.terms[i]));
        }
        return acc;
    }

    Fraction visit(const Expr&, const Expr::Product& n) {
        Fraction acc = run(n.factors.front());
        for (std::size_t i = 1; i < n.factors.size(); ++i) {
            acc = multiply(acc, run(n.factors[i]));
        }
        return acc;
    }

    Fraction visit(const Expr& self, const Expr::Power& n) {
        long exponent = integer_exponent(n.exponent);
        Fraction base = run(n.base);
        if (exponent < 0) {
            if (base.num.is_zero()) {
                throw AlgebraError(AlgebraErrorKind::ZeroDenominator,
                                   "zero raised to a negative power", self.span());
            }
            std::swap(base.num, base.den);
            exponent = -exponent;
        }
        auto e = static_cast<std::uint32_t>(exponent);
        return reduced(base.num.pow(e), base.den.pow(e));
    }

    Fraction visit(const Expr&, const Expr::Quotient& n) {
        Fraction top = run(n.numerator);
        Fraction bottom = run(n.denominator);
        if (bottom.num.is_zero()) {
            throw AlgebraError(AlgebraErrorKind::ZeroDenominator, "denominator is identically zero",
                               n.denominator.span());
        }
        return reduced(top.num * bottom.den, top.den * bottom.num);
    }

    long integer_exponent(const Expr& exponent) {
        Fraction f = run(exponent);
        if (!f.num.is_constant() || !f.den.is_constant()) {
            throw AlgebraError(AlgebraErrorKind::SymbolicExponent,
                               "exponent '" + full_form(exponent) + "' is not a constant",
                               exponent.span());
        }
        mpq_class value = f.num.constant_value() / f.den.constant_value();
        if (value.get_den() != 1) {
            throw AlgebraError(AlgebraErrorKind::SymbolicExponent,
                               "exponent " + value.get_str() + " is not an integer", exponent.span());
        }
        const mpz_class& z = value.get_num();
        if (abs(z) > kMaxExponent) {
            throw AlgebraError(AlgebraErrorKind::SymbolicExponent,
                               "exponent " + z.get_str() + " is out of range", exponent.span());
        }
        return z.get_si();
    }

    SymbolTablePtr table_;
};

std::size_t main_var_index_checked(const RatFunc& r, std::string_view var, std::optional<std::size_t>& index) {
    index = r.table()->index_of(var);
    if (!index) {
        return 0;
    }
    if (r.denominator().uses_symbol(*index)) {
        throw AlgebraError(AlgebraErrorKind::NotPolynomialInVar,
                           "'" + std::string(var) + "' occurs in the denominator");
    }
    return r.numerator().degree_in(*index);
}

// Dense univariate arithmetic over Q, index = power.

void trim(std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::pair<std::vector<mpq_class>, std::vector<mpq_class>> divmod(std::vector<mpq_class> a,
                                                                 const std::vector<mpq_class>& b) {
    trim(a);
    std::vector<mpq_class> q;
    if (a.size() < b.size()) {
        return {q, a};
    }
    q.assign(a.size() - b.size() + 1, 0);
    const mpq_class& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpq_class factor = a.back() / lead;
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= factor * b[i];
        }
        trim(a);
    }
    return {q, a};
}

std::vector<mpq_class> gcd(std::vector<mpq_class> a, std::vector<mpq_class> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

RatFunc normalize(const Expr& e) {
    auto table = make_table(symbols_of(e));
    Fraction f = Normalizer(table).run(e);
    return RatFunc::make(std::move(f.num), std::move(f.den));
}

std::size_t degree_in(const RatFunc& r, std::string_view var) {
    std::optional<std::size_t> index;
    return main_var_index_checked(r, var, index);
}

std::size_t degree_in(const Expr& e, std::string_view var) { return degree_in(normalize(e), var); }

MainVarPoly collect_main_var(const RatFunc& r, std::string_view var) {
    MainVarPoly out;
    out.main_var = std::string(var);
    std::optional<std::size_t> index;
    out.degree = main_var_index_checked(r, var, index);
    if (!index) {
        out.coeffs.push_back(r);
        return out;
    }
    std::vector<MultiPoly> buckets(out.degree + 1, MultiPoly(r.table()));
    for (const auto& [m, c] : r.numerator().terms()) {
        Monomial stripped = m;
        stripped[*index] = 0;
        buckets[m[*index]].add_term(stripped, c);
    }
    out.coeffs.reserve(buckets.size());
    for (auto& bucket : buckets) {
        out.coeffs.push_back(RatFunc::make(std::move(bucket), r.denominator()));
    }
    return out;
}

MainVarPoly collect_main_var(const Expr& e, std::string_view var) {
    return collect_main_var(normalize(e), var);
}

RatFunc coefficient_of(const RatFunc& r, std::string_view var, std::size_t k) {
    MainVarPoly p = collect_main_var(r, var);
    if (k > p.degree) {
        return RatFunc();
    }
    return p.coeffs[k];
}

RatFunc coefficient_of(const Expr& e, std::string_view var, std::size_t k) {
    return coefficient_of(normalize(e), var, k);
}

RatFunc reconstruct(const MainVarPoly& p) {
    RatFunc total;
    const RatFunc x = RatFunc::symbol(p.main_var);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        total = total + p.coeffs[k] * x.pow(static_cast<long>(k));
    }
    return total;
}

Expr substitute(const Expr& e, const RenameMap& rules) {
    if (rules.empty()) {
        return e;
    }
    auto keep_span = [&e](Expr out) { return e.span() ? out.with_span(*e.span()) : out; };
    auto map_all = [&rules](const std::vector<Expr>& items, bool& changed) {
        std::vector<Expr> out;
        out.reserve(items.size());
        for (const auto& item : items) {
            out.push_back(substitute(item, rules));
            changed = changed || !(out.back() == item);
        }
        return out;
    };
    return std::visit(
        [&](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::SymbolRef>) {
                auto it = rules.find(n.name);
                return it == rules.end() ? e : keep_span(it->second);
            } else if constexpr (std::is_same_v<T, Expr::Sum>) {
                bool changed = false;
                auto terms = map_all(n.terms, changed);
                return changed ? keep_span(Expr::sum(std::move(terms))) : e;
            } else if constexpr (std::is_same_v<T, Expr::Product>) {
                bool changed = false;
                auto factors = map_all(n.factors, changed);
                return changed ? keep_span(Expr::product(std::move(factors))) : e;
            } else if constexpr (std::is_same_v<T, Expr::Power>) {
                Expr base = substitute(n.base, rules);
                Expr exponent = substitute(n.exponent, rules);
                if (base == n.base && exponent == n.exponent) return e;
                return keep_span(Expr::power(std::move(base), std::move(exponent)));
            } else if constexpr (std::is_same_v<T, Expr::Quotient>) {
                Expr num = substitute(n.numerator, rules);
                Expr den = substitute(n.denominator, rules);
                if (num == n.numerator && den == n.denominator) return e;
                return keep_span(Expr::quotient(std::move(num), std::move(den)));
            } else {
                return e;
            }
        },
        e.node());
}

RatFunc simplify(const RatFunc& r, SimplifyLevel level) {
    if (level == SimplifyLevel::Canonical || r.is_zero() || r.denominator().is_constant()) {
        return r;
    }
    // Canonical tables hold only occurring symbols, so size 1 means both
    // halves are univariate in the same symbol.
    if (r.table()->size() != 1) {
        return r;
    }
    auto num = to_dense(r.numerator(), 0);
    auto den = to_dense(r.denominator(), 0);
    auto g = gcd(num, den);
    if (g.size() <= 1) {
        return r;
    }
    auto reduced_num = divmod(num, g).first;
    auto reduced_den = divmod(den, g).first;
    return RatFunc::make(from_dense(r.table(), 0, reduced_num), from_dense(r.table(), 0, reduced_den));
}

mpq_class eval_at(const RatFunc& r, const Assignment& point) { return r.evaluate(point); }

mpq_class eval_at(const Expr& e, const Assignment& point) {
    return std::visit(
        [&](const auto& n) -> mpq_class {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::IntegerLit>) {
                return mpq_class(n.value);
            } else if constexpr (std::is_same_v<T, Expr::RationalLit>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, Expr::SymbolRef>) {
                auto it = point.find(n.name);
                if (it == point.end()) {
                    throw AlgebraError(AlgebraErrorKind::UnboundSymbol,
                                       "symbol '" + n.name + "' has no value", e.span());
                }
                return it->second;
            } else if constexpr (std::is_same_v<T, Expr::Sum>) {
                mpq_class total = 0;
                for (const auto& t : n.terms) total += eval_at(t, point);
                return total;
            } else if constexpr (std::is_same_v<T, Expr::Product>) {
                mpq_class total = 1;
                for (const auto& f : n.factors) total *= eval_at(f, point);
                return total;
            } else if constexpr (std::is_same_v<T, Expr::Power>) {
                mpq_class exponent = eval_at(n.exponent, point);
                if (exponent.get_den() != 1 || abs(exponent.get_num()) > kMaxExponent) {
                    throw AlgebraError(AlgebraErrorKind::SymbolicExponent,
                                       "exponent evaluates to " + exponent.get_str(), n.exponent.span());
                }
                long k = exponent.get_num().get_si();
                mpq_class base = eval_at(n.base, point);
                if (k < 0) {
                    if (base == 0) {
                        throw AlgebraError(AlgebraErrorKind::DivisionByZeroAtPoint,
                                           "zero raised to a negative power", e.span());
                    }
                    base = 1 / base;
                    k = -k;
                }
                mpq_class result;
                mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
                mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
                return result;
            } else {
                mpq_class den = eval_at(n.denominator, point);
                if (den == 0) {
                    throw AlgebraError(AlgebraErrorKind::DivisionByZeroAtPoint,
                                       "divisor vanishes at the evaluation point", n.denominator.span());
                }
                return eval_at(n.numerator, point) / den;
            }
        },
        e.node());
}

}  // namespace polybridge
