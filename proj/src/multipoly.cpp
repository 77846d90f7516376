#include "polybridge/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "polybridge/errors.hpp"

namespace polybridge {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

SymbolTablePtr make_table(std::vector<std::string> names) {
    return std::make_shared<const SymbolTable>(std::move(names));
}

SymbolTablePtr merge_tables(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    if (a == b || *a == *b) {
        return a;
    }
    std::vector<std::string> names = a->names();
    names.insert(names.end(), b->names().begin(), b->names().end());
    auto merged = make_table(std::move(names));
    if (*merged == *a) return a;
    if (*merged == *b) return b;
    return merged;
}

namespace {

const SymbolTablePtr& empty_table() {
    static const SymbolTablePtr table = std::make_shared<const SymbolTable>();
    return table;
}

void check_exponent_sum(std::uint64_t sum) {
    if (sum > UINT32_MAX) {
        throw std::overflow_error("monomial exponent overflow");
    }
}

}  // namespace

MultiPoly::MultiPoly() : table_(empty_table()) {}

MultiPoly::MultiPoly(SymbolTablePtr table) : table_(table ? std::move(table) : empty_table()) {}

MultiPoly MultiPoly::constant(SymbolTablePtr table, const mpq_class& value) {
    MultiPoly p(std::move(table));
    p.add_term(Monomial(p.table_->size(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(SymbolTablePtr table, std::string_view name) {
    MultiPoly p(std::move(table));
    auto index = p.table_->index_of(name);
    if (!index) {
        throw std::invalid_argument("symbol '" + std::string(name) + "' is not in the table");
    }
    Monomial m(p.table_->size(), 0);
    m[*index] = 1;
    p.terms_.emplace(std::move(m), mpq_class(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

mpq_class MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& monomial, const mpq_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::uint32_t MultiPoly::degree_in(std::size_t index) const {
    std::uint32_t deg = 0;
    for (const auto& [m, c] : terms_) {
        deg = std::max(deg, m[index]);
    }
    return deg;
}

bool MultiPoly::uses_symbol(std::size_t index) const { return degree_in(index) > 0; }

bool MultiPoly::contains(std::string_view name) const {
    auto index = table_->index_of(name);
    return index && uses_symbol(*index);
}

Monomial MultiPoly::common_monomial() const {
    if (terms_.empty()) {
        return Monomial(table_->size(), 0);
    }
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = std::min(g[i], m[i]);
        }
    }
    return g;
}

void MultiPoly::divide_by_monomial(const Monomial& divisor) {
    if (std::all_of(divisor.begin(), divisor.end(), [](std::uint32_t e) { return e == 0; })) {
        return;
    }
    Terms out;
    for (auto& [m, c] : terms_) {
        Monomial q = m;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] < divisor[i]) {
                throw std::invalid_argument("divide_by_monomial: inexact division");
            }
            q[i] -= divisor[i];
        }
        // Subtracting one vector from every key keeps the lex order.
        out.emplace_hint(out.end(), std::move(q), std::move(c));
    }
    terms_ = std::move(out);
}

MultiPoly MultiPoly::lifted(const SymbolTablePtr& superset) const {
    if (superset == table_) {
        return *this;
    }
    std::vector<std::size_t> where;
    where.reserve(table_->size());
    for (const auto& name : table_->names()) {
        auto index = superset->index_of(name);
        if (!index) {
            throw std::invalid_argument("lifted: '" + name + "' missing from target table");
        }
        where.push_back(*index);
    }
    MultiPoly out(superset);
    for (const auto& [m, c] : terms_) {
        Monomial lifted_m(superset->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            lifted_m[where[i]] = m[i];
        }
        // Index remapping is monotone, so lex order is preserved.
        out.terms_.emplace_hint(out.terms_.end(), std::move(lifted_m), c);
    }
    return out;
}

MultiPoly MultiPoly::compacted() const {
    std::vector<std::size_t> used;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < table_->size(); ++i) {
        if (uses_symbol(i)) {
            used.push_back(i);
            names.push_back(table_->names()[i]);
        }
    }
    if (used.size() == table_->size()) {
        return *this;
    }
    MultiPoly out(names.empty() ? empty_table() : make_table(std::move(names)));
    for (const auto& [m, c] : terms_) {
        Monomial small(used.size());
        for (std::size_t i = 0; i < used.size(); ++i) {
            small[i] = m[used[i]];
        }
        out.terms_.emplace_hint(out.terms_.end(), std::move(small), c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    auto table = merge_tables(table_, other.table_);
    if (table != table_) {
        *this = lifted(table);
    }
    if (&other == this) {
        return scale(2);
    }
    if (other.table_ == table) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
    } else {
        MultiPoly rhs = other.lifted(table);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    MultiPoly negated = -other;
    return *this += negated;
}

MultiPoly& MultiPoly::scale(const mpq_class& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= factor;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto table = merge_tables(a.table_, b.table_);
    if (a.table_ != table || b.table_ != table) {
        return a.lifted(table) * b.lifted(table);
    }
    MultiPoly out(table);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    const std::size_t n = table->size();
    Monomial m(n);
    mpq_class c;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = std::uint64_t{ma[i]} + mb[i];
                check_exponent_sum(s);
                m[i] = static_cast<std::uint32_t>(s);
            }
            c = ca * cb;
            out.add_term(m, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
    MultiPoly result = constant(table_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

mpq_class MultiPoly::evaluate(const Assignment& point) const {
    std::vector<mpq_class> values(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i) {
        if (!uses_symbol(i)) continue;
        const auto& name = table_->names()[i];
        auto it = point.find(name);
        if (it == point.end()) {
            throw AlgebraError(AlgebraErrorKind::UnboundSymbol, "symbol '" + name + "' has no value");
        }
        values[i] = it->second;
    }
    mpq_class total = 0;
    mpq_class term;
    mpq_class power;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), values[i].get_num_mpz_t(), m[i]);
            mpz_pow_ui(power.get_den_mpz_t(), values[i].get_den_mpz_t(), m[i]);
            term *= power;
        }
        total += term;
    }
    return total;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.table_ == b.table_ || *a.table_ == *b.table_) {
        return a.terms_ == b.terms_;
    }
    MultiPoly ca = a.compacted();
    MultiPoly cb = b.compacted();
    return *ca.table_ == *cb.table_ && ca.terms_ == cb.terms_;
}

std::vector<mpq_class> to_dense(const MultiPoly& p, std::size_t index) {
    std::vector<mpq_class> coeffs(p.is_zero() ? 0 : p.degree_in(index) + 1);
    for (const auto& [m, c] : p.terms()) {
        coeffs[m[index]] += c;
    }
    return coeffs;
}

MultiPoly from_dense(const SymbolTablePtr& table, std::size_t index,
                     const std::vector<mpq_class>& coeffs) {
    MultiPoly p(table);
    Monomial m(table->size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        m[index] = static_cast<std::uint32_t>(i);
        p.add_term(m, coeffs[i]);
    }
    return p;
}

}  // namespace polybridge
