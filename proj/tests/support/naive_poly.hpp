#pragma once

// Test-only polynomial arithmetic keyed by symbol names. Deliberately shares
// nothing with MultiPoly so it can serve as an independent expansion oracle.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polybridge/expr.hpp"
#include "polybridge/ratfunc.hpp"

namespace testsupport {

using NaiveMonomial = std::map<std::string, int>;  // no zero exponents stored

struct NaivePoly {
    std::map<NaiveMonomial, mpq_class> terms;

    static NaivePoly constant(const mpq_class& c) {
        NaivePoly p;
        if (c != 0) p.terms[{}] = c;
        return p;
    }
    static NaivePoly symbol(const std::string& name) {
        NaivePoly p;
        p.terms[{{name, 1}}] = 1;
        return p;
    }

    void add(const NaiveMonomial& m, const mpq_class& c) {
        mpq_class& slot = terms[m];
        slot += c;
        if (slot == 0) terms.erase(m);
    }

    friend NaivePoly operator+(NaivePoly a, const NaivePoly& b) {
        for (const auto& [m, c] : b.terms) a.add(m, c);
        return a;
    }
    friend NaivePoly operator-(NaivePoly a, const NaivePoly& b) {
        for (const auto& [m, c] : b.terms) a.add(m, -c);
        return a;
    }
    friend NaivePoly operator*(const NaivePoly& a, const NaivePoly& b) {
        NaivePoly out;
        for (const auto& [ma, ca] : a.terms) {
            for (const auto& [mb, cb] : b.terms) {
                NaiveMonomial m = ma;
                for (const auto& [s, e] : mb) m[s] += e;
                out.add(m, ca * cb);
            }
        }
        return out;
    }

    int max_exponent(const std::string& name) const {
        int best = 0;
        for (const auto& [m, c] : terms) {
            auto it = m.find(name);
            if (it != m.end()) best = std::max(best, it->second);
        }
        return best;
    }

    bool operator==(const NaivePoly&) const = default;
};

/// Expands a division-free Expr with nonnegative integer exponents.
inline NaivePoly expand(const polybridge::Expr& e) {
    using polybridge::Expr;
    if (auto* n = e.as<Expr::IntegerLit>()) return NaivePoly::constant(mpq_class(n->value));
    if (auto* n = e.as<Expr::RationalLit>()) return NaivePoly::constant(n->value);
    if (auto* n = e.as<Expr::SymbolRef>()) return NaivePoly::symbol(n->name);
    if (auto* n = e.as<Expr::Sum>()) {
        NaivePoly acc;
        for (const auto& t : n->terms) acc = acc + expand(t);
        return acc;
    }
    if (auto* n = e.as<Expr::Product>()) {
        NaivePoly acc = NaivePoly::constant(1);
        for (const auto& f : n->factors) acc = acc * expand(f);
        return acc;
    }
    if (auto* n = e.as<Expr::Power>()) {
        const auto* k = n->exponent.as<Expr::IntegerLit>();
        if (!k || k->value < 0) throw std::invalid_argument("expand: unsupported exponent");
        NaivePoly base = expand(n->base);
        NaivePoly acc = NaivePoly::constant(1);
        for (long i = 0; i < k->value.get_si(); ++i) acc = acc * base;
        return acc;
    }
    throw std::invalid_argument("expand: quotients are not supported");
}

/// Reads a MultiPoly into the naive representation.
inline NaivePoly from_multipoly(const polybridge::MultiPoly& p) {
    NaivePoly out;
    for (const auto& [m, c] : p.terms()) {
        NaiveMonomial nm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) nm[p.table()->names()[i]] = static_cast<int>(m[i]);
        }
        out.add(nm, c);
    }
    return out;
}

}  // namespace testsupport
