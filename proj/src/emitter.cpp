#include "polybridge/emitter.hpp"

#include <algorithm>

namespace polybridge {

namespace {

// How a rendered polynomial binds: a lone symbol, power or natural number;
// something multiplicative (products, quotients, leading unary minus); or a
// top-level sum.
enum class Shape { Atom, Product, Sum };

struct Rendered {
    std::string text;
    Shape shape;
};

bool is_unit(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

std::size_t factor_count(const Monomial& m) {
    return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; }));
}

std::string monomial_text(const Monomial& m, const SymbolTable& table) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += table.names()[i];
        if (m[i] != 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out;
}

/// |coeff| * monomial, sign handled by the caller.
std::string term_text(const mpq_class& magnitude, const Monomial& m, const SymbolTable& table) {
    if (is_unit(m)) {
        return magnitude.get_str();
    }
    if (magnitude == 1) {
        return monomial_text(m, table);
    }
    return magnitude.get_str() + "*" + monomial_text(m, table);
}

std::string sum_text(const MultiPoly& p) {
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        out += term_text(abs(c), m, *p.table());
    }
    return out;
}

Rendered render(const MultiPoly& p) {
    if (p.is_zero()) {
        return {"0", Shape::Atom};
    }
    const auto& [lead_m, lead_c] = p.leading_term();
    if (p.term_count() == 1) {
        mpq_class magnitude = abs(lead_c);
        std::string text = term_text(magnitude, lead_m, *p.table());
        bool atom = lead_c > 0 && magnitude.get_den() == 1 &&
                    (is_unit(lead_m) || (magnitude == 1 && factor_count(lead_m) == 1));
        if (lead_c < 0) text.insert(text.begin(), '-');
        return {std::move(text), atom ? Shape::Atom : Shape::Product};
    }
    Monomial common = p.common_monomial();
    if (is_unit(common)) {
        return {sum_text(p), Shape::Sum};
    }
    MultiPoly inner = p;
    inner.divide_by_monomial(common);
    std::string text;
    if (lead_c < 0) {
        inner = -inner;
        text = "-";
    }
    text += monomial_text(common, *p.table()) + "*(" + sum_text(inner) + ")";
    return {std::move(text), Shape::Product};
}

}  // namespace

std::string emit_expr(const RatFunc& r) {
    Rendered num = render(r.numerator());
    const MultiPoly& den = r.denominator();
    if (den.is_constant() && den.constant_value() == 1) {
        return num.text;
    }
    Rendered bottom = render(den);
    std::string out = num.shape == Shape::Sum ? "(" + num.text + ")" : num.text;
    out += '/';
    out += bottom.shape == Shape::Atom ? bottom.text : "(" + bottom.text + ")";
    return out;
}

std::string emit_coeff_script(const MainVarPoly& p, const EmitConfig& cfg) {
    std::string out;
    for (std::size_t j = 1; j <= p.degree + 1; ++j) {
        out += cfg.array_name + "(" + std::to_string(j) + ")=" + emit_expr(p.coeffs[p.degree + 1 - j]) + ";\n";
    }
    return out;
}

std::string emit_coeff_vector(const MainVarPoly& p, const EmitConfig& cfg) {
    std::string out = cfg.array_name + "=[";
    for (std::size_t k = p.degree + 1; k-- > 0;) {
        out += emit_expr(p.coeffs[k]);
        if (k != 0) out += ", ";
    }
    return out + "];";
}

}  // namespace polybridge
