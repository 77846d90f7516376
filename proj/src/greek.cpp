#include "polybridge/greek.hpp"

#include <array>

namespace polybridge {

namespace {

constexpr std::array<GreekLetter, 24> kAlphabet{{
    {"Alpha", "α", "Α"},   {"Beta", "β", "Β"},    {"Gamma", "γ", "Γ"},   {"Delta", "δ", "Δ"},
    {"Epsilon", "ε", "Ε"}, {"Zeta", "ζ", "Ζ"},    {"Eta", "η", "Η"},     {"Theta", "θ", "Θ"},
    {"Iota", "ι", "Ι"},    {"Kappa", "κ", "Κ"},   {"Lambda", "λ", "Λ"},  {"Mu", "μ", "Μ"},
    {"Nu", "ν", "Ν"},      {"Xi", "ξ", "Ξ"},      {"Omicron", "ο", "Ο"}, {"Pi", "π", "Π"},
    {"Rho", "ρ", "Ρ"},     {"Sigma", "σ", "Σ"},   {"Tau", "τ", "Τ"},     {"Upsilon", "υ", "Υ"},
    {"Phi", "φ", "Φ"},     {"Chi", "χ", "Χ"},     {"Psi", "ψ", "Ψ"},     {"Omega", "ω", "Ω"},
}};

constexpr std::string_view kCapitalPrefix = "Capital";

}  // namespace

std::span<const GreekLetter> greek_alphabet() { return kAlphabet; }

std::optional<std::string_view> greek_letter_for_escape(std::string_view name) {
    bool capital = name.starts_with(kCapitalPrefix);
    if (capital) {
        name.remove_prefix(kCapitalPrefix.size());
    }
    for (const auto& letter : kAlphabet) {
        if (letter.name == name) {
            return capital ? letter.upper : letter.lower;
        }
    }
    return std::nullopt;
}

std::size_t greek_prefix_length(std::string_view text) {
    for (const auto& letter : kAlphabet) {
        if (text.starts_with(letter.lower)) return letter.lower.size();
        if (text.starts_with(letter.upper)) return letter.upper.size();
    }
    return 0;
}

std::optional<std::string_view> greek_ascii_name(std::string_view letter) {
    static const std::array<std::string, 24> lowered = [] {
        std::array<std::string, 24> out;
        for (std::size_t i = 0; i < kAlphabet.size(); ++i) {
            out[i] = std::string(kAlphabet[i].name);
            out[i][0] = static_cast<char>(out[i][0] - 'A' + 'a');
        }
        return out;
    }();
    for (std::size_t i = 0; i < kAlphabet.size(); ++i) {
        if (letter == kAlphabet[i].lower) return lowered[i];
        if (letter == kAlphabet[i].upper) return kAlphabet[i].name;
    }
    return std::nullopt;
}

}  // namespace polybridge
