#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace polybridge {

struct GreekLetter {
    std::string_view name;   // "Alpha"
    std::string_view lower;  // UTF-8 "α"
    std::string_view upper;  // UTF-8 "Α"
};

/// The 24 letters, alpha through omega (final sigma excluded).
std::span<const GreekLetter> greek_alphabet();

/// UTF-8 letter for an escape name such as "Beta" or "CapitalOmega".
std::optional<std::string_view> greek_letter_for_escape(std::string_view name);

/// Byte length of the supported Greek letter `text` starts with, or 0.
std::size_t greek_prefix_length(std::string_view text);

/// ASCII name of a single Greek letter: "beta" for β, "Omega" for Ω.
std::optional<std::string_view> greek_ascii_name(std::string_view letter);

}  // namespace polybridge
