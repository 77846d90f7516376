#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polybridge/expr.hpp"

namespace polybridge {

enum class RenameSource { Defaults, UserFile, InlineFlag };

struct RenameEntry {
    std::string from;
    std::string to;

    friend bool operator==(const RenameEntry&, const RenameEntry&) = default;
};

/// Symbol -> ASCII symbol renames. `from` keys are distinct and every `to` is
/// an ASCII identifier.
///
/// An entry whose `from` is a single Greek letter also renames identifiers
/// that merely start with that letter: the head is replaced and the tail is
/// joined with an underscore (γb -> gamma_b, γ_b -> gamma_b).
struct RenameSpec {
    std::vector<RenameEntry> entries;
    RenameSource source = RenameSource::InlineFlag;
};

/// α -> alpha ... ω -> omega and Α -> Alpha ... Ω -> Omega.
RenameSpec default_greek_map();

/// Validates and wraps entries. Throws RenameError(InvalidSpec) on a bad
/// identifier or a repeated `from`.
RenameSpec make_rename_spec(std::vector<RenameEntry> entries, RenameSource source);

/// Parses one `from=to` pair, as given to the inline flag.
RenameEntry parse_rename_pair(std::string_view text);

/// Parses the rename file format: one `from=to` per line, `#` starts a
/// comment, blank lines ignored. Errors name the 1-based line.
RenameSpec parse_rename_file(std::string_view content);

/// Later specs override earlier ones on the same `from`.
RenameSpec layer_specs(const std::vector<RenameSpec>& layers);

/// Target name for `symbol` under `spec` (the symbol itself if untouched).
std::string renamed_symbol(std::string_view symbol, const RenameSpec& spec);

/// Renames every symbol of `e` per `spec`. Throws RenameError(Collision) if
/// two distinct symbols of `e` would end up with the same name.
Expr apply_renames(const Expr& e, const RenameSpec& spec);

}  // namespace polybridge
