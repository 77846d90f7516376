#include "polybridge/rename.hpp"

#include <map>
#include <set>

#include "polybridge/algebra.hpp"
#include "polybridge/errors.hpp"
#include "polybridge/greek.hpp"
#include "polybridge/parser.hpp"

namespace polybridge {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\f\v");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void invalid(const std::string& message) {
    throw RenameError(RenameErrorKind::InvalidSpec, message);
}

/// Resolves `\[Name]` escapes by running the lexer over a lone identifier.
std::string resolve_identifier(std::string_view text) {
    std::vector<Token> tokens;
    try {
        tokens = tokenize(text);
    } catch (const SourceError&) {
        invalid("'" + std::string(text) + "' is not an identifier");
    }
    if (tokens.size() != 2 || tokens[0].kind != TokenKind::Identifier ||
        tokens[0].span != Span{0, text.size()}) {
        invalid("'" + std::string(text) + "' is not an identifier");
    }
    return tokens[0].text;
}

const RenameEntry* find_entry(const RenameSpec& spec, std::string_view from) {
    for (const auto& entry : spec.entries) {
        if (entry.from == from) return &entry;
    }
    return nullptr;
}

}  // namespace

RenameSpec default_greek_map() {
    std::vector<RenameEntry> entries;
    for (const auto& letter : greek_alphabet()) {
        entries.push_back({std::string(letter.lower), std::string(*greek_ascii_name(letter.lower))});
        entries.push_back({std::string(letter.upper), std::string(letter.name)});
    }
    return {std::move(entries), RenameSource::Defaults};
}

RenameSpec make_rename_spec(std::vector<RenameEntry> entries, RenameSource source) {
    std::set<std::string> seen;
    for (const auto& entry : entries) {
        if (!is_identifier(entry.from)) {
            invalid("'" + entry.from + "' is not an identifier");
        }
        if (!is_ascii_identifier(entry.to)) {
            invalid("rename target '" + entry.to + "' is not an ASCII identifier");
        }
        if (!seen.insert(entry.from).second) {
            invalid("'" + entry.from + "' is renamed more than once");
        }
    }
    return {std::move(entries), source};
}

RenameEntry parse_rename_pair(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        invalid("expected FROM=TO, got '" + std::string(text) + "'");
    }
    std::string from = resolve_identifier(trim(text.substr(0, eq)));
    std::string to(trim(text.substr(eq + 1)));
    if (!is_ascii_identifier(to)) {
        invalid("rename target '" + to + "' is not an ASCII identifier");
    }
    return {std::move(from), std::move(to)};
}

RenameSpec parse_rename_file(std::string_view content) {
    std::vector<RenameEntry> entries;
    std::size_t line_no = 0;
    while (!content.empty()) {
        ++line_no;
        auto nl = content.find('\n');
        std::string_view line = content.substr(0, nl);
        content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        try {
            entries.push_back(parse_rename_pair(line));
        } catch (const RenameError& err) {
            invalid("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    return make_rename_spec(std::move(entries), RenameSource::UserFile);
}

RenameSpec layer_specs(const std::vector<RenameSpec>& layers) {
    std::map<std::string, std::size_t> position;
    RenameSpec out;
    for (const auto& layer : layers) {
        for (const auto& entry : layer.entries) {
            auto [it, inserted] = position.try_emplace(entry.from, out.entries.size());
            if (inserted) {
                out.entries.push_back(entry);
            } else {
                out.entries[it->second] = entry;
            }
        }
        out.source = layer.source;
    }
    return out;
}

std::string renamed_symbol(std::string_view symbol, const RenameSpec& spec) {
    if (const auto* entry = find_entry(spec, symbol)) {
        return entry->to;
    }
    const std::size_t head = greek_prefix_length(symbol);
    if (head == 0 || head == symbol.size()) {
        return std::string(symbol);
    }
    const auto* entry = find_entry(spec, symbol.substr(0, head));
    if (!entry) {
        return std::string(symbol);
    }
    std::string_view rest = symbol.substr(head);
    return entry->to + (rest.front() == '_' ? "" : "_") + std::string(rest);
}

Expr apply_renames(const Expr& e, const RenameSpec& spec) {
    if (spec.entries.empty()) {
        return e;
    }
    RenameMap rules;
    std::map<std::string, std::string> claimed;  // target -> source
    for (const auto& name : symbols_of(e)) {
        std::string target = renamed_symbol(name, spec);
        auto [it, inserted] = claimed.try_emplace(target, name);
        if (!inserted) {
            throw RenameError(RenameErrorKind::Collision, "renaming would merge '" + it->second +
                                                              "' and '" + name + "' into '" + target +
                                                              "'");
        }
        if (target != name) {
            rules.emplace(name, Expr::symbol(std::move(target)));
        }
    }
    return substitute(e, rules);
}

}  // namespace polybridge
