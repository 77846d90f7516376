#include <cctype>

#include "polybridge/greek.hpp"
#include "polybridge/parser.hpp"

namespace polybridge {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Integer: return "integer";
        case TokenKind::Decimal: return "decimal";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_tail_char(char c) { return is_ascii_letter(c) || is_digit(c) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

/// Byte length of the UTF-8 sequence starting at `c` (1 for malformed leads).
std::size_t utf8_length(unsigned char c) {
    if (c < 0x80) return 1;
    if ((c >> 5) == 0x6) return 2;
    if ((c >> 4) == 0xE) return 3;
    if ((c >> 3) == 0x1E) return 4;
    return 1;
}

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            while (pos_ < in_.size() && is_space(in_[pos_])) ++pos_;
            if (pos_ == in_.size()) {
                out.push_back({TokenKind::End, "", {pos_, pos_}});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    [[noreturn]] void fail(std::size_t begin, std::size_t end, const std::string& message) const {
        throw SourceError(SourceErrorKind::LexError, {begin, end}, message);
    }

    Token single(TokenKind kind) {
        std::size_t begin = pos_++;
        return {kind, std::string(in_.substr(begin, 1)), {begin, pos_}};
    }

    Token next() {
        const char c = in_[pos_];
        switch (c) {
            case '+': return single(TokenKind::Plus);
            case '-': return single(TokenKind::Minus);
            case '*': return single(TokenKind::Star);
            case '/': return single(TokenKind::Slash);
            case '^': return single(TokenKind::Caret);
            case '(': return single(TokenKind::LParen);
            case ')': return single(TokenKind::RParen);
            case '\\': return escape();
            default: break;
        }
        if (is_digit(c) || c == '.') {
            return number();
        }
        if (is_ascii_letter(c)) {
            std::size_t begin = pos_;
            while (pos_ < in_.size() && is_tail_char(in_[pos_])) ++pos_;
            return {TokenKind::Identifier, std::string(in_.substr(begin, pos_ - begin)), {begin, pos_}};
        }
        if (std::size_t n = greek_prefix_length(in_.substr(pos_)); n > 0) {
            std::size_t begin = pos_;
            pos_ += n;
            std::string name(in_.substr(begin, n));
            return {TokenKind::Identifier, name + tail(), {begin, pos_}};
        }
        std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), in_.size() - pos_);
        fail(pos_, pos_ + len, "unexpected character '" + std::string(in_.substr(pos_, len)) + "'");
    }

    std::string tail() {
        std::size_t begin = pos_;
        while (pos_ < in_.size() && is_tail_char(in_[pos_])) ++pos_;
        return std::string(in_.substr(begin, pos_ - begin));
    }

    Token number() {
        std::size_t begin = pos_;
        while (pos_ < in_.size() && is_digit(in_[pos_])) ++pos_;
        TokenKind kind = TokenKind::Integer;
        if (pos_ < in_.size() && in_[pos_] == '.') {
            kind = TokenKind::Decimal;
            ++pos_;
            while (pos_ < in_.size() && is_digit(in_[pos_])) ++pos_;
            if (pos_ - begin == 1) {
                fail(begin, pos_, "stray '.'");
            }
            if (pos_ < in_.size() && in_[pos_] == '.') {
                fail(begin, pos_ + 1, "number with more than one '.'");
            }
        }
        return {kind, std::string(in_.substr(begin, pos_ - begin)), {begin, pos_}};
    }

    Token escape() {
        std::size_t begin = pos_;
        if (in_.substr(pos_, 2) != "\\[") {
            fail(begin, begin + 1, "'\\' must start a \\[Name] escape");
        }
        std::size_t close = in_.find(']', pos_ + 2);
        if (close == std::string_view::npos) {
            fail(begin, in_.size(), "unterminated \\[ escape");
        }
        std::string_view name = in_.substr(pos_ + 2, close - pos_ - 2);
        auto letter = greek_letter_for_escape(name);
        if (!letter) {
            fail(begin, close + 1, "unknown escape \\[" + std::string(name) + "]");
        }
        pos_ = close + 1;
        std::string text(*letter);
        return {TokenKind::Identifier, text + tail(), {begin, pos_}};
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

bool is_ascii_identifier(std::string_view text) {
    if (text.empty() || !is_ascii_letter(text.front())) return false;
    for (char c : text) {
        if (!is_tail_char(c)) return false;
    }
    return true;
}

bool is_identifier(std::string_view text) {
    if (is_ascii_identifier(text)) return true;
    std::size_t head = greek_prefix_length(text);
    if (head == 0) return false;
    for (char c : text.substr(head)) {
        if (!is_tail_char(c)) return false;
    }
    return true;
}

LineColumn line_column(std::string_view input, std::size_t offset) {
    LineColumn lc;
    offset = std::min(offset, input.size());
    for (std::size_t i = 0; i < offset; ++i) {
        const auto c = static_cast<unsigned char>(input[i]);
        if (c == '\n') {
            ++lc.line;
            lc.column = 1;
        } else if ((c & 0xC0) != 0x80) {
            ++lc.column;
        }
    }
    return lc;
}

}  // namespace polybridge
