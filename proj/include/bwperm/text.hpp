#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwperm {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Token {
    std::string_view text;
    int line = 0;   // 1-based
    int column = 0; // 1-based
};

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Splits text into whitespace-separated tokens, skipping lines whose first
// non-blank character is '#'.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;

        size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first < line.size() && line[first] != '#') {
            size_t i = first;
            while (i < line.size()) {
                while (i < line.size() && is_space(line[i])) ++i;
                size_t j = i;
                while (j < line.size() && !is_space(line[j])) ++j;
                if (j > i) {
                    tokens.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
                }
                i = j;
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return tokens;
}

inline std::string where(const Token& t) {
    return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column);
}

inline long long to_integer(const Token& t) {
    long long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError(where(t) + ": expected an integer, got '" + std::string(t.text) + "'");
    }
    return value;
}

} // namespace detail
} // namespace bwperm
