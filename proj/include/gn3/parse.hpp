#pragma once

// Parsing of the whitespace-separated word grammar:
//   braid letter: b[i,j] or b[i,j]^-1        (integers, i < j)
//   a-letter:     a[i,j,k]                   (ascending integers)
//   sigma letter: s[i,j] or s[i,j]^-1        (ordered pair, i != j)
// Indices are validated against the supplied bound.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gn3/words.hpp"

namespace gn3 {

struct parse_error : std::runtime_error {
    std::size_t position;  // byte offset into the input text

    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

struct Token {
    char kind = 0;  // 'b', 'a', or 's'
    std::vector<int> indices;
    int sign = 1;
    std::size_t offset = 0;
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t p = 0;
    const std::size_t end = text.size();
    while (p < end) {
        if (std::isspace(static_cast<unsigned char>(text[p]))) {
            ++p;
            continue;
        }
        Token tok;
        tok.offset = p;
        tok.kind = text[p];
        if (tok.kind != 'b' && tok.kind != 'a' && tok.kind != 's') {
            throw parse_error("expected letter 'b', 'a', or 's'", p);
        }
        ++p;
        if (p >= end || text[p] != '[') {
            throw parse_error("expected '[' after letter name", p);
        }
        ++p;
        while (true) {
            std::size_t start = p;
            if (p < end && text[p] == '-') ++p;
            while (p < end && std::isdigit(static_cast<unsigned char>(text[p])))
                ++p;
            if (p == start) {
                throw parse_error("expected integer index", p);
            }
            int value;
            try {
                value = std::stoi(std::string(text.substr(start, p - start)));
            } catch (const std::exception&) {
                throw parse_error("index out of integer range", start);
            }
            tok.indices.push_back(value);
            if (p < end && text[p] == ',') {
                ++p;
                continue;
            }
            break;
        }
        if (p >= end || text[p] != ']') {
            throw parse_error("expected ',' or ']' in index list", p);
        }
        ++p;
        if (p < end && text[p] == '^') {
            if (text.substr(p, 3) != "^-1") {
                throw parse_error("expected '^-1'", p);
            }
            tok.sign = -1;
            p += 3;
        }
        if (p < end && !std::isspace(static_cast<unsigned char>(text[p]))) {
            throw parse_error("unexpected character after letter", p);
        }
        out.push_back(std::move(tok));
    }
    return out;
}

inline void check_bound(const Token& tok, int bound) {
    for (int v : tok.indices) {
        if (v < 1 || v > bound) {
            throw parse_error("index out of range 1.." + std::to_string(bound),
                              tok.offset);
        }
    }
}

}  // namespace detail

inline BraidWord parse_braid(std::string_view text, int n) {
    BraidWord w{n, {}};
    for (const auto& tok : detail::tokenize(text)) {
        if (tok.kind != 'b') {
            throw parse_error("expected braid letter b[i,j]", tok.offset);
        }
        if (tok.indices.size() != 2) {
            throw parse_error("braid letter takes exactly two indices",
                              tok.offset);
        }
        detail::check_bound(tok, n);
        if (tok.indices[0] >= tok.indices[1]) {
            throw parse_error("braid letter requires i < j", tok.offset);
        }
        w.letters.push_back(
            braid_letter(tok.indices[0], tok.indices[1], tok.sign));
    }
    return w;
}

inline Gn3Word parse_gn3(std::string_view text, int m) {
    Gn3Word w{m, {}};
    for (const auto& tok : detail::tokenize(text)) {
        if (tok.kind != 'a') {
            throw parse_error("expected a-letter a[i,j,k]", tok.offset);
        }
        if (tok.sign < 0) {
            throw parse_error("a-letters carry no sign", tok.offset);
        }
        if (tok.indices.size() != 3) {
            throw parse_error("a-letter takes exactly three indices",
                              tok.offset);
        }
        detail::check_bound(tok, m);
        if (!(tok.indices[0] < tok.indices[1] &&
              tok.indices[1] < tok.indices[2])) {
            throw parse_error(
                "a-letter indices must be distinct and ascending", tok.offset);
        }
        w.letters.push_back(tri(tok.indices[0], tok.indices[1],
                                tok.indices[2]));
    }
    return w;
}

inline TildeWord parse_tilde(std::string_view text, int n) {
    TildeWord w{n, {}};
    for (const auto& tok : detail::tokenize(text)) {
        detail::check_bound(tok, n);
        if (tok.kind == 'a') {
            if (tok.sign < 0) {
                throw parse_error("a-letters carry no sign", tok.offset);
            }
            if (tok.indices.size() != 3) {
                throw parse_error("a-letter takes exactly three indices",
                                  tok.offset);
            }
            if (!(tok.indices[0] < tok.indices[1] &&
                  tok.indices[1] < tok.indices[2])) {
                throw parse_error(
                    "a-letter indices must be distinct and ascending",
                    tok.offset);
            }
            w.letters.emplace_back(
                tri(tok.indices[0], tok.indices[1], tok.indices[2]));
        } else if (tok.kind == 's') {
            if (tok.indices.size() != 2) {
                throw parse_error("sigma letter takes exactly two indices",
                                  tok.offset);
            }
            if (tok.indices[0] == tok.indices[1]) {
                throw parse_error("sigma letter requires i != j", tok.offset);
            }
            w.letters.emplace_back(
                sigma(tok.indices[0], tok.indices[1], tok.sign));
        } else {
            throw parse_error("expected a-letter or sigma letter", tok.offset);
        }
    }
    return w;
}

}  // namespace gn3
