#pragma once

// Letter and word representations for the four word kinds handled by this
// library: pure-braid words, unsigned triple-letter words, sigma-augmented
// words, and free-product words of index letters.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gn3 {

// A pure-braid generator b_{ij}^{sign} with 1 <= i < j.
struct BraidLetter {
    int i = 0;
    int j = 0;
    int sign = 1;

    friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

// An involutive letter a_{ijk}; the triple is an unordered set, stored in
// ascending order.  No sign field: each letter is its own inverse.
struct TriLetter {
    std::array<int, 3> t{};

    friend auto operator<=>(const TriLetter&, const TriLetter&) = default;
};

// A signed letter s_{ij}^{sign}; the pair (i, j) is ordered and i != j.
struct SigmaLetter {
    int i = 0;
    int j = 0;
    int sign = 1;

    friend auto operator<=>(const SigmaLetter&, const SigmaLetter&) = default;
};

using TildeLetter = std::variant<TriLetter, SigmaLetter>;

struct BraidWord {
    int n = 0;  // strand count
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct Gn3Word {
    int m = 0;  // index bound: all triples lie within 1..m
    std::vector<TriLetter> letters;

    friend bool operator==(const Gn3Word&, const Gn3Word&) = default;
};

struct TildeWord {
    int n = 0;  // strand count; all indices lie within 1..n
    std::vector<TildeLetter> letters;

    friend bool operator==(const TildeWord&, const TildeWord&) = default;
};

// One generator of the free product: a total map from the complement of a
// fixed triple in 1..m to Z2 x Z2, stored in ascending domain order.  The
// all-zero map is a generator in its own right, distinct from the group
// identity (which is only the empty word).
struct IndexLetter {
    std::array<int, 3> triple{};
    int m = 0;
    std::vector<std::pair<int, int>> values;

    friend bool operator==(const IndexLetter&, const IndexLetter&) = default;
};

struct FreeProductWord {
    std::array<int, 3> triple{};
    int m = 0;
    std::vector<IndexLetter> letters;

    friend bool operator==(const FreeProductWord&, const FreeProductWord&) =
        default;
};

// ---------------------------------------------------------------------------
// construction helpers (validating)
// ---------------------------------------------------------------------------

inline BraidLetter braid_letter(int i, int j, int sign = 1) {
    if (!(1 <= i && i < j)) {
        throw std::invalid_argument("braid letter requires 1 <= i < j");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("braid letter sign must be +1 or -1");
    }
    return BraidLetter{i, j, sign};
}

inline TriLetter tri(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[0] == t[1] || t[1] == t[2]) {
        throw std::invalid_argument(
            "a-letter requires three distinct positive indices");
    }
    return TriLetter{t};
}

inline SigmaLetter sigma(int i, int j, int sign = 1) {
    if (i < 1 || j < 1 || i == j) {
        throw std::invalid_argument(
            "sigma letter requires distinct positive indices");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sigma letter sign must be +1 or -1");
    }
    return SigmaLetter{i, j, sign};
}

// Ascending complement of `triple` within 1..m; the domain of an IndexLetter.
inline std::vector<int> complement(const std::array<int, 3>& triple, int m) {
    std::vector<int> out;
    for (int l = 1; l <= m; ++l) {
        if (l != triple[0] && l != triple[1] && l != triple[2]) {
            out.push_back(l);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// inverse / concat
// ---------------------------------------------------------------------------

inline BraidWord inverse(const BraidWord& w) {
    BraidWord out{w.n, {}};
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        out.letters.push_back(BraidLetter{it->i, it->j, -it->sign});
    }
    return out;
}

inline Gn3Word inverse(const Gn3Word& w) {
    Gn3Word out{w.m, {w.letters.rbegin(), w.letters.rend()}};
    return out;
}

inline TildeWord inverse(const TildeWord& w) {
    TildeWord out{w.n, {}};
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (const auto* s = std::get_if<SigmaLetter>(&*it)) {
            out.letters.emplace_back(SigmaLetter{s->i, s->j, -s->sign});
        } else {
            out.letters.push_back(*it);
        }
    }
    return out;
}

template <class Word>
Word concat(const Word& a, const Word& b) {
    if constexpr (requires { a.n; }) {
        if (a.n != b.n) {
            throw std::invalid_argument("concat: strand count mismatch");
        }
    } else {
        if (a.m != b.m) {
            throw std::invalid_argument("concat: index bound mismatch");
        }
    }
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// ---------------------------------------------------------------------------
// formatting (canonical text forms; parse() round-trips these)
// ---------------------------------------------------------------------------

inline std::string format(const BraidLetter& l) {
    std::string s = "b[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
    if (l.sign < 0) s += "^-1";
    return s;
}

inline std::string format(const TriLetter& l) {
    return "a[" + std::to_string(l.t[0]) + "," + std::to_string(l.t[1]) + "," +
           std::to_string(l.t[2]) + "]";
}

inline std::string format(const SigmaLetter& l) {
    std::string s = "s[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
    if (l.sign < 0) s += "^-1";
    return s;
}

inline std::string format(const TildeLetter& l) {
    return std::visit([](const auto& x) { return format(x); }, l);
}

template <class Word>
std::string format_letters(const Word& w) {
    std::string out;
    for (std::size_t p = 0; p < w.letters.size(); ++p) {
        if (p) out += ' ';
        out += format(w.letters[p]);
    }
    return out;
}

inline std::string format(const BraidWord& w) { return format_letters(w); }
inline std::string format(const Gn3Word& w) { return format_letters(w); }
inline std::string format(const TildeWord& w) { return format_letters(w); }

// Index letters print as parenthesized pairs in ascending domain order;
// single-pair domains print as the bare pair, empty domains as "()".
inline std::string format(const IndexLetter& l) {
    std::string out;
    for (std::size_t p = 0; p < l.values.size(); ++p) {
        if (p) out += ',';
        out += "(" + std::to_string(l.values[p].first) + "," +
               std::to_string(l.values[p].second) + ")";
    }
    if (l.values.size() == 1) return out;
    return "(" + out + ")";
}

// Free-product words display as directly concatenated index letters, e.g.
// "(1,0)(0,0)(1,1)".
inline std::string format(const FreeProductWord& w) {
    std::string out;
    for (const auto& l : w.letters) out += format(l);
    return out;
}

}  // namespace gn3
