#pragma once

// Per-occurrence indices, the w and w~ invariants valued in free products of
// Z2 copies, free-product reduction, and abelianization profiles.

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gn3/homomorphisms.hpp"
#include "gn3/words.hpp"

namespace gn3 {

struct TripleSelector {
    std::array<int, 3> t{};
    int m = 0;

    TripleSelector(int i, int j, int k, int bound)
        : t(tri(i, j, k).t), m(bound) {
        if (t[2] > bound) {
            throw std::invalid_argument("selector triple exceeds bound");
        }
    }
};

// Two conventions for the second component of the index pair; the first
// component is (N_jkl + N_ijl) in both.
enum class IndexConvention {
    standard,  // second component N_ikl + N_jkl (default)
    alternate,   // second component N_ikl + N_ijl
};

// Index of the a_{ijk} occurrence at `pos`: for each l in the complement of
// {i,j,k}, a pair of mod-2 prefix-occurrence counts N_T of the triples T
// sharing two indices with {i,j,k}, taken over the strict prefix w[0..pos).
inline IndexLetter occurrence_index(
    const Gn3Word& w, std::size_t pos, const TripleSelector& sel,
    IndexConvention conv = IndexConvention::standard) {
    if (pos >= w.letters.size()) {
        throw std::invalid_argument("occurrence position out of range");
    }
    const auto [i, j, k] = sel.t;
    if (w.letters[pos] != TriLetter{{i, j, k}}) {
        throw std::invalid_argument(
            "letter at position is not the selector triple");
    }
    std::map<TriLetter, int> counts;
    for (std::size_t p = 0; p < pos; ++p) ++counts[w.letters[p]];
    auto N = [&counts](int a, int b, int c) {
        auto it = counts.find(tri(a, b, c));
        return it == counts.end() ? 0 : it->second;
    };
    IndexLetter out{sel.t, sel.m, {}};
    for (int l : complement(sel.t, sel.m)) {
        const int first = (N(j, k, l) + N(i, j, l)) % 2;
        const int second = conv == IndexConvention::standard
                               ? (N(i, k, l) + N(j, k, l)) % 2
                               : (N(i, k, l) + N(i, j, l)) % 2;
        out.values.emplace_back(first, second);
    }
    return out;
}

struct OccurrenceIndex {
    std::size_t position = 0;
    IndexLetter index;
};

inline std::vector<OccurrenceIndex> occurrence_indices(
    const Gn3Word& w, const TripleSelector& sel,
    IndexConvention conv = IndexConvention::standard) {
    std::vector<OccurrenceIndex> out;
    for (std::size_t p = 0; p < w.letters.size(); ++p) {
        if (w.letters[p] == TriLetter{sel.t}) {
            out.push_back({p, occurrence_index(w, p, sel, conv)});
        }
    }
    return out;
}

// Unreduced sequence of the indices of all a_{ijk} occurrences, in order.
inline FreeProductWord w_invariant(
    const Gn3Word& w, const TripleSelector& sel,
    IndexConvention conv = IndexConvention::standard) {
    FreeProductWord out{sel.t, sel.m, {}};
    for (auto& occ : occurrence_indices(w, sel, conv)) {
        out.letters.push_back(std::move(occ.index));
    }
    return out;
}

// w~ = w o pi; the selector must be over bound n+1.
inline FreeProductWord tilde_w_invariant(
    const TildeWord& w, const TripleSelector& sel,
    IndexConvention conv = IndexConvention::standard) {
    if (sel.m != w.n + 1) {
        throw std::invalid_argument(
            "tilde invariant selector must have bound n+1");
    }
    return w_invariant(pi(w), sel, conv);
}

// Free reduction: repeatedly delete adjacent EQUAL letters (each generator
// is an involution).  Stack-based; yields the unique reduced form.
inline FreeProductWord reduce(const FreeProductWord& w) {
    FreeProductWord out{w.triple, w.m, {}};
    for (const auto& l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == l) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

// Occurrence parity per a-letter; net exponent sum per ordered sigma pair.
struct AbelianProfile {
    std::map<TriLetter, int> a_parity;
    std::map<std::pair<int, int>, int> sigma_sum;

    bool trivial() const {
        for (const auto& [letter, parity] : a_parity) {
            if (parity != 0) return false;
        }
        for (const auto& [pair, sum] : sigma_sum) {
            if (sum != 0) return false;
        }
        return true;
    }
};

inline AbelianProfile abelian_profile(const Gn3Word& w) {
    AbelianProfile out;
    for (const auto& l : w.letters) out.a_parity[l] ^= 1;
    return out;
}

inline AbelianProfile abelian_profile(const TildeWord& w) {
    AbelianProfile out;
    for (const auto& l : w.letters) {
        if (const auto* a = std::get_if<TriLetter>(&l)) {
            out.a_parity[*a] ^= 1;
        } else {
            const auto& s = std::get<SigmaLetter>(l);
            out.sigma_sum[{s.i, s.j}] += s.sign;
        }
    }
    return out;
}

}  // namespace gn3
