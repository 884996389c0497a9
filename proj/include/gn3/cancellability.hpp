#pragma once

// Sufficient-condition checker for non-cancellability of a matched
// b_{ij} ... b_{ij}^-1 pair in a pure braid word, with two certificate
// kinds: a direct parity count and a free-product invariant obstruction.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gn3/homomorphisms.hpp"
#include "gn3/invariants.hpp"
#include "gn3/words.hpp"

namespace gn3 {

struct CandidatePair {
    std::size_t left = 0;   // offset of b_{ij}^{+1}
    std::size_t right = 0;  // offset of b_{ij}^{-1}
    int i = 0;
    int j = 0;
    BraidWord between;  // the literal subword strictly between the offsets
};

struct Certificate {
    enum class Kind { parity, invariant_obstruction, inconclusive };

    Kind kind = Kind::inconclusive;
    int k = 0;  // parity witness (smallest index with odd count)
    std::optional<TripleSelector> selector;    // obstruction witness
    std::optional<FreeProductWord> reduced;    // nonempty reduced invariant
};

inline std::string to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::parity: return "parity";
        case Certificate::Kind::invariant_obstruction:
            return "invariant-obstruction";
        default: return "inconclusive";
    }
}

// All (left, right) offset pairs holding b_{ij} and b_{ij}^-1 (in that sign
// order), any nesting; the between-word is extracted verbatim.
inline std::vector<CandidatePair> find_pairs(const BraidWord& w) {
    std::vector<CandidatePair> out;
    for (std::size_t l = 0; l < w.letters.size(); ++l) {
        if (w.letters[l].sign != 1) continue;
        for (std::size_t r = l + 1; r < w.letters.size(); ++r) {
            if (w.letters[r].i == w.letters[l].i &&
                w.letters[r].j == w.letters[l].j &&
                w.letters[r].sign == -1) {
                BraidWord between{w.n,
                                  {w.letters.begin() + l + 1,
                                   w.letters.begin() + r}};
                out.push_back({l, r, w.letters[l].i, w.letters[l].j,
                               std::move(between)});
            }
        }
    }
    return out;
}

// Parity criterion: if the between-word contains no b_{ij}^{+-1} and for
// some k the total count of b_{ik}^{+-1} and b_{jk}^{+-1} letters is odd,
// the pair cannot cancel.  The smallest such k is reported.
inline Certificate parity_check(const CandidatePair& pair, int n) {
    for (const auto& l : pair.between.letters) {
        if (l.i == pair.i && l.j == pair.j) {
            return {};  // inconclusive: the excluded generator occurs in B
        }
    }
    for (int k = 1; k <= n; ++k) {
        if (k == pair.i || k == pair.j) continue;
        int count = 0;
        for (const auto& l : pair.between.letters) {
            const bool ik = l.i == std::min(pair.i, k) &&
                            l.j == std::max(pair.i, k);
            const bool jk = l.i == std::min(pair.j, k) &&
                            l.j == std::max(pair.j, k);
            count += (ik || jk);
        }
        if (count % 2 == 1) {
            Certificate cert;
            cert.kind = Certificate::Kind::parity;
            cert.k = k;
            return cert;
        }
    }
    return {};
}

// Invariant criterion: for each k, filter the between-word through f_ijk,
// push it through the sigma-augmented map, and reduce the free-product
// invariant for selector (i, j, k); a nonempty result obstructs
// cancellation.  The smallest witnessing k is reported.
inline Certificate invariant_obstruction(
    const CandidatePair& pair, int n,
    IndexConvention conv = IndexConvention::standard) {
    for (int k = 1; k <= n; ++k) {
        if (k == pair.i || k == pair.j) continue;
        const BraidWord filtered =
            f_ijk(pair.between, {pair.i, pair.j, k});
        const TripleSelector sel(pair.i, pair.j, k, n + 1);
        const FreeProductWord r =
            reduce(tilde_w_invariant(tilde_phi(filtered), sel, conv));
        if (!r.letters.empty()) {
            Certificate cert;
            cert.kind = Certificate::Kind::invariant_obstruction;
            cert.k = k;
            cert.selector = sel;
            cert.reduced = r;
            return cert;
        }
    }
    return {};
}

}  // namespace gn3
