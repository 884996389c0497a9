#pragma once

// Relator enumeration for the pure braid group and single-step rewrite
// enumeration for the a-letter and sigma-augmented groups.
//
// Rule identifiers: "1".."3" on plain a-letter words, "a".."i" on
// sigma-augmented words.
//   1 / a : deletion or insertion of an adjacent equal a-letter pair
//   2 / b : commutation of adjacent a-letters sharing fewer than 2 indices
//   3 / c : reversal ("flip") of a 4-letter window whose letters are the four
//           distinct 3-subsets of a common 4-element index set
//       d : commutation of adjacent sigma letters with disjoint pairs
//       e : commutation of an adjacent sigma/a pair sharing fewer than 2
//           indices
//   f..i  : the four mixed 4-letter windows (one a-letter, three positive
//           sigma letters) and their reversals

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gn3/words.hpp"

namespace gn3 {

enum class RelatorFamily {
    commuting,
    conjugate_s,
    conjugate_rs_equal,
    conjugate_general,
};

inline std::string to_string(RelatorFamily f) {
    switch (f) {
        case RelatorFamily::commuting: return "commuting";
        case RelatorFamily::conjugate_s: return "conjugate-s";
        case RelatorFamily::conjugate_rs_equal: return "conjugate-rs-equal";
        default: return "conjugate-general";
    }
}

struct Relator {
    BraidWord word;  // (LHS)(RHS)^-1, the identity of the group
    RelatorFamily family{};
    std::array<int, 4> params{};  // the (i, j, r, s) instantiation
};

// The four conjugation relation families: for generators b_{ij}, b_{rs},
// the word b_{rs} b_{ij} b_{rs}^-1 (RHS)^-1 with RHS depending on how the
// index pairs interleave.
inline std::vector<Relator> pb_relators(int n) {
    if (n < 2) throw std::invalid_argument("pb_relators requires n >= 2");
    std::vector<Relator> out;
    auto L = [](int i, int j, int sign) { return braid_letter(i, j, sign); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int r = 1; r <= n; ++r)
                for (int s = r + 1; s <= n; ++s) {
                    std::vector<BraidLetter> rhs;
                    RelatorFamily fam;
                    if (s < i || j < r) {
                        rhs = {L(i, j, 1)};
                        fam = RelatorFamily::commuting;
                    } else if (j == r) {
                        rhs = {L(i, s, -1), L(i, j, 1), L(i, s, 1)};
                        fam = RelatorFamily::conjugate_s;
                    } else if (i < r && r < j && j == s) {
                        rhs = {L(i, j, -1), L(i, r, -1), L(i, j, 1),
                               L(i, r, 1), L(i, j, 1)};
                        fam = RelatorFamily::conjugate_rs_equal;
                    } else if (i < r && r < j && j < s) {
                        rhs = {L(i, s, -1), L(i, r, -1), L(i, s, 1),
                               L(i, r, 1), L(i, j, 1),  L(i, r, -1),
                               L(i, s, -1), L(i, r, 1), L(i, s, 1)};
                        fam = RelatorFamily::conjugate_general;
                    } else {
                        continue;
                    }
                    BraidWord w{n, {L(r, s, 1), L(i, j, 1), L(r, s, -1)}};
                    BraidWord rhs_word{n, rhs};
                    w = concat(w, inverse(rhs_word));
                    out.push_back({std::move(w), fam, {i, j, r, s}});
                }
    return out;
}

// ---------------------------------------------------------------------------
// rewrite steps
// ---------------------------------------------------------------------------

template <class Word>
struct RewriteStepT {
    std::size_t position = 0;
    std::string rule;       // "1".."3" or "a".."i"
    std::string direction;  // delete | insert | swap | flip | forward | backward
    Word result;
};

using Gn3Step = RewriteStepT<Gn3Word>;
using TildeStep = RewriteStepT<TildeWord>;

struct RewriteOptions {
    bool allow_insertions = false;
    // Insertions are emitted only for words of length <= max_length - 2.
    std::size_t max_length = std::numeric_limits<std::size_t>::max();
};

namespace detail {

inline int overlap(const TriLetter& a, const TriLetter& b) {
    int c = 0;
    for (int x : a.t)
        for (int y : b.t) c += (x == y);
    return c;
}

// True iff the four letters are four distinct triples drawn from a common
// 4-element index set (so reversing the window is a valid rewrite).
inline bool tetra_window(const TriLetter& a, const TriLetter& b,
                         const TriLetter& c, const TriLetter& d) {
    std::set<TriLetter> distinct{a, b, c, d};
    if (distinct.size() != 4) return false;
    std::set<int> uni(a.t.begin(), a.t.end());
    uni.insert(b.t.begin(), b.t.end());
    uni.insert(c.t.begin(), c.t.end());
    uni.insert(d.t.begin(), d.t.end());
    return uni.size() == 4;
}

inline std::vector<TriLetter> alphabet(int m) {
    std::vector<TriLetter> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) out.push_back(tri(i, j, k));
    return out;
}

template <class Word, class Step>
void emit_insertions(const Word& w, const char* rule, int bound,
                     const RewriteOptions& opt, std::vector<Step>& out) {
    if (!opt.allow_insertions) return;
    if (opt.max_length < 2 || w.letters.size() > opt.max_length - 2) return;
    for (std::size_t p = 0; p <= w.letters.size(); ++p) {
        for (const auto& letter : alphabet(bound)) {
            Word next = w;
            next.letters.insert(next.letters.begin() + p, 2,
                                typename decltype(next.letters)::value_type(
                                    letter));
            out.push_back({p, rule, "insert", std::move(next)});
        }
    }
}

}  // namespace detail

inline std::vector<Gn3Step> rewrite_steps(const Gn3Word& w,
                                          const RewriteOptions& opt = {}) {
    std::vector<Gn3Step> out;
    const auto& ls = w.letters;
    for (std::size_t p = 0; p < ls.size(); ++p) {
        if (p + 1 < ls.size()) {
            if (ls[p] == ls[p + 1]) {
                Gn3Word next = w;
                next.letters.erase(next.letters.begin() + p,
                                   next.letters.begin() + p + 2);
                out.push_back({p, "1", "delete", std::move(next)});
            } else if (detail::overlap(ls[p], ls[p + 1]) < 2) {
                Gn3Word next = w;
                std::swap(next.letters[p], next.letters[p + 1]);
                out.push_back({p, "2", "swap", std::move(next)});
            }
        }
        if (p + 3 < ls.size() &&
            detail::tetra_window(ls[p], ls[p + 1], ls[p + 2], ls[p + 3])) {
            Gn3Word next = w;
            std::reverse(next.letters.begin() + p,
                         next.letters.begin() + p + 4);
            out.push_back({p, "3", "flip", std::move(next)});
        }
    }
    detail::emit_insertions(w, "1", w.m, opt, out);
    return out;
}

namespace detail {

// Mixed 4-window patterns: each entry gives the window slot of the a-letter,
// the ordered-pair layout of the three sigma slots in terms of (i, j, k),
// and the layout after rewriting.  Slot codes: 0 = (i,j), 1 = (i,k),
// 2 = (j,k).
struct MixedPattern {
    const char* rule;
    const char* direction;
    int a_slot;           // position of the a-letter in the source window
    std::array<int, 3> sigmas;  // pair codes of the sigma slots, in order
    int a_slot_result;
    std::array<int, 3> sigmas_result;
};

inline const std::array<MixedPattern, 8>& mixed_patterns() {
    static const std::array<MixedPattern, 8> table{{
        {"f", "forward", 0, {0, 1, 2}, 3, {2, 1, 0}},
        {"f", "backward", 3, {2, 1, 0}, 0, {0, 1, 2}},
        {"g", "forward", 1, {0, 1, 2}, 2, {2, 1, 0}},
        {"g", "backward", 2, {2, 1, 0}, 1, {0, 1, 2}},
        {"h", "forward", 2, {0, 1, 2}, 1, {2, 1, 0}},
        {"h", "backward", 1, {2, 1, 0}, 2, {0, 1, 2}},
        {"i", "forward", 3, {0, 1, 2}, 0, {2, 1, 0}},
        {"i", "backward", 0, {2, 1, 0}, 3, {0, 1, 2}},
    }};
    return table;
}

inline std::pair<int, int> pair_of_code(int code, int i, int j, int k) {
    switch (code) {
        case 0: return {i, j};
        case 1: return {i, k};
        default: return {j, k};
    }
}

// Tries to match the 4-letter window starting at `p` against the given
// pattern; on success appends the rewritten word.
inline bool match_mixed(const TildeWord& w, std::size_t p,
                        const MixedPattern& pat, TildeWord& result) {
    const TriLetter* a = std::get_if<TriLetter>(&w.letters[p + pat.a_slot]);
    if (a == nullptr) return false;
    std::array<const SigmaLetter*, 3> sig{};
    int slot = 0;
    for (int q = 0; q < 4; ++q) {
        if (q == pat.a_slot) continue;
        sig[slot] = std::get_if<SigmaLetter>(&w.letters[p + q]);
        if (sig[slot] == nullptr || sig[slot]->sign != 1) return false;
        ++slot;
    }
    // Solve for (i, j, k) from the first sigma slot's pair code, then check
    // the remaining slots and the a-letter.
    int i, j, k;
    switch (pat.sigmas[0]) {
        case 0:  // (i, j); k comes from the (i,k) or (j,k) slot
            i = sig[0]->i;
            j = sig[0]->j;
            k = pat.sigmas[1] == 1 ? sig[1]->j
                                   : (pat.sigmas[1] == 2 ? sig[1]->j : -1);
            break;
        case 1:  // (i, k)
            i = sig[0]->i;
            k = sig[0]->j;
            j = pat.sigmas[1] == 0 ? sig[1]->j : sig[1]->i;
            break;
        default:  // (j, k)
            j = sig[0]->i;
            k = sig[0]->j;
            i = pat.sigmas[1] == 1 ? sig[1]->i : sig[1]->i;
            break;
    }
    if (i < 1 || j < 1 || k < 1 || i == j || j == k || i == k) return false;
    for (int s = 0; s < 3; ++s) {
        const auto [x, y] = pair_of_code(pat.sigmas[s], i, j, k);
        if (sig[s]->i != x || sig[s]->j != y) return false;
    }
    if (*a != tri(i, j, k)) return false;

    result = w;
    result.letters[p + pat.a_slot_result] = tri(i, j, k);
    int out_slot = 0;
    for (int q = 0; q < 4; ++q) {
        if (q == pat.a_slot_result) continue;
        const auto [x, y] =
            pair_of_code(pat.sigmas_result[out_slot], i, j, k);
        result.letters[p + q] = sigma(x, y, 1);
        ++out_slot;
    }
    return true;
}

}  // namespace detail

inline std::vector<TildeStep> rewrite_steps(const TildeWord& w,
                                            const RewriteOptions& opt = {}) {
    std::vector<TildeStep> out;
    const auto& ls = w.letters;
    for (std::size_t p = 0; p < ls.size(); ++p) {
        if (p + 1 < ls.size()) {
            const TriLetter* a0 = std::get_if<TriLetter>(&ls[p]);
            const TriLetter* a1 = std::get_if<TriLetter>(&ls[p + 1]);
            const SigmaLetter* s0 = std::get_if<SigmaLetter>(&ls[p]);
            const SigmaLetter* s1 = std::get_if<SigmaLetter>(&ls[p + 1]);
            if (a0 && a1 && *a0 == *a1) {
                TildeWord next = w;
                next.letters.erase(next.letters.begin() + p,
                                   next.letters.begin() + p + 2);
                out.push_back({p, "a", "delete", std::move(next)});
            } else if (a0 && a1 && detail::overlap(*a0, *a1) < 2) {
                TildeWord next = w;
                std::swap(next.letters[p], next.letters[p + 1]);
                out.push_back({p, "b", "swap", std::move(next)});
            }
            if (s0 && s1) {
                const bool disjoint = s0->i != s1->i && s0->i != s1->j &&
                                      s0->j != s1->i && s0->j != s1->j;
                if (disjoint) {
                    TildeWord next = w;
                    std::swap(next.letters[p], next.letters[p + 1]);
                    out.push_back({p, "d", "swap", std::move(next)});
                }
            }
            if ((s0 && a1) || (a0 && s1)) {
                const SigmaLetter* s = s0 ? s0 : s1;
                const TriLetter* a = a0 ? a0 : a1;
                int shared = 0;
                for (int x : a->t) shared += (x == s->i || x == s->j);
                if (shared < 2) {
                    TildeWord next = w;
                    std::swap(next.letters[p], next.letters[p + 1]);
                    out.push_back({p, "e", "swap", std::move(next)});
                }
            }
        }
        if (p + 3 < ls.size()) {
            std::array<const TriLetter*, 4> win{};
            bool all_a = true;
            for (int q = 0; q < 4; ++q) {
                win[q] = std::get_if<TriLetter>(&ls[p + q]);
                all_a = all_a && win[q] != nullptr;
            }
            if (all_a &&
                detail::tetra_window(*win[0], *win[1], *win[2], *win[3])) {
                TildeWord next = w;
                std::reverse(next.letters.begin() + p,
                             next.letters.begin() + p + 4);
                out.push_back({p, "c", "flip", std::move(next)});
            }
            for (const auto& pat : detail::mixed_patterns()) {
                TildeWord next;
                if (detail::match_mixed(w, p, pat, next)) {
                    out.push_back({p, pat.rule, pat.direction,
                                   std::move(next)});
                }
            }
        }
    }
    detail::emit_insertions(w, "a", w.n, opt, out);
    return out;
}

}  // namespace gn3
