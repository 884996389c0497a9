#pragma once

// The maps between the word kinds: phi (braid -> a-letter words), tilde_phi
// (braid -> sigma-augmented words), pr (deletes sigma letters), embed_i
// (inclusion), pi (sends sigma_{ij}^{+-1} to a_{ij(n+1)}), and the
// letter-filter endomorphism f_ijk on braid words.
//
// Product-order convention, fixed once for the whole library: every product
// block expands in ASCENDING index order, skipping the excluded index, and
// c-words are arranged (upper block) (sigma) (lower block).

#include <array>
#include <stdexcept>

#include "gn3/words.hpp"

namespace gn3 {

enum class CVariant { c_ij, cbar_ij, c_ji, cbar_ji };

struct CWordSpec {
    int i = 0;
    int j = 0;
    CVariant variant = CVariant::c_ij;
    int n = 0;

    CWordSpec(int i_, int j_, CVariant v, int n_)
        : i(i_), j(j_), variant(v), n(n_) {
        if (!(1 <= i && i < j && j <= n)) {
            throw std::invalid_argument("c-word requires 1 <= i < j <= n");
        }
    }
};

// c_{i,k} without the sigma letter: a_{ikl} for l = k+1..n then l = 1..k-1,
// ascending, skipping l = i.
inline Gn3Word c_gn3(int i, int k, int n) {
    if (!(1 <= i && i < k && k <= n)) {
        throw std::invalid_argument("c_gn3 requires 1 <= i < k <= n");
    }
    Gn3Word w{n, {}};
    for (int l = k + 1; l <= n; ++l) w.letters.push_back(tri(i, k, l));
    for (int l = 1; l < k; ++l) {
        if (l != i) w.letters.push_back(tri(i, k, l));
    }
    return w;
}

inline TildeWord tilde_c(const CWordSpec& spec) {
    const auto [si, sj, sign] = [&spec]() -> std::array<int, 3> {
        switch (spec.variant) {
            case CVariant::c_ij: return {spec.i, spec.j, -1};
            case CVariant::cbar_ij: return {spec.i, spec.j, +1};
            case CVariant::c_ji: return {spec.j, spec.i, -1};
            default: return {spec.j, spec.i, +1};
        }
    }();
    TildeWord w{spec.n, {}};
    for (int k = spec.j + 1; k <= spec.n; ++k) {
        w.letters.emplace_back(tri(spec.i, spec.j, k));
    }
    w.letters.emplace_back(sigma(si, sj, sign));
    for (int k = 1; k < spec.j; ++k) {
        if (k != spec.i) w.letters.emplace_back(tri(spec.i, spec.j, k));
    }
    return w;
}

namespace detail {

inline Gn3Word phi_generator(int i, int j, int n) {
    Gn3Word w{n, {}};
    auto append = [&w](const Gn3Word& part) {
        w.letters.insert(w.letters.end(), part.letters.begin(),
                         part.letters.end());
    };
    for (int k = i + 1; k < j; ++k) append(inverse(c_gn3(i, k, n)));
    append(c_gn3(i, j, n));
    append(c_gn3(i, j, n));
    for (int k = j - 1; k > i; --k) append(c_gn3(i, k, n));
    return w;
}

inline TildeWord tilde_phi_generator(int i, int j, int n) {
    TildeWord w{n, {}};
    auto append = [&w](const TildeWord& part) {
        w.letters.insert(w.letters.end(), part.letters.begin(),
                         part.letters.end());
    };
    for (int k = i + 1; k < j; ++k) {
        append(inverse(tilde_c(CWordSpec(i, k, CVariant::c_ij, n))));
    }
    append(tilde_c(CWordSpec(i, j, CVariant::cbar_ij, n)));
    append(tilde_c(CWordSpec(i, j, CVariant::cbar_ji, n)));
    for (int k = j - 1; k > i; --k) {
        append(tilde_c(CWordSpec(i, k, CVariant::c_ij, n)));
    }
    return w;
}

}  // namespace detail

inline Gn3Word phi(const BraidWord& w) {
    Gn3Word out{w.n, {}};
    for (const auto& l : w.letters) {
        Gn3Word img = detail::phi_generator(l.i, l.j, w.n);
        if (l.sign < 0) img = inverse(img);
        out.letters.insert(out.letters.end(), img.letters.begin(),
                           img.letters.end());
    }
    return out;
}

inline TildeWord tilde_phi(const BraidWord& w) {
    TildeWord out{w.n, {}};
    for (const auto& l : w.letters) {
        TildeWord img = detail::tilde_phi_generator(l.i, l.j, w.n);
        if (l.sign < 0) img = inverse(img);
        out.letters.insert(out.letters.end(), img.letters.begin(),
                           img.letters.end());
    }
    return out;
}

// Deletes every sigma letter; keeps every a-letter.
inline Gn3Word pr(const TildeWord& w) {
    Gn3Word out{w.n, {}};
    for (const auto& l : w.letters) {
        if (const auto* a = std::get_if<TriLetter>(&l)) {
            out.letters.push_back(*a);
        }
    }
    return out;
}

// Letterwise inclusion; pr(embed_i(w)) == w.
inline TildeWord embed_i(const Gn3Word& w) {
    TildeWord out{w.m, {}};
    for (const auto& l : w.letters) out.letters.emplace_back(l);
    return out;
}

// Letterwise projection onto the a-letter group with bound n+1:
// sigma_{ij}^{+-1} and sigma_{ji}^{+-1} both map to a_{i,j,n+1}.
inline Gn3Word pi(const TildeWord& w) {
    Gn3Word out{w.n + 1, {}};
    for (const auto& l : w.letters) {
        if (const auto* a = std::get_if<TriLetter>(&l)) {
            out.letters.push_back(*a);
        } else {
            const auto& s = std::get<SigmaLetter>(l);
            out.letters.push_back(tri(s.i, s.j, w.n + 1));
        }
    }
    return out;
}

// Keeps exactly the letters b_{st}^{+-1} with |{s,t} n {i,j,k}| = 2.
inline BraidWord f_ijk(const BraidWord& w, const std::array<int, 3>& triple) {
    if (triple[0] == triple[1] || triple[0] == triple[2] ||
        triple[1] == triple[2]) {
        throw std::invalid_argument("f_ijk requires three distinct indices");
    }
    auto member = [&triple](int x) {
        return x == triple[0] || x == triple[1] || x == triple[2];
    };
    BraidWord out{w.n, {}};
    for (const auto& l : w.letters) {
        if (static_cast<int>(member(l.i)) + static_cast<int>(member(l.j)) == 2) {
            out.letters.push_back(l);
        }
    }
    return out;
}

}  // namespace gn3
