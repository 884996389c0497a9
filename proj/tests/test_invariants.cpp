#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gn3/homomorphisms.hpp"
#include "gn3/invariants.hpp"
#include "gn3/parse.hpp"
#include "gn3/presentations.hpp"
#include "gn3/words.hpp"

using namespace gn3;

namespace {

// Shorthand: the reduced invariant of the bound-raised image of a braid
// word, as a formatted string of index letters.
std::string reduced_text(const BraidWord& w, int i, int j, int k,
                         IndexConvention conv = IndexConvention::standard) {
    const TripleSelector sel(i, j, k, w.n + 1);
    return format(reduce(tilde_w_invariant(tilde_phi(w), sel, conv)));
}

}  // namespace

TEST_CASE("occurrence index basics") {
    const auto w = parse_gn3("a[1,2,4] a[1,2,3]", 4);
    const TripleSelector sel(1, 2, 3, 4);
    // prefix holds one a[1,2,4]: l=4 maps to (N234+N124, N134+N234) = (1,0)
    CHECK(format(occurrence_index(w, 1, sel)) == "(1,0)");
    // empty prefix gives the all-zero letter (still a generator)
    const auto w2 = parse_gn3("a[1,2,3] a[1,2,4]", 4);
    CHECK(format(occurrence_index(w2, 0, sel)) == "(0,0)");
    CHECK_THROWS_AS(occurrence_index(w, 0, sel), std::invalid_argument);
    CHECK_THROWS_AS(occurrence_index(w, 5, sel), std::invalid_argument);
}

TEST_CASE("the two index conventions differ in the second component") {
    const auto w = parse_gn3("a[1,3,4] a[1,2,3]", 4);
    const TripleSelector sel(1, 2, 3, 4);
    // prefix N134 = 1: standard second component N134+N234 = 1,
    // alternate second component N134+N124 = 1; first component N234+N124 = 0
    CHECK(format(occurrence_index(w, 1, sel, IndexConvention::standard)) ==
          "(0,1)");
    const auto w2 = parse_gn3("a[2,3,4] a[1,2,3]", 4);
    // prefix N234 = 1: standard gives (1,1), alternate gives (1,0)
    CHECK(format(occurrence_index(w2, 1, sel, IndexConvention::standard)) ==
          "(1,1)");
    CHECK(format(occurrence_index(w2, 1, sel, IndexConvention::alternate)) ==
          "(1,0)");
}

TEST_CASE("commutator invariant: six nontrivial letters") {
    const auto beta = parse_braid("b[1,2] b[1,3] b[1,2]^-1 b[1,3]^-1", 3);
    const auto image = pi(tilde_phi(beta));
    CHECK(image.letters.size() == 24);
    CHECK(format(image) ==
          "a[1,2,3] a[1,2,4] a[1,2,3] a[1,2,4] a[1,2,4] a[1,2,3] a[1,3,4] "
          "a[1,2,3] a[1,3,4] a[1,2,3] a[1,2,3] a[1,2,4] a[1,2,4] a[1,2,3] "
          "a[1,2,4] a[1,2,3] a[1,2,4] a[1,2,3] a[1,2,3] a[1,3,4] a[1,2,3] "
          "a[1,3,4] a[1,2,3] a[1,2,4]");
    const TripleSelector sel(1, 2, 3, 4);
    const auto red = reduce(w_invariant(image, sel));
    CHECK(red.letters.size() == 6);
    CHECK(format(red) == "(0,0)(1,1)(1,0)(0,0)(1,1)(1,0)");
}

TEST_CASE("the plain image of the commutator is trivial") {
    const auto beta = parse_braid("b[1,2] b[1,3] b[1,2]^-1 b[1,3]^-1", 3);
    const auto image = phi(beta);
    CHECK(image.letters.size() == 12);
    const TripleSelector sel(1, 2, 3, 3);
    CHECK(reduce(w_invariant(image, sel)).letters.empty());
}

TEST_CASE("the two a[2,4,7] occurrences in the image of b[2,4]") {
    const auto image = pi(tilde_phi(parse_braid("b[2,4]", 6)));
    const TripleSelector sel(2, 4, 7, 7);
    const auto occs = occurrence_indices(image, sel);
    REQUIRE(occs.size() == 2);
    CHECK(occs[0].position == 7);
    CHECK(occs[1].position == 12);
    CHECK(format(occs[0].index) == "((0,0),(1,1),(1,0),(1,0))");
    CHECK(format(occs[1].index) == "((1,0),(0,1),(0,0),(0,0))");

    const auto occs3 =
        occurrence_indices(image, sel, IndexConvention::alternate);
    CHECK(format(occs3[0].index) == "((0,0),(1,0),(1,1),(1,1))");
    CHECK(format(occs3[1].index) == "((1,1),(0,1),(0,0),(0,0))");
}

TEST_CASE("single-generator invariants at n=3") {
    const auto b12 = parse_braid("b[1,2]", 3);
    const auto b13 = parse_braid("b[1,3]", 3);
    const auto b23 = parse_braid("b[2,3]", 3);
    CHECK(reduced_text(b12, 1, 2, 3) == "(0,0)(1,0)");
    CHECK(reduced_text(b23, 2, 3, 1) == "(1,1)(0,0)");
    // the raw invariant of b13 has four letters, the reduced form two
    const TripleSelector sel(1, 2, 3, 4);
    const auto raw = tilde_w_invariant(tilde_phi(b13), sel);
    CHECK(format(raw) == "(1,0)(1,1)(1,0)(1,0)");
    CHECK(reduced_text(b13, 1, 3, 2) == "(1,0)(1,1)");
    // the square of b13 does NOT reduce to empty
    CHECK(reduced_text(parse_braid("b[1,3] b[1,3]", 3), 1, 3, 2) ==
          "(1,0)(1,1)(1,0)(1,1)");
}

TEST_CASE("reduce") {
    const IndexLetter x{tri(1, 2, 3).t, 4, {{1, 0}}};
    const IndexLetter z{tri(1, 2, 3).t, 4, {{0, 0}}};
    const IndexLetter y{tri(1, 2, 3).t, 4, {{1, 1}}};
    auto fp = [](std::vector<IndexLetter> ls) {
        return FreeProductWord{tri(1, 2, 3).t, 4, std::move(ls)};
    };
    CHECK(reduce(fp({x, x})).letters.empty());
    CHECK(reduce(fp({x, z, z, x})).letters.empty());
    CHECK(format(reduce(fp({x, z, y}))) == "(1,0)(0,0)(1,1)");
    CHECK(reduce(fp({})).letters.empty());
    // fixed point
    const auto r = reduce(fp({x, z, z, y, x, x, y}));
    CHECK(reduce(r) == r);
}

TEST_CASE("reduction is independent of deletion order") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        FreeProductWord w{tri(1, 2, 3).t, 5, {}};
        const int len = 2 + trial % 10;
        for (int p = 0; p < len; ++p) {
            IndexLetter l{tri(1, 2, 3).t, 5, {}};
            l.values = {{pick(rng) % 2, pick(rng) % 2},
                        {pick(rng) % 2, pick(rng) % 2}};
            w.letters.push_back(l);
        }
        // randomized deletion order
        auto letters = w.letters;
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> sites;
            for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
                if (letters[p] == letters[p + 1]) sites.push_back(p);
            }
            if (!sites.empty()) {
                std::uniform_int_distribution<std::size_t> which(
                    0, sites.size() - 1);
                const std::size_t p = sites[which(rng)];
                letters.erase(letters.begin() + p, letters.begin() + p + 2);
                changed = true;
            }
        }
        CHECK(letters == reduce(w).letters);
    }
}

TEST_CASE("abelian profile") {
    CHECK(abelian_profile(parse_gn3("a[1,2,3] a[1,2,3]", 3)).trivial());
    CHECK(abelian_profile(parse_tilde("s[1,2] s[1,2]^-1", 3)).trivial());
    CHECK_FALSE(abelian_profile(parse_gn3("a[1,2,3]", 3)).trivial());
    // s[1,2] and s[2,1] are distinct letters with separate sums
    const auto p = abelian_profile(tilde_phi(parse_braid("b[1,2]", 3)));
    CHECK(p.sigma_sum.at({1, 2}) == 1);
    CHECK(p.sigma_sum.at({2, 1}) == 1);
    CHECK(p.a_parity.at(tri(1, 2, 3)) == 0);
    CHECK_FALSE(p.trivial());
}

TEST_CASE("relator shadow: trivial invariants and abelian profiles") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& r : pb_relators(n)) {
            const auto image = tilde_phi(r.word);
            CHECK(abelian_profile(image).trivial());
            const auto projected = pi(image);
            for (int i = 1; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 1; ++j)
                    for (int k = j + 1; k <= n + 1; ++k) {
                        const TripleSelector sel(i, j, k, n + 1);
                        CAPTURE(n);
                        CAPTURE(format(r.word));
                        CHECK(reduce(w_invariant(projected, sel))
                                  .letters.empty());
                        CHECK(reduce(w_invariant(projected, sel,
                                                 IndexConvention::alternate))
                                  .letters.empty());
                    }
        }
    }
}

TEST_CASE("invariants are preserved by single rewrite steps") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> idx(1, 4);
    auto random_word = [&](int len) {
        Gn3Word w{4, {}};
        for (int p = 0; p < len; ++p) {
            int i = idx(rng), j = idx(rng), k = idx(rng);
            while (j == i) j = idx(rng);
            while (k == i || k == j) k = idx(rng);
            w.letters.push_back(tri(i, j, k));
        }
        return w;
    };
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = random_word(3 + trial % 6);
        for (const auto& s : rewrite_steps(w, {true, w.letters.size() + 2})) {
            ++checked;
            for (int i = 1; i <= 4; ++i)
                for (int j = i + 1; j <= 4; ++j)
                    for (int k = j + 1; k <= 4; ++k) {
                        const TripleSelector sel(i, j, k, 4);
                        CAPTURE(format(w));
                        CAPTURE(s.rule);
                        CHECK(reduce(w_invariant(w, sel)) ==
                              reduce(w_invariant(s.result, sel)));
                    }
            if (s.direction == "delete") {
                // the two deleted letters carry equal indices
                for (int i = 1; i <= 4; ++i)
                    for (int j = i + 1; j <= 4; ++j)
                        for (int k = j + 1; k <= 4; ++k) {
                            if (w.letters[s.position] != tri(i, j, k))
                                continue;
                            const TripleSelector sel(i, j, k, 4);
                            CHECK(occurrence_index(w, s.position, sel) ==
                                  occurrence_index(w, s.position + 1, sel));
                        }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("selector validation") {
    CHECK_THROWS_AS(TripleSelector(1, 2, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(TripleSelector(1, 1, 2, 4), std::invalid_argument);
    const auto w = parse_tilde("a[1,2,3]", 3);
    CHECK_THROWS_AS(tilde_w_invariant(w, TripleSelector(1, 2, 3, 3)),
                    std::invalid_argument);
}
