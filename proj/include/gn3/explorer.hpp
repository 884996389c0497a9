#pragma once

// Bounded breadth-first search over the rewrite graph, local-rigidity
// checks, and step-by-step chain verification.
//
// The search is deterministic: neighbor expansion follows the fixed order of
// rewrite_steps (position ascending, rule id ascending, insertions last).
// States are deduplicated by exact letter sequence.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gn3/presentations.hpp"
#include "gn3/words.hpp"

namespace gn3 {

struct SearchConfig {
    std::size_t max_length = 8;
    std::size_t max_states = 1'000'000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
    bool allow_insertions = false;
};

template <class Word>
struct RewritePath {
    Word start;
    std::vector<RewriteStepT<Word>> steps;
    Word end;
};

struct SearchStats {
    std::size_t explored = 0;       // states popped and expanded
    std::size_t visited = 0;        // distinct states discovered
    bool hit_state_bound = false;
    bool hit_depth_bound = false;
};

template <class Word>
struct SearchResult {
    std::optional<RewritePath<Word>> path;
    SearchStats stats;
};

namespace detail {

inline void encode_letter(std::string& out, const TriLetter& l) {
    out += 'A';
    for (int x : l.t) out += static_cast<char>(x);
}

inline void encode_letter(std::string& out, const SigmaLetter& l) {
    out += l.sign > 0 ? 'S' : 'Z';
    out += static_cast<char>(l.i);
    out += static_cast<char>(l.j);
}

inline std::string encode(const Gn3Word& w) {
    std::string out;
    out.reserve(w.letters.size() * 4);
    for (const auto& l : w.letters) encode_letter(out, l);
    return out;
}

inline std::string encode(const TildeWord& w) {
    std::string out;
    out.reserve(w.letters.size() * 4);
    for (const auto& l : w.letters) {
        std::visit([&out](const auto& x) { encode_letter(out, x); }, l);
    }
    return out;
}

inline bool same_bound(const Gn3Word& a, const Gn3Word& b) {
    return a.m == b.m;
}

inline bool same_bound(const TildeWord& a, const TildeWord& b) {
    return a.n == b.n;
}

}  // namespace detail

template <class Word>
SearchResult<Word> bfs_connect(const Word& w1, const Word& w2,
                               const SearchConfig& cfg) {
    if (!detail::same_bound(w1, w2)) {
        throw std::invalid_argument("bfs_connect: bound mismatch");
    }
    SearchResult<Word> res;
    if (w1 == w2) {
        res.path = RewritePath<Word>{w1, {}, w2};
        res.stats.visited = 1;
        return res;
    }

    struct Node {
        std::int64_t parent = -1;
        RewriteStepT<Word> step;
        std::size_t depth = 0;
    };
    const RewriteOptions opt{cfg.allow_insertions, cfg.max_length};
    const std::string goal = detail::encode(w2);

    std::vector<Word> states{w1};
    std::vector<Node> nodes{Node{}};
    std::unordered_map<std::string, std::size_t> seen{{detail::encode(w1), 0}};
    std::queue<std::size_t> frontier;
    frontier.push(0);

    auto build_path = [&](std::size_t id) {
        RewritePath<Word> path{w1, {}, states[id]};
        std::vector<RewriteStepT<Word>> rev;
        for (std::int64_t cur = static_cast<std::int64_t>(id);
             nodes[cur].parent >= 0; cur = nodes[cur].parent) {
            rev.push_back(nodes[cur].step);
        }
        path.steps.assign(rev.rbegin(), rev.rend());
        return path;
    };

    while (!frontier.empty()) {
        const std::size_t id = frontier.front();
        frontier.pop();
        if (nodes[id].depth >= cfg.max_depth) {
            res.stats.hit_depth_bound = true;
            continue;
        }
        ++res.stats.explored;
        for (auto& step : rewrite_steps(states[id], opt)) {
            if (step.result.letters.size() > cfg.max_length) continue;
            std::string key = detail::encode(step.result);
            if (seen.count(key)) continue;
            if (states.size() >= cfg.max_states) {
                res.stats.hit_state_bound = true;
                res.stats.visited = states.size();
                return res;
            }
            const std::size_t nid = states.size();
            const bool is_goal = key == goal;
            seen.emplace(std::move(key), nid);
            states.push_back(step.result);
            nodes.push_back(Node{static_cast<std::int64_t>(id), step,
                                 nodes[id].depth + 1});
            if (is_goal) {
                res.path = build_path(nid);
                res.stats.visited = states.size();
                return res;
            }
            frontier.push(nid);
        }
    }
    res.stats.visited = states.size();
    return res;
}

struct RigidityReport {
    bool rigid = false;
    std::size_t available_steps = 0;  // non-insertion steps found
};

// A word is locally rigid when no rewrite step applies without insertions:
// no adjacent equal pair, no commutation, no window reversal.
inline RigidityReport is_locally_rigid(const Gn3Word& w) {
    const auto steps = rewrite_steps(w);
    return {steps.empty(), steps.size()};
}

inline RigidityReport is_locally_rigid(const TildeWord& w) {
    const auto steps = rewrite_steps(w);
    return {steps.empty(), steps.size()};
}

template <class Word>
struct ChainReport {
    bool ok = false;
    // One entry per adjacent pair; for identical pairs a zero-step marker
    // with rule "=".
    std::vector<RewriteStepT<Word>> steps;
    // Index of the first adjacent pair with no single-step connection, or
    // npos when the whole chain verifies.
    std::size_t failed_pair = npos;

    static constexpr std::size_t npos =
        std::numeric_limits<std::size_t>::max();
};

// Confirms that each adjacent pair of words differs by exactly one relation
// application (insertions allowed), and reports the rule used per step.
template <class Word>
ChainReport<Word> verify_chain(const std::vector<Word>& words) {
    if (words.size() < 2) {
        throw std::invalid_argument("verify_chain requires at least 2 words");
    }
    ChainReport<Word> rep;
    for (std::size_t p = 0; p + 1 < words.size(); ++p) {
        const Word& u = words[p];
        const Word& v = words[p + 1];
        if (!detail::same_bound(u, v)) {
            throw std::invalid_argument("verify_chain: bound mismatch");
        }
        if (u == v) {
            rep.steps.push_back({0, "=", "none", v});
            continue;
        }
        const RewriteOptions opt{true, std::max(u.letters.size() + 2,
                                                v.letters.size())};
        bool found = false;
        for (auto& step : rewrite_steps(u, opt)) {
            if (step.result == v) {
                rep.steps.push_back(std::move(step));
                found = true;
                break;
            }
        }
        if (!found) {
            rep.failed_pair = p;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace gn3
