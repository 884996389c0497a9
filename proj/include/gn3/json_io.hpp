#pragma once

// JSON serialization for rewrite steps, certificates, search results, and
// invariant reports (nlohmann::json).

#include <string>

#include <json.hpp>

#include "gn3/cancellability.hpp"
#include "gn3/explorer.hpp"
#include "gn3/invariants.hpp"
#include "gn3/presentations.hpp"
#include "gn3/words.hpp"

namespace gn3 {

template <class Word>
nlohmann::json to_json(const RewriteStepT<Word>& step) {
    return {{"position", step.position},
            {"rule", step.rule},
            {"direction", step.direction},
            {"result", format(step.result)}};
}

inline nlohmann::json to_json(const TripleSelector& sel) {
    return {{"triple", {sel.t[0], sel.t[1], sel.t[2]}}, {"bound", sel.m}};
}

inline nlohmann::json to_json(const FreeProductWord& w) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : w.letters) letters.push_back(format(l));
    return letters;
}

inline nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json out{{"kind", to_string(cert.kind)}};
    if (cert.kind == Certificate::Kind::parity) {
        out["k"] = cert.k;
    } else if (cert.kind == Certificate::Kind::invariant_obstruction) {
        out["k"] = cert.k;
        out["selector"] = to_json(*cert.selector);
        out["reduced"] = to_json(*cert.reduced);
    }
    return out;
}

inline nlohmann::json to_json(const CandidatePair& pair) {
    return {{"left", pair.left},
            {"right", pair.right},
            {"i", pair.i},
            {"j", pair.j},
            {"between", format(pair.between)}};
}

inline nlohmann::json to_json(const SearchStats& stats) {
    return {{"explored", stats.explored},
            {"visited", stats.visited},
            {"hit_state_bound", stats.hit_state_bound},
            {"hit_depth_bound", stats.hit_depth_bound}};
}

template <class Word>
nlohmann::json to_json(const SearchResult<Word>& res) {
    nlohmann::json out{{"found", res.path.has_value()},
                       {"stats", to_json(res.stats)}};
    if (res.path) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : res.path->steps) steps.push_back(to_json(s));
        out["start"] = format(res.path->start);
        out["end"] = format(res.path->end);
        out["steps"] = steps;
    }
    return out;
}

template <class Word>
nlohmann::json to_json(const ChainReport<Word>& rep) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : rep.steps) steps.push_back(to_json(s));
    nlohmann::json out{{"ok", rep.ok}, {"steps", steps}};
    if (!rep.ok) out["failed_pair"] = rep.failed_pair;
    return out;
}

inline nlohmann::json to_json(const Relator& rel) {
    return {{"family", to_string(rel.family)},
            {"params",
             {rel.params[0], rel.params[1], rel.params[2], rel.params[3]}},
            {"word", format(rel.word)}};
}

}  // namespace gn3
