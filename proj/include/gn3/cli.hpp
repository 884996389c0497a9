#pragma once

// Command-line front end.  Every command is a thin shell over the library;
// run() is separated from main() so the test suite can drive it directly.
//
// Exit codes: 0 success, 1 domain error (malformed words, bad indices),
// 2 usage error.

#include <array>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gn3/cancellability.hpp"
#include "gn3/explorer.hpp"
#include "gn3/homomorphisms.hpp"
#include "gn3/invariants.hpp"
#include "gn3/json_io.hpp"
#include "gn3/parse.hpp"
#include "gn3/presentations.hpp"
#include "gn3/words.hpp"

namespace gn3::cli {

namespace detail {

inline std::array<int, 3> parse_triple(const std::string& text) {
    std::array<int, 3> out{};
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' ||
        c2 != ',' || !(is >> std::ws).eof()) {
        throw std::invalid_argument("triple must have the form i,j,k");
    }
    return out;
}

inline std::string resolve_word_text(const std::string& text,
                                     std::istream& in) {
    if (text != "-") return text;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline IndexConvention convention(const std::string& name) {
    return name == "alternate" ? IndexConvention::alternate
                              : IndexConvention::standard;
}

// The a-letter word an invariant-style command operates on, plus the
// selector bound: braid and sigma-augmented inputs are projected into the
// bound-(n+1) group, plain a-letter input is used as-is.
inline std::pair<Gn3Word, int> invariant_target(const std::string& kind,
                                                const std::string& text,
                                                int n) {
    if (kind == "braid") return {pi(tilde_phi(parse_braid(text, n))), n + 1};
    if (kind == "tilde") return {pi(parse_tilde(text, n)), n + 1};
    return {parse_gn3(text, n), n};
}

template <class Word>
void print_search(const SearchResult<Word>& res, const std::string& fmt,
                  std::ostream& out) {
    if (fmt == "json") {
        out << to_json(res).dump(2) << "\n";
        return;
    }
    if (res.path) {
        out << "found: path of " << res.path->steps.size() << " step(s)\n";
        out << "  " << format(res.path->start) << "\n";
        for (const auto& s : res.path->steps) {
            out << "  --[rule " << s.rule << " " << s.direction << " @"
                << s.position << "]--> " << format(s.result) << "\n";
        }
    } else {
        out << "not found within bounds (explored=" << res.stats.explored
            << ", visited=" << res.stats.visited
            << ", state_bound_hit=" << (res.stats.hit_state_bound ? "yes" : "no")
            << ")\n";
    }
}

template <class Word>
int run_explore(const std::string& task, const std::vector<Word>& words,
                const SearchConfig& cfg, const std::string& fmt,
                std::ostream& out, std::ostream& err) {
    if (task == "rigid") {
        if (words.size() != 1) {
            err << "explore --task rigid takes exactly one word\n";
            return 2;
        }
        const auto rep = is_locally_rigid(words[0]);
        if (fmt == "json") {
            out << nlohmann::json{{"rigid", rep.rigid},
                                  {"available_steps", rep.available_steps}}
                       .dump(2)
                << "\n";
        } else {
            out << (rep.rigid ? "rigid" : "not rigid") << " ("
                << rep.available_steps << " step(s) available)\n";
        }
        return 0;
    }
    if (task == "connect") {
        if (words.size() != 2) {
            err << "explore --task connect takes exactly two words\n";
            return 2;
        }
        print_search(bfs_connect(words[0], words[1], cfg), fmt, out);
        return 0;
    }
    if (words.size() < 2) {
        err << "explore --task chain takes at least two words\n";
        return 2;
    }
    const auto rep = verify_chain(words);
    if (fmt == "json") {
        out << to_json(rep).dump(2) << "\n";
    } else if (rep.ok) {
        out << "chain verified (" << rep.steps.size() << " step(s))\n";
        for (const auto& s : rep.steps) {
            out << "  rule " << s.rule << " " << s.direction << " @"
                << s.position << " -> " << format(s.result) << "\n";
        }
    } else {
        out << "chain broken at pair " << rep.failed_pair << "\n";
    }
    return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
    CLI::App app{"braid word invariants and rewriting toolkit"};
    app.require_subcommand(1);

    int n = 0;
    std::string fmt = "text";
    std::string conv_name = "standard";
    std::string word_text;
    std::vector<std::string> word_texts;
    std::string via;
    std::string triple_text;
    std::string kind = "braid";
    std::string task = "connect";
    SearchConfig cfg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "strand count / index bound")->required();
        cmd->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* relators_cmd = app.add_subcommand("relators",
                                            "list pure-braid relators");
    add_common(relators_cmd);

    auto* map_cmd = app.add_subcommand("map", "apply one of the word maps");
    add_common(map_cmd);
    map_cmd->add_option("--via", via, "map to apply")
        ->required()
        ->check(CLI::IsMember({"phi", "tilde-phi", "pr", "pi", "f"}));
    map_cmd->add_option("--triple", triple_text, "triple i,j,k (for --via f)");
    map_cmd->add_option("word", word_text, "input word ('-' reads stdin)")
        ->required();

    auto* invariant_cmd = app.add_subcommand("invariant",
                                             "free-product invariant");
    add_common(invariant_cmd);
    invariant_cmd->add_option("--triple", triple_text, "selector i,j,k")
        ->required();
    invariant_cmd->add_option("--kind", kind, "input word kind")
        ->check(CLI::IsMember({"braid", "gn3", "tilde"}));
    invariant_cmd->add_option("--index-convention", conv_name,
                              "index pairing convention")
        ->check(CLI::IsMember({"standard", "alternate"}));
    invariant_cmd->add_option("word", word_text, "input word ('-' reads stdin)")
        ->required();

    auto* indices_cmd = app.add_subcommand("indices",
                                           "per-occurrence indices");
    add_common(indices_cmd);
    indices_cmd->add_option("--triple", triple_text, "selector i,j,k")
        ->required();
    indices_cmd->add_option("--kind", kind, "input word kind")
        ->check(CLI::IsMember({"braid", "gn3", "tilde"}));
    indices_cmd->add_option("--index-convention", conv_name,
                            "index pairing convention")
        ->check(CLI::IsMember({"standard", "alternate"}));
    indices_cmd->add_option("word", word_text, "input word ('-' reads stdin)")
        ->required();

    auto* cancel_cmd = app.add_subcommand(
        "cancellable", "non-cancellability certificates for crossing pairs");
    add_common(cancel_cmd);
    cancel_cmd->add_option("--index-convention", conv_name,
                           "index pairing convention")
        ->check(CLI::IsMember({"standard", "alternate"}));
    cancel_cmd->add_option("word", word_text, "braid word ('-' reads stdin)")
        ->required();

    auto* explore_cmd = app.add_subcommand("explore",
                                           "rewrite-graph exploration");
    add_common(explore_cmd);
    explore_cmd->add_option("--task", task, "rigid | connect | chain")
        ->check(CLI::IsMember({"rigid", "connect", "chain"}));
    std::string explore_kind = "gn3";
    explore_cmd->add_option("--kind", explore_kind, "word kind")
        ->check(CLI::IsMember({"gn3", "tilde"}));
    explore_cmd->add_option("--max-length", cfg.max_length,
                            "maximum word length during search");
    explore_cmd->add_option("--max-states", cfg.max_states,
                            "maximum number of visited states");
    explore_cmd->add_option("--max-depth", cfg.max_depth,
                            "maximum path length");
    explore_cmd->add_flag("--allow-insertions", cfg.allow_insertions,
                          "enable equal-pair insertions");
    explore_cmd->add_option("words", word_texts, "input words")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*relators_cmd) {
            const auto rels = pb_relators(n);
            if (fmt == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : rels) arr.push_back(to_json(r));
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& r : rels) {
                    out << to_string(r.family) << " (" << r.params[0] << ","
                        << r.params[1] << "," << r.params[2] << ","
                        << r.params[3] << "): " << format(r.word) << "\n";
                }
            }
            return 0;
        }

        if (*map_cmd) {
            const std::string text =
                detail::resolve_word_text(word_text, in);
            std::string image;
            if (via == "phi") {
                image = format(phi(parse_braid(text, n)));
            } else if (via == "tilde-phi") {
                image = format(tilde_phi(parse_braid(text, n)));
            } else if (via == "pr") {
                image = format(pr(parse_tilde(text, n)));
            } else if (via == "pi") {
                image = format(pi(parse_tilde(text, n)));
            } else {
                if (triple_text.empty()) {
                    err << "map --via f requires --triple\n";
                    return 2;
                }
                image = format(f_ijk(parse_braid(text, n),
                                     detail::parse_triple(triple_text)));
            }
            if (fmt == "json") {
                out << nlohmann::json{{"via", via}, {"word", image}}.dump(2)
                    << "\n";
            } else {
                out << image << "\n";
            }
            return 0;
        }

        if (*invariant_cmd || *indices_cmd) {
            const std::string text =
                detail::resolve_word_text(word_text, in);
            const auto conv = detail::convention(conv_name);
            const auto [target, bound] =
                detail::invariant_target(kind, text, n);
            const auto t = detail::parse_triple(triple_text);
            const TripleSelector sel(t[0], t[1], t[2], bound);
            if (*invariant_cmd) {
                const auto raw = w_invariant(target, sel, conv);
                const auto red = reduce(raw);
                if (fmt == "json") {
                    out << nlohmann::json{{"selector", to_json(sel)},
                                          {"letters", to_json(raw)},
                                          {"reduced", to_json(red)},
                                          {"trivial", red.letters.empty()}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "letters: " << format(raw) << "\n"
                        << "reduced: " << format(red) << "\n"
                        << "trivial: "
                        << (red.letters.empty() ? "true" : "false") << "\n";
                }
            } else {
                const auto occs = occurrence_indices(target, sel, conv);
                if (fmt == "json") {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& o : occs) {
                        arr.push_back({{"position", o.position},
                                       {"index", format(o.index)}});
                    }
                    out << nlohmann::json{{"selector", to_json(sel)},
                                          {"occurrences", arr}}
                               .dump(2)
                        << "\n";
                } else {
                    for (const auto& o : occs) {
                        out << "position " << o.position << ": "
                            << format(o.index) << "\n";
                    }
                }
            }
            return 0;
        }

        if (*cancel_cmd) {
            const std::string text =
                detail::resolve_word_text(word_text, in);
            const auto conv = detail::convention(conv_name);
            const BraidWord w = parse_braid(text, n);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& pair : find_pairs(w)) {
                const auto parity = parity_check(pair, n);
                const auto obstruction =
                    invariant_obstruction(pair, n, conv);
                const bool blocked =
                    parity.kind != Certificate::Kind::inconclusive ||
                    obstruction.kind != Certificate::Kind::inconclusive;
                const std::string verdict =
                    blocked ? "non-cancellable" : "inconclusive";
                if (fmt == "json") {
                    arr.push_back(
                        {{"pair", to_json(pair)},
                         {"certificates",
                          {to_json(parity), to_json(obstruction)}},
                         {"verdict", verdict}});
                } else {
                    out << "pair (" << pair.left << "," << pair.right
                        << ") b[" << pair.i << "," << pair.j
                        << "]: " << verdict;
                    if (parity.kind == Certificate::Kind::parity) {
                        out << "; parity k=" << parity.k;
                    }
                    if (obstruction.kind ==
                        Certificate::Kind::invariant_obstruction) {
                        out << "; obstruction k=" << obstruction.k
                            << " reduced=" << format(*obstruction.reduced);
                    }
                    out << "\n";
                }
            }
            if (fmt == "json") {
                out << nlohmann::json{{"pairs", arr}}.dump(2) << "\n";
            }
            return 0;
        }

        // explore
        std::vector<std::string> texts;
        texts.reserve(word_texts.size());
        for (const auto& t : word_texts) {
            texts.push_back(detail::resolve_word_text(t, in));
        }
        if (explore_kind == "tilde") {
            std::vector<TildeWord> words;
            for (const auto& t : texts) words.push_back(parse_tilde(t, n));
            return detail::run_explore(task, words, cfg, fmt, out, err);
        }
        std::vector<Gn3Word> words;
        for (const auto& t : texts) words.push_back(parse_gn3(t, n));
        return detail::run_explore(task, words, cfg, fmt, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gn3::cli
