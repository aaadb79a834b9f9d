#pragma once

// Oracles for representative functions and cores. Shared by the gtest suite
// and the acceptance binary.

#include <tuple>

#include "intreg/engine.hpp"
#include "intreg/reps.hpp"
#include "support.hpp"

namespace testing_support {

// NFA assembled from labelled paths; intermediate states are fresh.
struct Builder {
    int n;
    std::vector<Transition> ts;

    explicit Builder(int named) : n(named) {}

    void path(int src, const std::string& word, int dst) {
        int cur = src;
        for (std::size_t i = 0; i < word.size(); ++i) {
            int nxt = i + 1 == word.size() ? dst : n++;
            ts.push_back({cur, *symbol_from_char(word[i]), nxt});
            cur = nxt;
        }
    }
    void loop(int s, char c) { ts.push_back({s, *symbol_from_char(c), s}); }
    Nfa build(std::vector<State> finals) const { return Nfa(n, 0, finals, ts); }
};

// >(t1|t2|...)$ then one edge factor: repeated ('*'), optional ('?') or once ('1').
inline Nfa hand_automaton(const std::vector<std::string>& thresholds, const std::string& factor, char mode) {
    Builder b(3);
    b.path(0, ">", 1);
    for (const auto& t : thresholds) b.path(1, t + "$", 2);
    if (mode == '*') {
        b.path(2, factor, 2);
        return b.build({2});
    }
    int end = b.n++;
    b.path(2, factor, end);
    return mode == '?' ? b.build({2, end}) : b.build({end});
}

// Tiny automata whose cores have several instances while l stays small.
inline std::vector<Nfa> hand_core_cases() {
    return {
        hand_automaton({"", "1"}, ">#>a$", '*'),  hand_automaton({"", "1"}, ">#>a$", '?'),
        hand_automaton({""}, ">#>a$", '*'),       hand_automaton({"", "1"}, ">#>$", '*'),
        hand_automaton({"", "1"}, ">a#>$", '*'),  hand_automaton({"", "1"}, ">a#>a$", '*'),
        hand_automaton({"1", "11"}, ">#>$", '*'), hand_automaton({""}, ">#>a$", '1'),
        hand_automaton({"11"}, ">a#>$", '*'),     hand_automaton({"", "1", "11"}, ">#>$", '*'),
        hand_automaton({"", "1"}, ">#>$", '?'),   hand_automaton({"1"}, ">#>a$", '?'),
    };
}

inline std::string random_enc_regex(std::mt19937& rng) {
    static const std::vector<std::string> thr = {"", "1", "11", "1*", "11*", "(11)*", "1?", "1(111)*"};
    static const std::vector<std::string> stem = {"", "a", "aa", "a*", "aa*", "(aa)*", "a(aa)*", "(a|aaa)", "aaa"};
    static const std::vector<std::string> quant = {"", "", "*", "+", "?"};
    auto pick = [&](const std::vector<std::string>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    std::string out = ">" + pick(thr) + "$";
    int groups = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int g = 0; g < groups; ++g) {
        std::string f = "(>" + pick(stem) + "#>" + pick(stem) + "$";
        if (rng() % 3 == 0) f += "|>" + pick(stem) + "#>" + pick(stem) + "$";
        out += f + ")" + pick(quant);
    }
    return out;
}

using Flat = std::set<std::tuple<int, int, std::string>>;

inline Flat flat(const RepFunction& rep) {
    Flat out;
    for (const auto& [pq, toks] : rep.table())
        for (const auto& t : toks) out.insert({pq.first, pq.second, render(t)});
    return out;
}

// type[i] = pairs (p,q), p not initial, with >a^i followed by an allowed terminator leading p to q.
// Stops when the joint configuration over all start states repeats.
inline std::vector<std::set<std::pair<int, int>>> oracle_stem_types(const Raw& r, const std::string& terms) {
    auto move = [&](const std::set<int>& from, char c) {
        std::set<int> out;
        for (int s : from) {
            auto [lo, hi] = r.delta.equal_range({s, c});
            for (auto it = lo; it != hi; ++it) out.insert(it->second);
        }
        return out;
    };
    std::vector<std::set<int>> cfg;
    for (int p = 0; p < r.n; ++p) cfg.push_back(move({p}, '>'));
    std::set<std::vector<std::set<int>>> seen;
    std::vector<std::set<std::pair<int, int>>> types;
    while (seen.insert(cfg).second) {
        std::set<std::pair<int, int>> type;
        for (int p = 0; p < r.n; ++p)
            for (char c : terms)
                if (p != r.init)
                    for (int q : move(cfg[p], c)) type.insert({p, q});
        types.push_back(type);
        for (auto& s : cfg) s = move(s, 'a');
    }
    return types;
}

// Definitional pick_merge: for every set A of pairs with a common stem, the
// least common stem is picked for each member of A.
inline Flat oracle_pick_merge(const Raw& r, Terminators which) {
    std::string terms = which == Terminators::LeftOnly ? "#" : which == Terminators::RightOnly ? "$" : "#$";
    auto types = oracle_stem_types(r, terms);
    std::set<std::pair<int, int>> all;
    for (const auto& t : types) all.insert(t.begin(), t.end());
    std::vector<std::pair<int, int>> pairs(all.begin(), all.end());
    Flat out;
    for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> A;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) A.push_back(pairs[b]);
        for (std::size_t i = 0; i < types.size(); ++i) {
            bool all_in = true;
            for (const auto& pq : A)
                if (!types[i].count(pq)) all_in = false;
            if (!all_in) continue;
            for (const auto& [p, q] : A)
                for (char c : terms) {
                    std::string tok = ">" + std::string(i, 'a') + c;
                    if (brute_accepts_from(r, p, tok, q)) out.insert({p, q, tok});
                }
            break;
        }
    }
    return out;
}

// decode of every word in L(r) ∩ Enc of length ≤ bound. Prefixes agreeing on
// everything that matters for the future are explored once, at their
// shortest length, which keeps the breadth-first sweep small.
inline std::set<GraphInstance> bounded_decodes(const Raw& r, std::size_t bound) {
    struct Key {
        int enc;
        std::set<int> states;
        long k;
        Vertex stem;
        Vertex left;
        std::set<Vertex> vs;
        std::set<EdgePair> es;
        auto operator<=>(const Key&) const = default;
    };
    std::set<GraphInstance> out;
    std::set<Key> seen;
    std::vector<Key> frontier{{0, {r.init}, 0, 0, -1, {}, {}}};
    seen.insert(frontier[0]);
    for (std::size_t len = 0;; ++len) {
        std::vector<Key> next;
        for (const Key& key : frontier) {
            if (key.enc == 2)
                for (int s : key.states)
                    if (r.finals.count(s)) {
                        GraphInstance g;
                        g.k = key.k;
                        g.graph.vertices = key.vs;
                        g.graph.edges = key.es;
                        out.insert(g);
                        break;
                    }
            if (len == bound) continue;
            for (char c : kSigma) {
                int e = enc_step(key.enc, c);
                if (e < 0) continue;
                Key nk = key;
                nk.enc = e;
                nk.states.clear();
                for (int s : key.states) {
                    auto [lo, hi] = r.delta.equal_range({s, c});
                    for (auto it = lo; it != hi; ++it) nk.states.insert(it->second);
                }
                if (nk.states.empty()) continue;
                if (key.enc == 1 && c == '1') ++nk.k;
                if ((key.enc == 2 || key.enc == 4) && c == '>') nk.stem = 0;
                if (c == 'a') ++nk.stem;
                if (key.enc == 3 && c == '#') nk.left = nk.stem;
                if (key.enc == 5 && c == '$') {
                    nk.vs.insert(nk.left);
                    nk.vs.insert(nk.stem);
                    if (nk.left != nk.stem) nk.es.insert({std::min(nk.left, nk.stem), std::max(nk.left, nk.stem)});
                    nk.left = -1;
                    nk.stem = 0;
                }
                if (seen.insert(nk).second) next.push_back(std::move(nk));
            }
        }
        if (len == bound || next.empty()) break;
        frontier.swap(next);
    }
    return out;
}

inline std::set<GraphInstance> core_set(const FiniteCore& core) {
    std::set<GraphInstance> out;
    for (const auto& c : core.instances) out.insert(c.instance);
    return out;
}

// The three recipes tried on every automaton.
inline std::vector<RepFunction> sample_reps(const Nfa& m, const TokenSets& ts) {
    std::size_t q = static_cast<std::size_t>(m.num_states());
    auto thr = pick_threshold_all(ts, 0);
    return {union_reps({thr, pick_merge(m, ts)}), union_reps({thr, pick_separate(ts, q + 1, q)}),
            union_reps({pick_threshold_all(ts, q), pick_merge(m, ts, Terminators::LeftOnly),
                        pick_merge(m, ts, Terminators::RightOnly)})};
}

// Whether >1^k$ leads p to q, for k too large to spell out. The set of states
// after each further 1 is eventually periodic; jump over whole periods.
inline bool brute_threshold_from(const Raw& r, int p, const Nat& k, int q) {
    auto move = [&](const std::set<int>& from, char c) {
        std::set<int> out;
        for (int s : from) {
            auto [lo, hi] = r.delta.equal_range({s, c});
            for (auto it = lo; it != hi; ++it) out.insert(it->second);
        }
        return out;
    };
    std::set<int> cur = move({p}, '>');
    std::map<std::set<int>, Nat> first;
    Nat i = 0;
    while (i < k) {
        auto [it, fresh] = first.try_emplace(cur, i);
        if (!fresh) {
            Nat period = i - it->second;
            i += (k - i) / period * period;
            first.clear();
            if (i == k) break;
        }
        cur = move(cur, '1');
        ++i;
    }
    return move(cur, '$').count(q) != 0;
}

// Token-preservation violations of rep on m (count, messages appended).
inline int rep_violations(const Nfa& m, const RepFunction& rep, std::vector<std::string>* why = nullptr) {
    Raw raw = raw_of(m);
    int bad = 0;
    auto fail = [&](const std::string& s) {
        ++bad;
        if (why) why->push_back(s);
    };
    for (const auto& [pq, toks] : rep.table())
        for (const auto& t : toks) {
            if (t.kind == TokenKind::Threshold && t.count > 4096) {
                if (pq.first != m.initial()) fail("threshold off the initial state");
                if (!brute_threshold_from(raw, pq.first, t.count, pq.second)) fail("long threshold not read");
                continue;
            }
            Word w = to_word(t);
            std::string s = to_string(w);
            bool shaped = t.kind == TokenKind::Threshold ? as_threshold_token(w).has_value()
                                                         : as_vertex_token(w).has_value();
            if (!shaped) fail("not a token: " + s);
            if (t.kind == TokenKind::Threshold && pq.first != m.initial()) fail("threshold off the initial state");
            if (!brute_accepts_from(raw, pq.first, s, pq.second))
                fail(s + " not read from " + std::to_string(pq.first) + " to " + std::to_string(pq.second));
        }
    return bad;
}

}  // namespace testing_support
