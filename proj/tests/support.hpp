#pragma once

// Test-side generators and brute-force oracles. Nothing here calls into the
// library's simulation, determinization or enumeration code.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "intreg/automata.hpp"
#include "intreg/encoding.hpp"
#include "intreg/graphs.hpp"

namespace testing_support {

using namespace intreg;

inline const std::string kSigma = "#$1>a";

// Raw NFA as plain data, so oracles never touch Nfa internals beyond accessors.
struct Raw {
    int n = 0;
    int init = 0;
    std::set<int> finals;
    std::multimap<std::pair<int, char>, int> delta;
};

inline Raw raw_of(const Nfa& m) {
    Raw r;
    r.n = m.num_states();
    r.init = m.initial();
    for (State f : m.finals()) r.finals.insert(f);
    for (const auto& t : m.transitions()) r.delta.insert({{t.src, to_char(t.sym)}, t.dst});
    return r;
}

// Path search: does some run from p read w and end in q (or any final when q < 0)?
inline bool brute_accepts_from(const Raw& r, int p, const std::string& w, int q = -1) {
    std::set<int> cur{p};
    for (char c : w) {
        std::set<int> next;
        for (int s : cur) {
            auto [lo, hi] = r.delta.equal_range({s, c});
            for (auto it = lo; it != hi; ++it) next.insert(it->second);
        }
        cur.swap(next);
        if (cur.empty()) return false;
    }
    if (q >= 0) return cur.count(q) > 0;
    for (int s : cur)
        if (r.finals.count(s)) return true;
    return false;
}

inline bool brute_accepts(const Raw& r, const std::string& w) { return brute_accepts_from(r, r.init, w); }

// Prefix check for >1*$(>a*#>a*$)* written out by hand.
// state: 0 start, 1 in threshold, 2 hub, 3 left stem, 4 after '#', 5 right stem.
inline int enc_step(int st, char c) {
    switch (st) {
        case 0: return c == '>' ? 1 : -1;
        case 1: return c == '1' ? 1 : c == '$' ? 2 : -1;
        case 2: return c == '>' ? 3 : -1;
        case 3: return c == 'a' ? 3 : c == '#' ? 4 : -1;
        case 4: return c == '>' ? 5 : -1;
        case 5: return c == 'a' ? 5 : c == '$' ? 2 : -1;
    }
    return -1;
}

inline bool in_enc(const std::string& w) {
    int st = 0;
    for (char c : w) {
        st = enc_step(st, c);
        if (st < 0) return false;
    }
    return st == 2;
}

// All words of L(r) ∩ Enc with length ≤ max_len, by DFS over Enc prefixes.
inline std::vector<std::string> brute_enc_words(const Raw& r, std::size_t max_len, std::size_t cap = 2'000'000) {
    std::vector<std::string> out;
    std::string w;
    std::function<void(int, const std::set<int>&)> go = [&](int enc_state, const std::set<int>& states) {
        if (out.size() >= cap) return;
        if (enc_state == 2)
            for (int s : states)
                if (r.finals.count(s)) {
                    out.push_back(w);
                    break;
                }
        if (w.size() == max_len) return;
        for (char c : kSigma) {
            int e = enc_step(enc_state, c);
            if (e < 0) continue;
            std::set<int> next;
            for (int s : states) {
                auto [lo, hi] = r.delta.equal_range({s, c});
                for (auto it = lo; it != hi; ++it) next.insert(it->second);
            }
            if (next.empty()) continue;
            w.push_back(c);
            go(e, next);
            w.pop_back();
        }
    };
    go(0, {r.init});
    return out;
}

// Plain decode written independently of the library.
inline GraphInstance brute_decode(const std::string& w) {
    GraphInstance inst;
    std::size_t i = 1;
    std::size_t k = 0;
    while (w[i] == '1') ++k, ++i;
    inst.k = k;
    ++i;
    while (i < w.size()) {
        ++i;
        Vertex a = 0;
        while (w[i] == 'a') ++a, ++i;
        ++i;
        ++i;
        Vertex b = 0;
        while (w[i] == 'a') ++b, ++i;
        ++i;
        if (a == b) inst.graph.add_vertex(a);
        else inst.graph.add_edge(a, b);
        inst.graph.add_vertex(a);
        inst.graph.add_vertex(b);
    }
    return inst;
}

inline Nfa random_nfa(std::mt19937& rng, int n, double density, const std::string& alphabet = kSigma) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Transition> ts;
    for (int p = 0; p < n; ++p)
        for (char c : alphabet)
            for (int q = 0; q < n; ++q)
                if (u(rng) < density) ts.push_back({p, *symbol_from_char(c), q});
    std::vector<State> finals;
    for (int q = 0; q < n; ++q)
        if (u(rng) < 0.4) finals.push_back(q);
    if (finals.empty()) finals.push_back(n - 1);
    return Nfa(n, 0, finals, ts);
}

inline Graph random_graph(std::mt19937& rng, int max_vertices, double p_edge) {
    std::uniform_int_distribution<int> nv(0, max_vertices);
    std::uniform_real_distribution<double> u(0, 1);
    Graph g;
    int n = nv(rng);
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (u(rng) < p_edge) g.add_edge(a, b);
    return g;
}

inline RedBlueGraph random_red_blue(std::mt19937& rng, int max_side, double p_edge) {
    std::uniform_int_distribution<int> nv(0, max_side);
    std::uniform_real_distribution<double> u(0, 1);
    RedBlueGraph g;
    int r = nv(rng), b = nv(rng);
    for (int i = 0; i < r; ++i) g.red.insert(i);
    for (int i = 0; i < b; ++i) g.blue.insert(i);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < b; ++j)
            if (u(rng) < p_edge) g.add_edge(i, j);
    return g;
}

inline std::vector<Vertex> verts(const Graph& g) { return {g.vertices.begin(), g.vertices.end()}; }

// Subset brute force over a vertex list: smallest/largest size of a subset with pred.
inline int brute_min_subset(const std::vector<Vertex>& vs, const std::function<bool(const std::set<Vertex>&)>& pred) {
    int n = static_cast<int>(vs.size());
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<Vertex> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(vs[i]);
        if ((best < 0 || static_cast<int>(s.size()) < best) && pred(s)) best = static_cast<int>(s.size());
    }
    return best;
}

inline int brute_max_subset(const std::vector<Vertex>& vs, const std::function<bool(const std::set<Vertex>&)>& pred) {
    int n = static_cast<int>(vs.size());
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<Vertex> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(vs[i]);
        if (static_cast<int>(s.size()) > best && pred(s)) best = static_cast<int>(s.size());
    }
    return best;
}

inline int brute_vc(const Graph& g) {
    return brute_min_subset(verts(g), [&](const std::set<Vertex>& s) {
        for (const auto& [a, b] : g.edges)
            if (!s.count(a) && !s.count(b)) return false;
        return true;
    });
}

inline int brute_is(const Graph& g) {
    return brute_max_subset(verts(g), [&](const std::set<Vertex>& s) {
        for (const auto& [a, b] : g.edges)
            if (s.count(a) && s.count(b)) return false;
        return true;
    });
}

inline int brute_ds(const Graph& g) {
    return brute_min_subset(verts(g), [&](const std::set<Vertex>& s) {
        for (Vertex v : g.vertices) {
            if (s.count(v)) continue;
            bool hit = false;
            for (Vertex u : s)
                if (g.has_edge(u, v)) hit = true;
            if (!hit) return false;
        }
        return true;
    });
}

// Smallest red set dominating all blue vertices, -1 if impossible.
inline int brute_rbds(const RedBlueGraph& g) {
    std::vector<Vertex> reds(g.red.begin(), g.red.end());
    return brute_min_subset(reds, [&](const std::set<Vertex>& s) {
        for (Vertex b : g.blue) {
            bool hit = false;
            for (Vertex r : s)
                if (g.edges.count({r, b})) hit = true;
            if (!hit) return false;
        }
        return true;
    });
}

inline bool brute_colorable(const Graph& g, int c) {
    auto vs = verts(g);
    std::vector<int> col(vs.size(), 0);
    std::map<Vertex, std::size_t> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
    while (true) {
        bool ok = true;
        for (const auto& [a, b] : g.edges)
            if (col[idx[a]] == col[idx[b]]) ok = false;
        if (ok) return true;
        std::size_t i = 0;
        while (i < col.size() && ++col[i] == c) col[i++] = 0;
        if (i == col.size()) return false;
    }
}

}  // namespace testing_support
