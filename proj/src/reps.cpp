#include "intreg/reps.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace intreg {

TokenSets token_sets(const Nfa& m) {
    TokenSets ts;
    int n = m.num_states();
    ts.num_states = n;
    ts.initial = m.initial();
    for (State p = 0; p < n; ++p) {
        ts.K.push_back(intersect(sub_automaton(m, m.initial(), p), threshold_tokens_nfa()));
        ts.K_finite.push_back(is_finite(ts.K.back()));
    }
    ts.V.resize(n);
    ts.VG.resize(n);
    ts.V_finite.assign(n, std::vector<bool>(n, true));
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            // Vertex tokens never start at the initial state; this also keeps >$ a threshold only.
            if (p == m.initial()) ts.V[p].push_back(Nfa(1, 0, {}, {}));
            else ts.V[p].push_back(intersect(sub_automaton(m, p, q), vertex_tokens_nfa()));
            ts.VG[p].push_back(strip_suffix(ts.V[p][q], 1));
            ts.V_finite[p][q] = is_finite(ts.V[p][q]);
        }
    }
    return ts;
}

const std::vector<Token>& RepFunction::at(State p, State q) const {
    static const std::vector<Token> none;
    auto it = table_.find({p, q});
    return it == table_.end() ? none : it->second;
}

void RepFunction::add(State p, State q, const Token& t) {
    auto& v = table_[{p, q}];
    if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
}

std::size_t RepFunction::total_tokens() const {
    std::size_t n = 0;
    for (const auto& [k, v] : table_) n += v.size();
    return n;
}

RepFunction union_reps(const std::vector<RepFunction>& parts) {
    int n = 0;
    for (const auto& r : parts) n = std::max(n, r.num_states());
    RepFunction out(n);
    for (const auto& r : parts)
        for (const auto& [pq, toks] : r.table())
            for (const auto& t : toks) out.add(pq.first, pq.second, t);
    return out;
}

std::vector<Token> pick_threshold(const Nfa& K, const Nat& k) {
    std::vector<Token> out;
    if (is_empty(K)) return out;
    if (is_finite(K)) {
        ShortlexEnumerator it(K);
        while (auto w = it.next()) out.push_back(*as_threshold_token(*w));
        return out;
    }
    Nat j0 = k > 2 ? Nat(k - 2) : Nat(0);
    PowerOrbit orbit(K, step(K, singleton(K, K.initial()), Symbol::Start), Symbol::One);
    std::size_t span = orbit.preperiod() + orbit.period();
    for (std::size_t d = 0; d <= span; ++d) {
        Nat j = j0 + d;
        if (intersects_finals(K, step(K, orbit.at(j), Symbol::Dollar))) {
            out.push_back(threshold_token(j));
            return out;
        }
    }
    throw std::logic_error("pick_threshold: infinite threshold set without a long member");
}

RepFunction pick_threshold_all(const TokenSets& ts, const Nat& k) {
    RepFunction rep(ts.num_states);
    for (State p = 0; p < ts.num_states; ++p)
        for (const auto& t : pick_threshold(ts.K[p], k)) rep.add(ts.initial, p, t);
    return rep;
}

namespace {

bool allowed(Symbol s, Terminators which) {
    if (s == Symbol::Hash) return which != Terminators::RightOnly;
    if (s == Symbol::Dollar) return which != Terminators::LeftOnly;
    return false;
}

// Joint run of >a^i from every state; the sequence is eventually periodic.
class StemSweep {
public:
    explicit StemSweep(const Nfa& m) : m_(m) {
        for (State p = 0; p < m.num_states(); ++p)
            cur_.push_back(step(m, singleton(m, p), Symbol::Start));
    }

    // Returns false once the joint configuration repeats.
    bool fresh() { return seen_.insert(cur_).second; }
    void advance() {
        for (auto& s : cur_) s = step(m_, s, Symbol::A);
    }
    const std::vector<StateSet>& current() const { return cur_; }

private:
    const Nfa& m_;
    std::vector<StateSet> cur_;
    std::set<std::vector<StateSet>> seen_;
};

std::vector<StatePair> type_of(const Nfa& m, const std::vector<StateSet>& reach, Terminators which) {
    std::set<StatePair> s;
    for (State p = 0; p < m.num_states(); ++p)
        for (State r = 0; r < m.num_states(); ++r) {
            if (p == m.initial() || !reach[p][r]) continue;
            for (const auto& t : m.out(r))
                if (allowed(t.sym, which)) s.insert({p, t.dst});
        }
    return {s.begin(), s.end()};
}

}  // namespace

std::map<std::vector<StatePair>, std::size_t> stem_types(const Nfa& m, Terminators which) {
    std::map<std::vector<StatePair>, std::size_t> first;
    StemSweep sweep(m);
    for (std::size_t i = 0; sweep.fresh(); ++i, sweep.advance()) {
        auto type = type_of(m, sweep.current(), which);
        if (!type.empty()) first.emplace(std::move(type), i);
    }
    return first;
}

RepFunction pick_merge(const Nfa& m, const TokenSets& ts, Terminators which) {
    auto types = stem_types(m, which);
    RepFunction rep(ts.num_states);
    // Visit stems in increasing order so each table entry stays shortlex sorted.
    std::vector<std::pair<std::size_t, const std::vector<StatePair>*>> order;
    for (const auto& [type, i] : types) order.push_back({i, &type});
    std::sort(order.begin(), order.end());
    for (const auto& [i, type] : order) {
        bool beaten = false;
        for (const auto& [other, j] : types) {
            if (j >= i || other.size() <= type->size()) continue;
            if (std::includes(other.begin(), other.end(), type->begin(), type->end())) {
                beaten = true;
                break;
            }
        }
        if (beaten) continue;
        for (const auto& [p, q] : *type) {
            for (TokenKind kind : {TokenKind::LeftVertex, TokenKind::RightVertex}) {
                if (kind == TokenKind::LeftVertex && which == Terminators::RightOnly) continue;
                if (kind == TokenKind::RightVertex && which == Terminators::LeftOnly) continue;
                Token t{kind, Nat(i)};
                if (contains(ts.V[p][q], TokenWord{t})) rep.add(p, q, t);
            }
        }
    }
    return rep;
}

RepFunction pick_separate(const TokenSets& ts, std::size_t s, std::size_t t) {
    RepFunction rep(ts.num_states);
    std::set<Nat> used;
    // Stems of finite sets are off limits for every infinite set, wherever they sit.
    for (State p = 0; p < ts.num_states; ++p)
        for (State q = 0; q < ts.num_states; ++q) {
            if (!ts.V_finite[p][q]) continue;
            ShortlexEnumerator it(ts.V[p][q]);
            while (auto w = it.next()) used.insert(as_vertex_token(*w)->count);
        }
    for (State p = 0; p < ts.num_states; ++p) {
        for (State q = 0; q < ts.num_states; ++q) {
            const Nfa& V = ts.V[p][q];
            if (is_empty(V)) continue;
            std::vector<Token> picked;
            ShortlexEnumerator it(V);
            if (ts.V_finite[p][q]) {
                while (auto w = it.next()) picked.push_back(*as_vertex_token(*w));
            } else {
                while (picked.size() < s) {
                    auto w = it.next();
                    if (!w) throw std::logic_error("pick_separate: infinite set ran out of stems");
                    if (w->size() < t) continue;
                    Token tok = *as_vertex_token(*w);
                    if (used.count(tok.count)) continue;
                    picked.push_back(tok);
                }
            }
            for (const auto& tok : picked) {
                rep.add(p, q, tok);
                used.insert(tok.count);
            }
        }
    }
    return rep;
}

CondensedAutomaton build_condensed(const Nfa& m, const RepFunction& rep) {
    CondensedAutomaton c{m, {}, {}};
    for (const auto& [pq, toks] : rep.table()) {
        if (toks.empty()) continue;
        c.edges.push_back({pq.first, static_cast<int>(c.substitution.size()), pq.second});
        c.substitution.push_back(toks);
    }
    return c;
}

Nfa expand(const CondensedAutomaton& c) {
    int n = c.base.num_states();
    std::vector<Transition> ts;
    for (const auto& e : c.edges) {
        for (const auto& tok : c.substitution[e.id]) {
            Word w = to_word(tok);
            State cur = e.src;
            for (std::size_t i = 0; i < w.size(); ++i) {
                State nxt = i + 1 == w.size() ? e.dst : n++;
                ts.push_back({cur, w[i], nxt});
                cur = nxt;
            }
        }
    }
    return Nfa(n, c.base.initial(), c.base.finals(), ts);
}

Nat core_length_bound(const Nfa& m, const RepFunction& rep) {
    std::set<std::pair<Nat, Nat>> factors;
    Nat n = 0;
    for (const auto& [pq, toks] : rep.table()) {
        for (const auto& l : toks) {
            n = std::max(n, l.length());
            if (l.kind != TokenKind::LeftVertex) continue;
            for (State r = 0; r < rep.num_states(); ++r)
                for (const auto& x : rep.at(pq.second, r))
                    if (x.kind == TokenKind::RightVertex) factors.insert({l.count, x.count});
        }
    }
    Nat q = m.num_states();
    Nat e = factors.size();
    return q * q * (e + 2) * e * 2 * n + n;
}

namespace {

struct Content {
    std::vector<Vertex> vertices;  // Simple only
    std::vector<EdgePair> edges;   // normalized for Simple, (red, blue) for RedBlue
    bool operator==(const Content&) const = default;
};

struct ConfigKey {
    State state;
    std::size_t thr;
    Vertex pending;  // -1 when between edge factors
    Content content;
    std::vector<State> visited;  // boundary states so far, sorted; only with simple_boundaries
    bool operator==(const ConfigKey&) const = default;
};

struct KeyHash {
    std::size_t operator()(const ConfigKey& k) const {
        std::size_t h = 0;
        boost::hash_combine(h, k.state);
        boost::hash_combine(h, k.thr);
        boost::hash_combine(h, k.pending);
        boost::hash_combine(h, k.content.vertices);
        for (const auto& e : k.content.edges) {
            boost::hash_combine(h, e.first);
            boost::hash_combine(h, e.second);
        }
        boost::hash_combine(h, k.visited);
        return h;
    }
};

struct InstanceKey {
    std::size_t thr;
    Content content;
    bool operator==(const InstanceKey&) const = default;
};

struct InstanceHash {
    std::size_t operator()(const InstanceKey& k) const {
        return KeyHash{}(ConfigKey{0, k.thr, -1, k.content, {}});
    }
};

struct Node {
    ConfigKey key;
    Nat cost;
    std::size_t parent;  // SIZE_MAX for roots
    Token token;         // token read to reach this node
    bool done = false;
};

template <class T>
void insert_sorted(std::vector<T>& v, const T& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool sub_content(const Content& a, const Content& b) {
    return std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end()) &&
           std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
}

GraphInstance simple_instance(const Content& c, const Nat& k) {
    GraphInstance g{{}, k};
    g.graph.vertices.insert(c.vertices.begin(), c.vertices.end());
    g.graph.edges.insert(c.edges.begin(), c.edges.end());
    return g;
}

}  // namespace

CoreSearchStats explore_core(const Nfa& m, const RepFunction& rep, const CoreSearch& search) {
    CoreSearchStats stats;
    const bool simple = search.interpretation == Interpretation::Simple;
    int n = m.num_states();

    // Outgoing rep tokens per state, split by kind.
    std::vector<std::vector<std::pair<State, Token>>> lefts(n), rights(n);
    std::vector<std::pair<State, Token>> thresholds;
    for (const auto& [pq, toks] : rep.table())
        for (const auto& t : toks) {
            if (t.kind == TokenKind::Threshold) {
                if (pq.first == m.initial()) thresholds.push_back({pq.second, t});
            } else {
                (t.kind == TokenKind::LeftVertex ? lefts : rights)[pq.first].push_back({pq.second, t});
            }
        }

    // to_final[q]: least total token length from q to a final state. Exact on
    // the condensed graph, so it never overestimates and finals still pop in
    // order of word length.
    std::vector<std::optional<Nat>> to_final(n);
    for (State q = 0; q < n; ++q)
        if (m.is_final(q)) to_final[q] = Nat(0);
    for (bool changed = true; changed;) {
        changed = false;
        for (State q = 0; q < n; ++q)
            for (const auto* side : {&lefts[q], &rights[q]})
                for (const auto& [r, tok] : *side) {
                    if (!to_final[r]) continue;
                    Nat via = *to_final[r] + tok.length();
                    if (!to_final[q] || via < *to_final[q]) {
                        to_final[q] = via;
                        changed = true;
                    }
                }
    }

    std::vector<Node> nodes;
    std::unordered_map<ConfigKey, std::size_t, KeyHash> index;
    // (cost + estimate, -cost, node): ties go to the deeper configuration.
    using Entry = std::tuple<Nat, Nat, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    auto push = [&](const Nat& cost, std::size_t id) {
        queue.push({cost + *to_final[nodes[id].key.state], -cost, id});
    };

    auto offer = [&](ConfigKey key, Nat cost, std::size_t parent, const Token& tok) {
        if (!to_final[key.state]) return;
        auto it = index.find(key);
        if (it != index.end()) {
            Node& old = nodes[it->second];
            if (old.done || old.cost <= cost) return;
            old.cost = cost;
            old.parent = parent;
            old.token = tok;
            push(old.cost, it->second);
            return;
        }
        if (nodes.size() >= search.max_configs)
            throw CoreLimitError("core search exceeded " + std::to_string(search.max_configs) + " configurations");
        index.emplace(key, nodes.size());
        nodes.push_back({std::move(key), cost, parent, tok});
        push(nodes.back().cost, nodes.size() - 1);
    };

    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        ConfigKey root{thresholds[i].first, i, -1, {}, {}};
        if (search.simple_boundaries) root.visited.push_back(root.state);
        offer(std::move(root), thresholds[i].second.length(), SIZE_MAX, thresholds[i].second);
    }

    std::unordered_map<InstanceKey, bool, InstanceHash> reported;
    std::map<std::tuple<State, std::size_t, Vertex>, std::vector<std::pair<Content, std::vector<State>>>> minimal;

    auto rebuild = [&](std::size_t id, CoreInstance& out) {
        std::vector<std::size_t> chain;
        for (std::size_t x = id; x != SIZE_MAX; x = nodes[x].parent) chain.push_back(x);
        std::reverse(chain.begin(), chain.end());
        out.path.push_back(m.initial());
        for (std::size_t x : chain) {
            out.witness.push_back(nodes[x].token);
            out.path.push_back(nodes[x].key.state);
        }
    };

    while (!queue.empty()) {
        auto [f, neg_cost, id] = queue.top();
        queue.pop();
        Nat cost = -neg_cost;
        if (nodes[id].done || nodes[id].cost != cost) continue;
        nodes[id].done = true;
        ++stats.configs;
        const ConfigKey key = nodes[id].key;
        const Nat& k = thresholds[key.thr].second.count;

        if (simple && key.pending < 0) {
            if (search.subgraph_dominance) {
                auto& store = minimal[{key.state, key.thr, key.pending}];
                bool dominated = false;
                for (const auto& [c, vis] : store)
                    if (sub_content(c, key.content) &&
                        std::includes(key.visited.begin(), key.visited.end(), vis.begin(), vis.end())) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                store.push_back({key.content, key.visited});
            }
            if (search.prune && search.prune(simple_instance(key.content, k))) continue;
        }

        if (key.pending < 0 && m.is_final(key.state)) {
            InstanceKey ik{key.thr, key.content};
            // Distinct thresholds may carry the same count.
            for (std::size_t j = 0; j < key.thr; ++j)
                if (thresholds[j].second.count == k) {
                    ik.thr = j;
                    break;
                }
            if (reported.emplace(ik, true).second) {
                ++stats.instances;
                CoreInstance inst;
                rebuild(id, inst);
                if (simple) {
                    inst.instance = simple_instance(key.content, k);
                } else {
                    inst.rb_instance.k = k;
                    for (const auto& [r, b] : key.content.edges) inst.rb_instance.graph.add_edge(r, b);
                }
                if (search.on_instance && search.on_instance(inst)) return stats;
            }
        }

        if (key.pending < 0) {
            for (const auto& [q, tok] : lefts[key.state]) {
                ConfigKey next{q, key.thr, tok.vertex(), key.content, key.visited};
                offer(std::move(next), cost + tok.length(), id, tok);
            }
        } else {
            for (const auto& [q, tok] : rights[key.state]) {
                ConfigKey next{q, key.thr, -1, key.content, key.visited};
                if (search.simple_boundaries) {
                    auto at = std::lower_bound(next.visited.begin(), next.visited.end(), q);
                    if (at != next.visited.end() && *at == q) continue;
                    next.visited.insert(at, q);
                }
                Vertex a = key.pending;
                Vertex b = tok.vertex();
                if (simple) {
                    insert_sorted(next.content.vertices, a);
                    insert_sorted(next.content.vertices, b);
                    if (a != b) insert_sorted(next.content.edges, normalized(a, b));
                } else {
                    insert_sorted(next.content.edges, EdgePair{a, b});
                }
                offer(std::move(next), cost + tok.length(), id, tok);
            }
        }
    }
    stats.exhausted = true;
    return stats;
}

FiniteCore finite_core(const Nfa& m, const RepFunction& rep, Interpretation interp, std::size_t max_configs) {
    FiniteCore core;
    core.interpretation = interp;
    CoreSearch search;
    search.interpretation = interp;
    search.max_configs = max_configs;
    search.on_instance = [&](const CoreInstance& inst) {
        core.instances.push_back(inst);
        return false;
    };
    explore_core(m, rep, search);
    return core;
}

Word reduce_by_deletion(const Nfa& m, const Word& w) {
    Factorization f = characteristic_factorization(m, w);
    const std::size_t limit = 2 * static_cast<std::size_t>(m.num_states()) - 1;
    while (f.factors.size() > limit) {
        bool cut = false;
        for (std::size_t i = 1; i < f.states.size() && !cut; i += 2) {
            for (std::size_t j = i + 2; j < f.states.size() && !cut; j += 2) {
                if (f.states[i] != f.states[j]) continue;
                f.factors.erase(f.factors.begin() + static_cast<long>(i), f.factors.begin() + static_cast<long>(j));
                f.states.erase(f.states.begin() + static_cast<long>(i) + 1, f.states.begin() + static_cast<long>(j) + 1);
                cut = true;
            }
        }
        if (!cut) throw std::logic_error("reduce_by_deletion: no repeated boundary state");
    }
    return to_word(f.factors);
}

}  // namespace intreg
