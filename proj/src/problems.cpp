#include "intreg/problems.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

namespace intreg {

std::string to_string(Case c) {
    switch (c) {
        case Case::A: return "A";
        case Case::B: return "B";
        case Case::C: return "C";
        case Case::SpecialMinCut: return "special-mincut";
        case Case::RedBlueA: return "red-blue-A";
        case Case::NotSupported: return "not-supported";
    }
    return "?";
}

std::string to_string(ParamRole r) {
    switch (r) {
        case ParamRole::LowerBound: return "lower-bound";
        case ParamRole::UpperBound: return "upper-bound";
        case ParamRole::NotParticipating: return "not-participating";
    }
    return "?";
}

std::uint64_t saturate(const Nat& k) {
    static const Nat cap = Nat(std::uint64_t{1} << 63);
    return k >= cap ? (std::uint64_t{1} << 63) : static_cast<std::uint64_t>(k);
}

namespace {

using Bits = std::uint64_t;

Bits bit(int i) { return Bits{1} << i; }
int popcount(Bits b) { return std::popcount(b); }

class Budget {
public:
    explicit Budget(const SolveLimits& l) : left_(l.max_nodes) {}
    void tick() {
        if (left_-- == 0) throw SolverLimitError("solver search exceeded its node budget");
    }

private:
    std::uint64_t left_;
};

struct Dense {
    int n = 0;
    std::vector<Vertex> ids;
    std::vector<Bits> adj;
    std::vector<std::pair<int, int>> edges;

    Bits all() const { return n == 64 ? ~Bits{0} : bit(n) - 1; }
    std::vector<Vertex> vertices(Bits s) const {
        std::vector<Vertex> out;
        for (int i = 0; i < n; ++i)
            if (s & bit(i)) out.push_back(ids[i]);
        return out;
    }
};

Dense densify(const Graph& g) {
    if (g.vertices.size() > 62) throw SolverLimitError("graph too large for exact solvers");
    Dense d;
    d.n = static_cast<int>(g.vertices.size());
    d.ids.assign(g.vertices.begin(), g.vertices.end());
    d.adj.assign(d.n, 0);
    auto idx = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(d.ids.begin(), d.ids.end(), v) - d.ids.begin());
    };
    for (const auto& [u, v] : g.edges) {
        int a = idx(u);
        int b = idx(v);
        d.adj[a] |= bit(b);
        d.adj[b] |= bit(a);
        d.edges.push_back({a, b});
    }
    return d;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

bool forest_mask(const Dense& d, Bits keep) {
    std::vector<int> parent(d.n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [a, b] : d.edges) {
        if (!(keep & bit(a)) || !(keep & bit(b))) continue;
        int x = find_root(parent, a);
        int y = find_root(parent, b);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

// Two-coloring of the kept vertices; side[i] = 0/1.
bool bipartite_mask(const Dense& d, Bits keep, std::vector<int>* side = nullptr) {
    std::vector<int> color(d.n, -1);
    for (int s = 0; s < d.n; ++s) {
        if (!(keep & bit(s)) || color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> todo{s};
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            Bits nb = d.adj[x] & keep;
            while (nb) {
                int y = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    todo.push_back(y);
                } else if (color[y] == color[x]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = color;
    return true;
}

std::vector<Bits> components_mask(const Dense& d, Bits keep) {
    std::vector<Bits> comps;
    Bits left = keep;
    while (left) {
        Bits comp = bit(std::countr_zero(left));
        Bits frontier = comp;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            Bits nb = d.adj[x] & keep & ~comp;
            comp |= nb;
            frontier |= nb;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

bool connected_mask(const Dense& d, Bits keep) { return components_mask(d, keep).size() <= 1; }

Bits closed(const Dense& d, int v) { return d.adj[v] | bit(v); }

Bits closed_set(const Dense& d, Bits s) {
    Bits out = s;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        out |= d.adj[v];
    }
    return out;
}

bool covers_edges(const Dense& d, Bits s) {
    for (auto [a, b] : d.edges)
        if (!(s & bit(a)) && !(s & bit(b))) return false;
    return true;
}

// First subset of `pool` (in size order, then lexicographic) satisfying pred.
template <class Pred>
std::optional<Bits> first_subset(const Dense& d, Bits pool, int min_size, int max_size, Budget& budget, Pred pred) {
    std::vector<int> items;
    for (int i = 0; i < d.n; ++i)
        if (pool & bit(i)) items.push_back(i);
    max_size = std::min<int>(max_size, static_cast<int>(items.size()));
    for (int s = std::max(min_size, 0); s <= max_size; ++s) {
        std::vector<int> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            budget.tick();
            Bits m = 0;
            for (int i : pick) m |= bit(items[i]);
            if (pred(m)) return m;
            int i = s - 1;
            while (i >= 0 && pick[i] == static_cast<int>(items.size()) - s + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool vc_branch(const Dense& d, Bits rest, int k, Bits& cover, Budget& budget) {
    budget.tick();
    int best = -1;
    int best_deg = 0;
    for (int v = 0; v < d.n; ++v) {
        if (!(rest & bit(v))) continue;
        int deg = popcount(d.adj[v] & rest);
        if (deg > best_deg) best = v, best_deg = deg;
    }
    if (best < 0) return true;
    if (k <= 0) return false;
    cover |= bit(best);
    if (vc_branch(d, rest & ~bit(best), k - 1, cover, budget)) return true;
    cover &= ~bit(best);
    Bits nb = d.adj[best] & rest;
    if (popcount(nb) <= k) {
        cover |= nb;
        if (vc_branch(d, rest & ~nb & ~bit(best), k - popcount(nb), cover, budget)) return true;
        cover &= ~nb;
    }
    return false;
}

Bits min_vc_mask(const Dense& d, Budget& budget) {
    for (int k = 0;; ++k) {
        Bits cover = 0;
        if (vc_branch(d, d.all(), k, cover, budget)) return cover;
    }
}

bool colorable(const Dense& d, int k, std::vector<int>& color, Budget& budget) {
    std::vector<int> order(d.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return popcount(d.adj[a]) > popcount(d.adj[b]); });
    color.assign(d.n, -1);
    std::function<bool(int, int)> go = [&](int i, int used) {
        budget.tick();
        if (i == d.n) return true;
        int v = order[i];
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool ok = true;
            Bits nb = d.adj[v];
            while (nb && ok) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[u] == c) ok = false;
            }
            if (!ok) continue;
            color[v] = c;
            if (go(i + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (d.n > 0 && k <= 0) return false;
    return go(0, 0);
}

bool irredundant(const Dense& d, Bits s) {
    Bits rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        bool priv = false;
        Bits cand = closed(d, v);
        while (cand && !priv) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if ((closed(d, u) & s) == bit(v)) priv = true;
        }
        if (!priv) return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> classes(const Dense& d, const std::vector<int>& color, int k) {
    std::vector<std::vector<Vertex>> out(k);
    for (int i = 0; i < d.n; ++i) out[color[i]].push_back(d.ids[i]);
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& c) { return c.empty(); }), out.end());
    return out;
}

Verdict yes() { return {true, std::nullopt}; }
Verdict no() { return {false, std::nullopt}; }
Verdict yes_set(const Dense& d, Bits s, std::string kind = "set") {
    return {true, Certificate{std::move(kind), {d.vertices(s)}, {}}};
}
Verdict yes_cut(const Dense& d, Bits a) {
    return {true, Certificate{"cut", {d.vertices(a), d.vertices(d.all() & ~a)}, {}}};
}

std::vector<std::vector<int>> bfs_all(const Dense& d) {
    std::vector<std::vector<int>> dist(d.n, std::vector<int>(d.n, -1));
    for (int s = 0; s < d.n; ++s) {
        dist[s][s] = 0;
        std::vector<int> q{s};
        for (std::size_t h = 0; h < q.size(); ++h) {
            int x = q[h];
            Bits nb = d.adj[x];
            while (nb) {
                int y = std::countr_zero(nb);
                nb &= nb - 1;
                if (dist[s][y] < 0) {
                    dist[s][y] = dist[s][x] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    return dist;
}

Bits max_cut_side(const Dense& d, Budget& budget, int& best) {
    best = -1;
    Bits best_side = 0;
    if (d.n == 0) {
        best = 0;
        return 0;
    }
    for (Bits side = 0; side < bit(d.n - 1); ++side) {
        budget.tick();
        Bits a = side << 1;
        int cut = 0;
        for (auto [x, y] : d.edges)
            if (((a >> x) & 1) != ((a >> y) & 1)) ++cut;
        if (cut > best) best = cut, best_side = a;
    }
    return best_side;
}

std::uint64_t size_of(const Graph& g) { return g.vertices.size() + g.edges.size(); }

// ---- case A -------------------------------------------------------------

Verdict solve_connectedness(const Graph& g, std::uint64_t, const SolveLimits&) {
    return is_connected(g) ? yes() : no();
}

Verdict solve_emptiness(const Graph& g, std::uint64_t, const SolveLimits&) { return g.edges.empty() ? yes() : no(); }

Verdict solve_vertex_cover(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    Bits c = min_vc_mask(d, b);
    return static_cast<std::uint64_t>(popcount(c)) <= k ? yes_set(d, c) : no();
}

Verdict solve_connected_vertex_cover(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    int lower = popcount(min_vc_mask(d, b));
    int upper = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    auto s = first_subset(d, d.all(), lower, upper, b,
                          [&](Bits m) { return covers_edges(d, m) && connected_mask(d, m); });
    return s ? yes_set(d, *s) : no();
}

Verdict solve_dominating_set(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    int upper = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) { return closed_set(d, m) == d.all(); });
    return s ? yes_set(d, *s) : no();
}

Verdict solve_connected_dominating_set(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    int upper = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    auto s = first_subset(d, d.all(), 0, upper, b,
                          [&](Bits m) { return closed_set(d, m) == d.all() && connected_mask(d, m); });
    return s ? yes_set(d, *s) : no();
}

constexpr int kDominationRadius = 2;

Verdict solve_r_dominating_set(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    std::vector<Bits> ball(d.n);
    for (int v = 0; v < d.n; ++v) {
        Bits s = bit(v);
        for (int r = 0; r < kDominationRadius; ++r) s = closed_set(d, s);
        ball[v] = s;
    }
    int upper = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) {
        Bits reach = 0;
        for (int v = 0; v < d.n; ++v)
            if (m & bit(v)) reach |= ball[v];
        return reach == d.all();
    });
    return s ? yes_set(d, *s) : no();
}

Verdict solve_diameter(const Graph& g, std::uint64_t k, const SolveLimits&) {
    Dense d = densify(g);
    auto dist = bfs_all(d);
    for (int s = 0; s < d.n; ++s)
        for (int t = 0; t < d.n; ++t)
            if (dist[s][t] < 0 || static_cast<std::uint64_t>(dist[s][t]) > k) return no();
    return yes();
}

Verdict solve_radius(const Graph& g, std::uint64_t k, const SolveLimits&) {
    Dense d = densify(g);
    auto dist = bfs_all(d);
    for (int c = 0; c < d.n; ++c) {
        bool ok = true;
        for (int t = 0; t < d.n && ok; ++t)
            if (dist[c][t] < 0 || static_cast<std::uint64_t>(dist[c][t]) > k) ok = false;
        if (ok) return yes_set(d, bit(c), "center");
    }
    return no();
}

Verdict solve_partition_connected(const Graph& g, std::uint64_t k, const SolveLimits&) {
    auto comps = connected_components(g);
    if (comps.size() > k) return no();
    return {true, Certificate{"partition", comps, {}}};
}

Verdict solve_nearly_connected(const Graph& g, std::uint64_t k, const SolveLimits&) {
    Dense d = densify(g);
    Bits largest = 0;
    for (Bits c : components_mask(d, d.all()))
        if (popcount(c) > popcount(largest)) largest = c;
    Bits removed = d.all() & ~largest;
    return static_cast<std::uint64_t>(popcount(removed)) <= k ? yes_set(d, removed) : no();
}

// ---- case B -------------------------------------------------------------

Verdict solve_independent_set(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    Bits is = d.all() & ~min_vc_mask(d, b);
    return static_cast<std::uint64_t>(popcount(is)) >= k ? yes_set(d, is) : no();
}

Verdict solve_irredundant_set(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    if (k > static_cast<std::uint64_t>(d.n)) return no();
    Bits is = d.all() & ~min_vc_mask(d, b);
    if (static_cast<std::uint64_t>(popcount(is)) >= k) return yes_set(d, is);
    // Irredundance is hereditary, so a set of size exactly k suffices.
    std::optional<Bits> found;
    std::function<void(int, Bits)> grow = [&](int from, Bits s) {
        b.tick();
        if (found) return;
        if (static_cast<std::uint64_t>(popcount(s)) == k) {
            found = s;
            return;
        }
        for (int v = from; v < d.n && !found; ++v) {
            Bits t = s | bit(v);
            if (irredundant(d, t)) grow(v + 1, t);
        }
    };
    grow(0, 0);
    return found ? yes_set(d, *found) : no();
}

Verdict solve_nonblocker(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    if (k > static_cast<std::uint64_t>(d.n)) return no();
    int upper = d.n - static_cast<int>(k);
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) { return closed_set(d, m) == d.all(); });
    return s ? yes_set(d, *s, "dominating-set") : no();
}

Verdict solve_acyclic_subgraph(const Graph& g, std::uint64_t k, const SolveLimits&) {
    Dense d = densify(g);
    std::vector<int> parent(d.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<EdgePair> forest;
    for (auto [a, b] : d.edges) {
        int x = find_root(parent, a);
        int y = find_root(parent, b);
        if (x == y) continue;
        parent[x] = y;
        forest.push_back({d.ids[a], d.ids[b]});
    }
    if (forest.size() < k) return no();
    return {true, Certificate{"edges", {}, {forest}}};
}

Verdict solve_acyclic_induced(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    if (k > static_cast<std::uint64_t>(d.n)) return no();
    int upper = d.n - static_cast<int>(k);
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) { return forest_mask(d, d.all() & ~m); });
    return s ? yes_set(d, d.all() & ~*s) : no();
}

Verdict solve_bipartite_induced(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    if (k > static_cast<std::uint64_t>(d.n)) return no();
    int upper = d.n - static_cast<int>(k);
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) { return bipartite_mask(d, d.all() & ~m); });
    return s ? yes_set(d, d.all() & ~*s) : no();
}

Verdict solve_maxcut(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    if (k == 0) return yes_cut(d, 0);
    if (k > d.edges.size()) return no();
    Budget b(l);
    int best = 0;
    Bits side = max_cut_side(d, b, best);
    return static_cast<std::uint64_t>(best) >= k ? yes_cut(d, side) : no();
}

Verdict solve_small_vertex_degree(const Graph& g, std::uint64_t k, const SolveLimits&) {
    for (Vertex v : g.vertices)
        if (g.degree(v) <= k + 1) return {true, Certificate{"vertex", {{v}}, {}}};
    return no();
}

// ---- case C -------------------------------------------------------------

Verdict solve_bipartiteness(const Graph& g, std::uint64_t, const SolveLimits&) {
    Dense d = densify(g);
    std::vector<int> side;
    if (!bipartite_mask(d, d.all(), &side)) return no();
    return {true, Certificate{"partition", classes(d, side, 2), {}}};
}

Verdict solve_forest(const Graph& g, std::uint64_t, const SolveLimits&) {
    Dense d = densify(g);
    return forest_mask(d, d.all()) ? yes() : no();
}

Verdict k_coloring(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    if (k >= static_cast<std::uint64_t>(d.n)) {
        std::vector<int> own(d.n);
        std::iota(own.begin(), own.end(), 0);
        return {true, Certificate{"partition", classes(d, own, d.n), {}}};
    }
    Budget b(l);
    std::vector<int> color;
    if (!colorable(d, static_cast<int>(k), color, b)) return no();
    return {true, Certificate{"partition", classes(d, color, static_cast<int>(k)), {}}};
}

Verdict solve_edge_bipartization(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    if (k >= d.edges.size()) return yes();
    Budget b(l);
    int best = 0;
    Bits side = max_cut_side(d, b, best);
    if (d.edges.size() - static_cast<std::size_t>(best) > k) return no();
    std::vector<EdgePair> removed;
    for (auto [x, y] : d.edges)
        if (((side >> x) & 1) == ((side >> y) & 1)) removed.push_back({d.ids[x], d.ids[y]});
    return {true, Certificate{"edges", {}, {removed}}};
}

Verdict solve_feedback_edge_set(const Graph& g, std::uint64_t k, const SolveLimits&) {
    Dense d = densify(g);
    std::vector<int> parent(d.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<EdgePair> removed;
    for (auto [a, b] : d.edges) {
        int x = find_root(parent, a);
        int y = find_root(parent, b);
        if (x == y) removed.push_back({d.ids[a], d.ids[b]});
        else parent[x] = y;
    }
    if (removed.size() > k) return no();
    return {true, Certificate{"edges", {}, {removed}}};
}

Verdict solve_feedback_vertex_set(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    int upper = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) { return forest_mask(d, d.all() & ~m); });
    return s ? yes_set(d, *s) : no();
}

Verdict solve_odd_cycle_transversal(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    Budget b(l);
    int upper = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    auto s = first_subset(d, d.all(), 0, upper, b, [&](Bits m) { return bipartite_mask(d, d.all() & ~m); });
    return s ? yes_set(d, *s) : no();
}

Verdict solve_partition_into_forests(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    Dense d = densify(g);
    if (d.n == 0) return {true, Certificate{"partition", {}, {}}};
    if (k == 0) return no();
    int kk = static_cast<int>(std::min<std::uint64_t>(k, d.n));
    Budget b(l);
    std::vector<Bits> cls(kk, 0);
    std::vector<int> color(d.n, -1);
    std::function<bool(int, int)> go = [&](int v, int used) {
        b.tick();
        if (v == d.n) return true;
        for (int c = 0; c < std::min(kk, used + 1); ++c) {
            cls[c] |= bit(v);
            if (forest_mask(d, cls[c])) {
                color[v] = c;
                if (go(v + 1, std::max(used, c + 1))) return true;
            }
            cls[c] &= ~bit(v);
        }
        return false;
    };
    if (!go(0, 0)) return no();
    return {true, Certificate{"partition", classes(d, color, kk), {}}};
}

Verdict solve_monochromatic_triangle(const Graph& g, std::uint64_t, const SolveLimits& l) {
    Dense d = densify(g);
    std::vector<std::pair<int, int>> es = d.edges;
    auto edge_index = [&](int a, int b) {
        for (std::size_t i = 0; i < es.size(); ++i)
            if ((es[i].first == a && es[i].second == b) || (es[i].first == b && es[i].second == a))
                return static_cast<int>(i);
        return -1;
    };
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < d.n; ++a)
        for (int b = a + 1; b < d.n; ++b)
            for (int c = b + 1; c < d.n; ++c)
                if ((d.adj[a] & bit(b)) && (d.adj[a] & bit(c)) && (d.adj[b] & bit(c)))
                    tris.push_back({edge_index(a, b), edge_index(a, c), edge_index(b, c)});
    std::vector<int> color(es.size(), -1);
    Budget budget(l);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        budget.tick();
        if (i == es.size()) return true;
        for (int c = 0; c < 2; ++c) {
            color[i] = c;
            bool ok = true;
            for (const auto& t : tris) {
                if (color[t[0]] < 0 || color[t[1]] < 0 || color[t[2]] < 0) continue;
                if (color[t[0]] == color[t[1]] && color[t[1]] == color[t[2]]) ok = false;
            }
            if (ok && go(i + 1)) return true;
        }
        color[i] = -1;
        return false;
    };
    if (!go(0)) return no();
    Certificate cert{"edge-partition", {}, {{}, {}}};
    for (std::size_t i = 0; i < es.size(); ++i)
        cert.edge_sets[color[i]].push_back({d.ids[es[i].first], d.ids[es[i].second]});
    return {true, cert};
}

// ---- special ------------------------------------------------------------

// Stoer-Wagner global minimum cut; returns (weight, one side).
std::pair<int, Bits> stoer_wagner(const Dense& d, Budget& budget) {
    int n = d.n;
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (auto [a, b] : d.edges) w[a][b] = w[b][a] = 1;
    std::vector<Bits> members(n);
    for (int i = 0; i < n; ++i) members[i] = bit(i);
    std::vector<int> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    int best = std::numeric_limits<int>::max();
    Bits best_side = 0;
    while (alive.size() > 1) {
        std::vector<int> key(n, 0);
        std::vector<bool> added(n, false);
        int prev = -1;
        int last = -1;
        for (std::size_t it = 0; it < alive.size(); ++it) {
            budget.tick();
            int sel = -1;
            for (int v : alive)
                if (!added[v] && (sel < 0 || key[v] > key[sel])) sel = v;
            added[sel] = true;
            prev = last;
            last = sel;
            for (int v : alive)
                if (!added[v]) key[v] += w[sel][v];
        }
        if (key[last] < best) {
            best = key[last];
            best_side = members[last];
        }
        members[prev] |= members[last];
        for (int v : alive) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        alive.erase(std::find(alive.begin(), alive.end(), last));
    }
    return {best, best_side};
}

Verdict solve_mincut(const Graph& g, std::uint64_t k, const SolveLimits& l) {
    if (k == 0) return no();
    Dense d = densify(g);
    if (d.n < 2) return no();
    Budget b(l);
    auto [cut, side] = stoer_wagner(d, b);
    return static_cast<std::uint64_t>(cut) <= k ? yes_cut(d, side) : no();
}

// ---- unsupported but checkable -----------------------------------------

Verdict solve_large_vertex_degree(const Graph& g, std::uint64_t k, const SolveLimits&) {
    for (Vertex v : g.vertices)
        if (g.degree(v) >= k) return {true, Certificate{"vertex", {{v}}, {}}};
    return no();
}

Verdict solve_tree(const Graph& g, std::uint64_t, const SolveLimits&) {
    Dense d = densify(g);
    return d.n > 0 && forest_mask(d, d.all()) && connected_mask(d, d.all()) ? yes() : no();
}

// ---- red-blue -----------------------------------------------------------

Verdict rbds(const RedBlueGraph& g, std::uint64_t k, const SolveLimits& l) {
    std::set<Vertex> dominated;
    for (const auto& e : g.edges) dominated.insert(e.second);
    if (dominated.size() != g.blue.size()) return no();
    auto best = exact::min_rb_dominating_set(g, l);
    if (best.size() > k) return no();
    return {true, Certificate{"set", {best}, {}}};
}

Verdict set_cover(const RedBlueGraph& g, std::uint64_t k, const SolveLimits& l) {
    return rbds(swap_colors(g), k, l);
}

std::uint64_t leaf_identity(std::uint64_t k) { return k; }
std::uint64_t leaf_one(std::uint64_t) { return 1; }

std::vector<ProblemSpec> build_registry() {
    using PR = ParamRole;
    std::vector<ProblemSpec> r;
    auto add = [&](std::string name, std::string title, Case c, PR role, auto solver) -> ProblemSpec& {
        ProblemSpec p;
        p.name = std::move(name);
        p.title = std::move(title);
        p.kind = c;
        p.role = role;
        p.solver = solver;
        r.push_back(std::move(p));
        return r.back();
    };
    auto closed = [](ProblemSpec& p) { p.subgraph_closed = true; };
    auto trivial = [](ProblemSpec& p) { p.trivial_upper = true; };
    auto leaf = [](ProblemSpec& p, std::uint64_t (*f)(std::uint64_t), std::string why) {
        p.leaf_fn = f;
        p.note = std::move(why);
    };

    add("connectedness", "Connectedness", Case::A, PR::NotParticipating, solve_connectedness);
    add("connected-vertex-cover", "Connected Vertex Cover", Case::A, PR::UpperBound, solve_connected_vertex_cover);
    add("connected-dominating-set", "Connected Dominating Set", Case::A, PR::UpperBound,
        solve_connected_dominating_set);
    add("diameter", "Diameter", Case::A, PR::UpperBound, solve_diameter);
    trivial(add("dominating-set", "Dominating Set", Case::A, PR::UpperBound, solve_dominating_set));
    closed(add("emptiness", "Emptiness", Case::A, PR::NotParticipating, solve_emptiness));
    trivial(add("partition-into-connected-components", "Partition Into Connected Components", Case::A,
                PR::UpperBound, solve_partition_connected));
    {
        auto& p = add("vertex-cover", "Vertex Cover", Case::A, PR::UpperBound, solve_vertex_cover);
        trivial(p);
        closed(p);
    }
    add("radius", "Radius", Case::A, PR::UpperBound, solve_radius);
    trivial(add("r-dominating-set", "r-Dominating Set (r = 2)", Case::A, PR::UpperBound, solve_r_dominating_set));
    trivial(add("nearly-connected", "Nearly Connected", Case::A, PR::UpperBound, solve_nearly_connected));

    leaf(add("acyclic-induced-subgraph", "Acyclic Induced Subgraph", Case::B, PR::LowerBound, solve_acyclic_induced),
         leaf_identity, "f(k)=k: k leaves induce an acyclic subgraph");
    leaf(add("acyclic-subgraph", "Acyclic Subgraph", Case::B, PR::LowerBound, solve_acyclic_subgraph), leaf_identity,
         "f(k)=k: the edges at k leaves form an acyclic subgraph");
    leaf(add("bipartite-induced-subgraph", "Bipartite Induced Subgraph", Case::B, PR::LowerBound,
             solve_bipartite_induced),
         leaf_identity, "f(k)=k: k leaves induce an empty, hence bipartite, subgraph");
    leaf(add("bipartite-subgraph", "Bipartite Subgraph", Case::B, PR::LowerBound, solve_maxcut), leaf_identity,
         "f(k)=k: the edges at k leaves form a bipartite subgraph");
    leaf(add("independent-set", "Independent Set", Case::B, PR::LowerBound, solve_independent_set), leaf_identity,
         "f(k)=k: k leaves in distinct edges are independent");
    leaf(add("irredundant-set", "Irredundant Set", Case::B, PR::LowerBound, solve_irredundant_set), leaf_identity,
         "f(k)=k: every independent set is irredundant");
    leaf(add("maxcut", "MaxCut", Case::B, PR::LowerBound, solve_maxcut), leaf_identity,
         "f(k)=k: the edges at k leaves can all be cut");
    leaf(add("nonblocker", "Nonblocker", Case::B, PR::LowerBound, solve_nonblocker), leaf_identity,
         "f(k)=k: dominate k leaves by their neighbors");
    leaf(add("small-vertex-degree", "Small Vertex Degree", Case::B, PR::UpperBound, solve_small_vertex_degree),
         leaf_one, "f(k)=1: a single leaf has degree 1 <= k+1");

    closed(add("bipartiteness", "Bipartiteness", Case::C, PR::NotParticipating, solve_bipartiteness));
    {
        auto& p = add("coloring", "Coloring", Case::C, PR::UpperBound, k_coloring);
        trivial(p);
        closed(p);
        // a leaf breaks 1-colorability; k <= 1 means "no edges" and survives merging
        p.merge_below = 2;
        p.note = "k < 2 is decided with merge representatives: adding a leaf breaks 1-colorability";
    }
    for (auto* name : {"edge-bipartization", "feedback-edge-set", "feedback-vertex-set", "odd-cycle-transversal",
                       "partition-into-forests"}) {
        std::string n = name;
        auto solver = n == "edge-bipartization"    ? solve_edge_bipartization
                      : n == "feedback-edge-set"   ? solve_feedback_edge_set
                      : n == "feedback-vertex-set" ? solve_feedback_vertex_set
                      : n == "odd-cycle-transversal" ? solve_odd_cycle_transversal
                                                     : solve_partition_into_forests;
        std::string title = n == "edge-bipartization"    ? "Edge Bipartization"
                            : n == "feedback-edge-set"   ? "Feedback Edge Set"
                            : n == "feedback-vertex-set" ? "Feedback Vertex Set"
                            : n == "odd-cycle-transversal" ? "Odd Cycle Transversal"
                                                           : "Partition Into Forests";
        auto& p = add(n, title, Case::C, PR::UpperBound, solver);
        trivial(p);
        closed(p);
    }
    closed(add("forest", "Forest", Case::C, PR::NotParticipating, solve_forest));
    for (int c : {2, 3}) {
        auto solver = [c](const Graph& g, std::uint64_t, const SolveLimits& l) { return k_coloring(g, c, l); };
        closed(add(std::to_string(c) + "-coloring", std::to_string(c) + "-Coloring", Case::C, PR::NotParticipating,
                   solver));
    }
    closed(add("monochromatic-triangle", "Monochromatic Triangle", Case::C, PR::NotParticipating,
               solve_monochromatic_triangle));

    leaf(add("mincut", "MinCut", Case::SpecialMinCut, PR::UpperBound, solve_mincut), leaf_one,
         "f(k)=c=1: cutting the edge at one leaf disconnects the graph");

    auto rb = [&](std::string name, std::string title, auto solver) {
        ProblemSpec p;
        p.name = std::move(name);
        p.title = std::move(title);
        p.kind = Case::RedBlueA;
        p.role = PR::UpperBound;
        p.red_blue = true;
        p.trivial_upper = false;
        p.rb_solver = solver;
        r.push_back(std::move(p));
    };
    rb("rbds", "Red-Blue Dominating Set", rbds);
    rb("hitting-set", "Hitting Set (red = elements, blue = sets)", rbds);
    rb("set-cover", "Set Cover (blue = sets, red = elements)", set_cover);

    auto unsupported = [&](std::string name, std::string title, std::string why, auto solver) {
        ProblemSpec p;
        p.name = std::move(name);
        p.title = std::move(title);
        p.kind = Case::NotSupported;
        p.note = std::move(why);
        p.solver = solver;
        r.push_back(std::move(p));
    };
    unsupported("large-vertex-degree", "Large Vertex Degree",
                "merging can delete edges at a high-degree vertex and separating lowers a degree; decidability is open",
                solve_large_vertex_degree);
    unsupported("tree", "Tree", "neither merging nor separating preserves being a tree", solve_tree);
    unsupported("l-path-cover", "l-Path Cover (l >= 3)", "merging and adding leaves can create longer paths",
                nullptr);
    unsupported("max-leaf-spanning-tree", "Max-Leaf Spanning Tree",
                "the leaf count of spanning trees is not preserved by the available operations", nullptr);
    return r;
}

}  // namespace

const std::vector<ProblemSpec>& registry() {
    static const std::vector<ProblemSpec> r = build_registry();
    return r;
}

const ProblemSpec& find_problem(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown problem '" + name + "'");
}

Verdict solve(const ProblemSpec& p, const GraphInstance& inst, const SolveLimits& limits) {
    if (!p.solver) throw std::invalid_argument("problem '" + p.name + "' has no simple-graph solver");
    std::uint64_t k = saturate(inst.k);
    if (p.role == ParamRole::LowerBound && k == 0) return yes();
    if (p.trivial_upper && k >= size_of(inst.graph)) return yes();
    return p.solver(inst.graph, k, limits);
}

Verdict solve_red_blue(const ProblemSpec& p, const RedBlueInstance& inst, const SolveLimits& limits) {
    if (!p.rb_solver) throw std::invalid_argument("problem '" + p.name + "' has no red-blue solver");
    return p.rb_solver(inst.graph, saturate(inst.k), limits);
}

namespace exact {

std::vector<Vertex> min_vertex_cover(const Graph& g, const SolveLimits& limits) {
    Dense d = densify(g);
    Budget b(limits);
    return d.vertices(min_vc_mask(d, b));
}

std::vector<Vertex> max_independent_set(const Graph& g, const SolveLimits& limits) {
    Dense d = densify(g);
    Budget b(limits);
    return d.vertices(d.all() & ~min_vc_mask(d, b));
}

std::vector<Vertex> min_dominating_set(const Graph& g, const SolveLimits& limits) {
    Dense d = densify(g);
    Budget b(limits);
    return d.vertices(*first_subset(d, d.all(), 0, d.n, b, [&](Bits m) { return closed_set(d, m) == d.all(); }));
}

std::vector<Vertex> min_rb_dominating_set(const RedBlueGraph& g, const SolveLimits& limits) {
    std::vector<Vertex> reds(g.red.begin(), g.red.end());
    std::vector<Vertex> blues(g.blue.begin(), g.blue.end());
    if (reds.size() > 62 || blues.size() > 62) throw SolverLimitError("red-blue graph too large for exact solvers");
    std::vector<Bits> dom(reds.size(), 0);
    for (auto [r, b] : g.edges) {
        auto i = std::lower_bound(reds.begin(), reds.end(), r) - reds.begin();
        auto j = std::lower_bound(blues.begin(), blues.end(), b) - blues.begin();
        dom[i] |= bit(static_cast<int>(j));
    }
    Bits want = blues.size() == 64 ? ~Bits{0} : bit(static_cast<int>(blues.size())) - 1;
    Dense pool;
    pool.n = static_cast<int>(reds.size());
    pool.ids = reds;
    Budget b(limits);
    auto s = first_subset(pool, pool.all(), 0, pool.n, b, [&](Bits m) {
        Bits got = 0;
        for (int i = 0; i < pool.n; ++i)
            if (m & bit(i)) got |= dom[i];
        return (got & want) == want;
    });
    if (!s) throw std::logic_error("red-blue graph with an undominated blue vertex");
    return pool.vertices(*s);
}

std::size_t chromatic_number(const Graph& g, const SolveLimits& limits) {
    Dense d = densify(g);
    Budget b(limits);
    std::vector<int> color;
    for (int k = 0;; ++k)
        if (colorable(d, k, color, b)) return static_cast<std::size_t>(k);
}

bool is_forest(const Graph& g) {
    Dense d = densify(g);
    return forest_mask(d, d.all());
}

bool is_bipartite(const Graph& g) {
    Dense d = densify(g);
    return bipartite_mask(d, d.all());
}

}  // namespace exact

}  // namespace intreg
