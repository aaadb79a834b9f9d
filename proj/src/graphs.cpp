#include "intreg/graphs.hpp"

#include <algorithm>
#include <string>

namespace intreg {

EdgePair normalized(Vertex u, Vertex v) { return u < v ? EdgePair{u, v} : EdgePair{v, u}; }

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw GraphError("loop on vertex " + std::to_string(u));
    vertices.insert(u);
    vertices.insert(v);
    edges.insert(normalized(u, v));
}

bool Graph::has_edge(Vertex u, Vertex v) const { return u != v && edges.count(normalized(u, v)) != 0; }

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::map<Vertex, std::vector<Vertex>> Graph::adjacency() const {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (Vertex v : vertices) adj[v];
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    auto adj = g.adjacency();
    std::set<Vertex> seen;
    std::vector<std::vector<Vertex>> out;
    for (Vertex root : g.vertices) {
        if (seen.count(root)) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> todo{root};
        seen.insert(root);
        while (!todo.empty()) {
            Vertex x = todo.back();
            todo.pop_back();
            comp.push_back(x);
            for (Vertex y : adj[x])
                if (seen.insert(y).second) todo.push_back(y);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Vertex fresh_vertex(const Graph& g) {
    Vertex v = 0;
    for (Vertex x : g.vertices) {
        if (x == v) ++v;
        else if (x > v) break;
    }
    return v;
}

Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep) {
    Graph h;
    for (Vertex v : g.vertices)
        if (keep.count(v)) h.vertices.insert(v);
    for (const auto& e : g.edges)
        if (keep.count(e.first) && keep.count(e.second)) h.edges.insert(e);
    return h;
}

namespace {
void require(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}
}  // namespace

Graph merge(const Graph& g, Vertex u, Vertex v) {
    require(g, u);
    require(g, v);
    if (u == v) throw GraphError("merge needs two distinct vertices");
    Vertex m = std::min(u, v);
    Graph h;
    for (Vertex x : g.vertices)
        if (x != u && x != v) h.vertices.insert(x);
    h.vertices.insert(m);
    for (auto [a, b] : g.edges) {
        if (a == u || a == v) a = m;
        if (b == u || b == v) b = m;
        if (a != b) h.edges.insert(normalized(a, b));
    }
    return h;
}

Graph rename(const Graph& g, Vertex u, Vertex v) {
    require(g, u);
    if (u == v) return g;
    if (g.has_vertex(v)) return merge(g, u, v);
    Graph h;
    for (Vertex x : g.vertices) h.vertices.insert(x == u ? v : x);
    for (auto [a, b] : g.edges) h.edges.insert(normalized(a == u ? v : a, b == u ? v : b));
    return h;
}

Graph add_leaf(const Graph& g, Vertex v) {
    require(g, v);
    Graph h = g;
    h.add_edge(v, fresh_vertex(g));
    return h;
}

Graph separate(const Graph& g, Vertex v, Vertex w) {
    require(g, v);
    require(g, w);
    if (!g.has_edge(v, w)) throw GraphError("separate: vertices are not adjacent");
    Graph h = g;
    h.edges.erase(normalized(v, w));
    h.add_edge(v, fresh_vertex(g));
    return h;
}

Graph delete_vertex(const Graph& g, Vertex v) {
    require(g, v);
    Graph h;
    for (Vertex x : g.vertices)
        if (x != v) h.vertices.insert(x);
    for (const auto& e : g.edges)
        if (e.first != v && e.second != v) h.edges.insert(e);
    return h;
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw GraphError("delete_edge: no such edge");
    Graph h = g;
    h.edges.erase(normalized(u, v));
    return h;
}

RedBlueGraph rb_merge(const RedBlueGraph& g, RbVertex u, RbVertex v) {
    if (u.color != v.color) throw GraphError("rb_merge: vertices have different colors");
    if (!g.has(u) || !g.has(v)) throw GraphError("rb_merge: unknown vertex");
    if (u.id == v.id) throw GraphError("rb_merge needs two distinct vertices");
    Vertex m = std::min(u.id, v.id);
    bool red = u.color == Color::Red;
    RedBlueGraph h;
    auto fix = [&](Vertex x) { return (x == u.id || x == v.id) ? m : x; };
    for (Vertex r : g.red) h.red.insert(red ? fix(r) : r);
    for (Vertex b : g.blue) h.blue.insert(red ? b : fix(b));
    for (auto [r, b] : g.edges) h.edges.insert(red ? EdgePair{fix(r), b} : EdgePair{r, fix(b)});
    return h;
}

RedBlueGraph rb_cleanup_delete(const RedBlueGraph& g, RbVertex x) {
    if (!g.has(x)) throw GraphError("rb_cleanup_delete: unknown vertex");
    bool red = x.color == Color::Red;
    RedBlueGraph h;
    std::set<Vertex> touched;
    for (auto [r, b] : g.edges) {
        if ((red ? r : b) == x.id) {
            touched.insert(red ? b : r);
            continue;
        }
        h.edges.insert({r, b});
    }
    h.red = g.red;
    h.blue = g.blue;
    (red ? h.red : h.blue).erase(x.id);
    // Neighbors that lost their last edge disappear as well.
    for (Vertex y : touched) {
        bool alive = false;
        for (auto [r, b] : h.edges)
            if ((red ? b : r) == y) alive = true;
        if (!alive) (red ? h.blue : h.red).erase(y);
    }
    return h;
}

RedBlueGraph swap_colors(const RedBlueGraph& g) {
    RedBlueGraph h;
    h.red = g.blue;
    h.blue = g.red;
    for (auto [r, b] : g.edges) h.edges.insert({b, r});
    return h;
}

}  // namespace intreg
