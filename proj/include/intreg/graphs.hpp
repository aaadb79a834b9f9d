#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace intreg {

using Vertex = std::int64_t;
using EdgePair = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph; edges are stored as (min, max).
struct Graph {
    std::set<Vertex> vertices;
    std::set<EdgePair> edges;

    void add_vertex(Vertex v) { vertices.insert(v); }
    // Adds both endpoints. Throws on loops.
    void add_edge(Vertex u, Vertex v);
    bool has_vertex(Vertex v) const { return vertices.count(v) != 0; }
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::map<Vertex, std::vector<Vertex>> adjacency() const;

    bool operator==(const Graph&) const = default;
    auto operator<=>(const Graph&) const = default;
};

EdgePair normalized(Vertex u, Vertex v);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
Vertex fresh_vertex(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep);

Graph merge(const Graph& g, Vertex u, Vertex v);
Graph rename(const Graph& g, Vertex u, Vertex v);
Graph add_leaf(const Graph& g, Vertex v);
Graph separate(const Graph& g, Vertex v, Vertex w);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

enum class Color { Red, Blue };

struct RbVertex {
    Color color;
    Vertex id;
};

// Edges are stored as (red id, blue id); the two colors use separate id spaces.
struct RedBlueGraph {
    std::set<Vertex> red;
    std::set<Vertex> blue;
    std::set<EdgePair> edges;

    void add_edge(Vertex r, Vertex b) {
        red.insert(r);
        blue.insert(b);
        edges.insert({r, b});
    }
    bool has(RbVertex x) const { return (x.color == Color::Red ? red : blue).count(x.id) != 0; }

    bool operator==(const RedBlueGraph&) const = default;
    auto operator<=>(const RedBlueGraph&) const = default;
};

RedBlueGraph rb_merge(const RedBlueGraph& g, RbVertex u, RbVertex v);
RedBlueGraph rb_cleanup_delete(const RedBlueGraph& g, RbVertex x);
RedBlueGraph swap_colors(const RedBlueGraph& g);

}  // namespace intreg
