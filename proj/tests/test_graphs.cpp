#include <gtest/gtest.h>

#include "intreg/problems.hpp"
#include "support.hpp"

using namespace intreg;
namespace ts = testing_support;

namespace {

Graph make(std::initializer_list<EdgePair> edges, std::initializer_list<Vertex> extra = {}) {
    Graph g;
    for (auto [a, b] : edges) g.add_edge(a, b);
    for (Vertex v : extra) g.add_vertex(v);
    return g;
}

void expect_valid(const Graph& g) {
    for (const auto& [a, b] : g.edges) {
        EXPECT_LT(a, b);
        EXPECT_TRUE(g.has_vertex(a) && g.has_vertex(b));
    }
}

// Connectivity relation as a union-find over the vertex set.
std::map<Vertex, Vertex> components(const Graph& g) {
    std::map<Vertex, Vertex> id;
    for (const auto& comp : connected_components(g))
        for (Vertex v : comp) id[v] = comp.front();
    return id;
}

Vertex pick(std::mt19937& rng, const std::set<Vertex>& s) {
    auto it = s.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng));
    return *it;
}

}  // namespace

TEST(Graph, Basics) {
    Graph g = make({{2, 1}, {1, 3}});
    EXPECT_TRUE(g.has_edge(1, 2) && g.has_edge(2, 1));
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_THROW(g.add_edge(4, 4), GraphError);
    EXPECT_EQ(fresh_vertex(make({}, {0, 1, 3})), 2);
    EXPECT_TRUE(is_connected(Graph{}));
    EXPECT_FALSE(is_connected(make({}, {1, 2})));
}

TEST(Merge, Examples) {
    // u=1, w=2, v=3
    EXPECT_EQ(merge(make({{1, 2}, {2, 3}}), 1, 3), make({{1, 2}}));
    EXPECT_EQ(merge(make({{1, 3}}), 1, 3), make({}, {1}));
    EXPECT_EQ(merge(make({{1, 2}, {2, 3}, {1, 3}}), 1, 3), make({{1, 2}}));
    EXPECT_THROW(merge(make({{1, 2}}), 1, 1), GraphError);
    EXPECT_THROW(merge(make({{1, 2}}), 1, 9), GraphError);
}

TEST(Rename, Examples) {
    EXPECT_EQ(rename(make({{1, 2}}), 1, 3), make({{2, 3}}));
    EXPECT_EQ(rename(make({{1, 2}}), 1, 1), make({{1, 2}}));
    Graph path = make({{1, 2}, {2, 3}});
    Graph r = rename(path, 1, 2);
    EXPECT_EQ(r, merge(path, 1, 2));
    EXPECT_EQ(r.vertices.size(), 2u);
    EXPECT_EQ(r.edges.size(), 1u);
    EXPECT_THROW(rename(make({{1, 2}}), 7, 1), GraphError);
}

TEST(Operations, Examples) {
    EXPECT_EQ(add_leaf(make({}, {5}), 5), make({{0, 5}}));
    EXPECT_EQ(separate(make({{0, 1}}), 0, 1), make({{0, 2}}, {1}));
    // a leaf and then separating its edge is a doubled edge pulled apart
    Graph g = separate(add_leaf(make({{0, 1}}), 0), 0, 2);
    EXPECT_EQ(g, make({{0, 1}, {0, 3}}, {2}));
    EXPECT_THROW(separate(make({{0, 1}}, {2}), 0, 2), GraphError);
    EXPECT_EQ(delete_vertex(make({{0, 1}}), 0), make({}, {1}));
    EXPECT_EQ(delete_edge(make({{0, 1}}), 1, 0), make({}, {0, 1}));
    EXPECT_THROW(delete_edge(make({{0, 1}}, {2}), 0, 2), GraphError);
    EXPECT_THROW(add_leaf(Graph{}, 0), GraphError);
}

TEST(Operations, FuzzInvariants) {
    std::mt19937 rng(31);
    for (int round = 0; round < 400; ++round) {
        Graph g = ts::random_graph(rng, 10, 0.35);
        if (g.vertices.size() < 2) continue;
        Vertex u = pick(rng, g.vertices), v = pick(rng, g.vertices);
        if (u != v) {
            Graph m = merge(g, u, v);
            expect_valid(m);
            EXPECT_EQ(m.vertices.size(), g.vertices.size() - 1);
            // connectivity only coarsens on survivors; the merged id stands for both
            auto before = components(g), after = components(m);
            Vertex keep = std::min(u, v);
            auto image = [&](Vertex x) { return x == u || x == v ? keep : x; };
            for (Vertex a : g.vertices)
                for (Vertex b : g.vertices)
                    if (before[a] == before[b]) EXPECT_EQ(after[image(a)], after[image(b)]);
        }
        expect_valid(add_leaf(g, u));
        expect_valid(rename(g, u, 100));
        expect_valid(delete_vertex(g, u));
        auto adj = g.adjacency();
        if (!adj[u].empty()) {
            Vertex w = adj[u].front();
            Graph s = separate(g, u, w);
            expect_valid(s);
            EXPECT_EQ(s.edges.size(), g.edges.size());
            EXPECT_EQ(s.vertices.size(), g.vertices.size() + 1);
            expect_valid(delete_edge(g, u, w));
        }
    }
}

TEST(RedBlue, Examples) {
    RedBlueGraph g;
    g.add_edge(1, 5);
    g.add_edge(2, 5);
    RedBlueGraph m = rb_merge(g, {Color::Red, 1}, {Color::Red, 2});
    EXPECT_EQ(m.red, (std::set<Vertex>{1}));
    EXPECT_EQ(m.edges, (std::set<EdgePair>{{1, 5}}));
    RedBlueGraph one;
    one.add_edge(1, 1);
    RedBlueGraph gone = rb_cleanup_delete(one, {Color::Red, 1});
    EXPECT_TRUE(gone.red.empty() && gone.blue.empty() && gone.edges.empty());
    EXPECT_THROW(rb_merge(one, {Color::Red, 1}, {Color::Blue, 1}), GraphError);
    EXPECT_EQ(swap_colors(swap_colors(g)), g);
}

TEST(Preservation, VertexCoverUnderMerge) {
    std::mt19937 rng(32);
    for (int round = 0; round < 200; ++round) {
        Graph g = ts::random_graph(rng, 8, 0.4);
        if (g.vertices.size() < 2) continue;
        Vertex u = pick(rng, g.vertices), v = pick(rng, g.vertices);
        if (u == v) continue;
        Graph m = merge(g, u, v);
        EXPECT_LE(ts::brute_vc(m), ts::brute_vc(g));
        EXPECT_LE(exact::min_vertex_cover(m).size(), exact::min_vertex_cover(g).size());
    }
}

TEST(Preservation, IndependentSetUnderSeparateAndLeaf) {
    std::mt19937 rng(33);
    for (int round = 0; round < 200; ++round) {
        Graph g = ts::random_graph(rng, 7, 0.4);
        if (g.vertices.empty()) continue;
        Vertex u = pick(rng, g.vertices);
        Graph l = add_leaf(g, u);
        EXPECT_GE(ts::brute_is(l), ts::brute_is(g));
        EXPECT_GE(exact::max_independent_set(l).size(), exact::max_independent_set(g).size());
        auto adj = g.adjacency();
        if (adj[u].empty()) continue;
        Graph s = separate(g, u, adj[u].front());
        EXPECT_GE(ts::brute_is(s), ts::brute_is(g));
        EXPECT_GE(exact::max_independent_set(s).size(), exact::max_independent_set(g).size());
    }
}

TEST(Preservation, RedBlueDominationUnderMerge) {
    std::mt19937 rng(34);
    int checked = 0;
    for (int round = 0; round < 20000 && checked < 200; ++round) {
        RedBlueGraph g = ts::random_red_blue(rng, 5, 0.45);
        int before = ts::brute_rbds(g);
        if (before < 0) continue;
        Color c = round % 2 ? Color::Red : Color::Blue;
        const auto& side = c == Color::Red ? g.red : g.blue;
        if (side.size() < 2) continue;
        Vertex a = pick(rng, side), b = pick(rng, side);
        if (a == b) continue;
        RedBlueGraph m = rb_merge(g, {c, a}, {c, b});
        int after = ts::brute_rbds(m);
        ASSERT_GE(after, 0);
        EXPECT_LE(after, before);
        EXPECT_LE(exact::min_rb_dominating_set(m).size(), static_cast<std::size_t>(before));
        ++checked;
    }
    EXPECT_EQ(checked, 200);
}
