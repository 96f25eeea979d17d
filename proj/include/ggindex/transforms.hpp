#pragma once

#include <random>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "index.hpp"

namespace ggindex {

struct LiftResult {
    Graph graph;
    Vertex merged_vertex = 0;
    Vertex new_pendant = 0;
};

inline bool is_cut_edge(const Graph& g, Vertex u, Vertex v) {
    detail::require_edge(g, u, v, "is_cut_edge");
    return !reachable_without_edge(g, u, u, v)[v];
}

/// Orders of the two sides left after deleting the cut edge uv (u's side first).
inline std::pair<std::size_t, std::size_t> cut_side_orders(const Graph& g, Vertex u, Vertex v) {
    detail::require_edge(g, u, v, "cut_side_orders");
    auto side = reachable_without_edge(g, u, u, v);
    if (side[v]) throw GraphError("cut_side_orders: edge is not a cut edge");
    std::size_t a = 0;
    for (bool b : side) a += b;
    return {a, g.order() - a};
}

inline bool is_liftable(const Graph& g, Vertex u, Vertex v) {
    return g.has_edge(u, v) && g.degree(u) >= 2 && g.degree(v) >= 2 && is_cut_edge(g, u, v);
}

inline std::vector<Edge> liftable_edges(const Graph& g) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) >= 2 && g.degree(v) >= 2 && is_cut_edge(g, u, v)) out.emplace_back(u, v);
    }
    return out;
}

/// Edge-lifting on a non-pendant cut edge uv: delete uv, identify u and v,
/// and hang a new pendant on the identified vertex.
///
/// The identified vertex keeps min(u, v); vertices above max(u, v) shift
/// down by one and the new pendant is vertex n-1.
inline LiftResult edge_lift(const Graph& g, Vertex u, Vertex v) {
    detail::require_edge(g, u, v, "edge_lift");
    if (g.degree(u) < 2 || g.degree(v) < 2) throw GraphError("edge_lift: pendant edge cannot be lifted");
    if (!is_cut_edge(g, u, v)) throw GraphError("edge_lift: edge is not a cut edge");

    const Vertex lo = std::min(u, v), hi = std::max(u, v);
    const auto n = static_cast<Vertex>(g.order());
    auto map = [&](Vertex w) -> Vertex {
        if (w == hi) return lo;
        return w > hi ? w - 1 : w;
    };
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [a, b] : g.edges()) {
        if (a == lo && b == hi) continue;
        edges.emplace_back(map(a), map(b));
    }
    edges.emplace_back(lo, n - 1);
    // Graph rejects a multi-edge; a cut edge has no common neighbours, so
    // construction cannot fail here.
    return {Graph(g.order(), edges), lo, n - 1};
}

/// Random connected graph: a uniform labelled spanning tree (Pruefer code)
/// plus `extra` distinct random non-tree edges.
template <class Rng>
Graph random_connected_graph(std::size_t n, std::size_t extra, Rng& rng) {
    if (n < 2) throw GraphError("random_connected_graph: n must be >= 2");
    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
    } else {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        std::vector<Vertex> code(n - 2);
        for (auto& c : code) c = pick(rng);
        std::vector<std::size_t> degree(n, 1);
        for (auto c : code) ++degree[c];
        for (auto c : code) {
            Vertex leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, c);
            --degree[leaf];
            --degree[c];
        }
        Vertex a = 0;
        while (degree[a] != 1) ++a;
        Vertex b = a + 1;
        while (degree[b] != 1) ++b;
        edges.emplace_back(a, b);
    }
    std::vector<Edge> candidates;
    {
        Graph tree(n, edges);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (!tree.has_edge(a, b)) candidates.emplace_back(a, b);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::size_t i = 0; i < extra && i < candidates.size(); ++i) edges.push_back(candidates[i]);
    return Graph(n, edges);
}

/// Rejection-samples a random connected graph on 4..max_n vertices that has
/// at least one liftable edge.
template <class Rng>
Graph random_liftable_graph(std::size_t max_n, Rng& rng) {
    std::uniform_int_distribution<std::size_t> order(4, max_n);
    while (true) {
        std::size_t n = order(rng);
        std::uniform_int_distribution<std::size_t> extra(0, n / 2);
        Graph g = random_connected_graph(n, extra(rng), rng);
        if (!liftable_edges(g).empty()) return g;
    }
}

}  // namespace ggindex
