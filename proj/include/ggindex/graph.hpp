#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggindex {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Marker used by bfs_distances for vertices not reachable from the source.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted; every undirected edge is stored in both
/// endpoint lists. Construction validates the edge list and throws
/// GraphError naming the first offending pair.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) {
                throw GraphError("vertex out of range in edge " + describe(u, v) + " (n = " +
                                 std::to_string(n) + ")");
            }
            if (u == v) {
                throw GraphError("self-loop " + describe(u, v));
            }
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (Vertex u = 0; u < n; ++u) {
            auto& adj = adjacency_[u];
            std::sort(adj.begin(), adj.end());
            auto dup = std::adjacent_find(adj.begin(), adj.end());
            if (dup != adj.end()) {
                throw GraphError("duplicate edge " + describe(u, *dup));
            }
        }
        edge_count_ = edges.size();
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex u) const { return adjacency_.at(u); }
    std::size_t degree(Vertex u) const { return adjacency_.at(u).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= order() || v >= order()) return false;
        const auto& adj = adjacency_[u];
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    /// Each undirected edge once as (min, max), in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u) {
            for (Vertex v : adjacency_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static std::string describe(Vertex u, Vertex v) {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
    if (source >= g.order()) {
        throw GraphError("bfs source " + std::to_string(source) + " out of range");
    }
    std::vector<std::uint32_t> dist(g.order(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// All-pairs distances by repeated BFS; row u holds bfs_distances(g, u).
inline std::vector<std::vector<std::uint32_t>> distance_matrix(const Graph& g) {
    std::vector<std::vector<std::uint32_t>> d;
    d.reserve(g.order());
    for (Vertex u = 0; u < g.order(); ++u) d.push_back(bfs_distances(g, u));
    return d;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

/// Vertices reachable from `source` when the edge {skip_u, skip_v} is ignored.
inline std::vector<bool> reachable_without_edge(const Graph& g, Vertex source, Vertex skip_u,
                                                Vertex skip_v) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if ((u == skip_u && w == skip_v) || (u == skip_v && w == skip_u)) continue;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw GraphError("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

inline std::size_t pendant_count(const Graph& g) {
    std::size_t p = 0;
    for (Vertex u = 0; u < g.order(); ++u) p += g.degree(u) == 1;
    return p;
}

}  // namespace ggindex
