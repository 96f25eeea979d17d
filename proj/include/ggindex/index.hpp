#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ggindex {

/// Proximity counts for one edge uv: n_u vertices are strictly closer to u,
/// n_v strictly closer to v. Equidistant vertices count for neither side.
struct EdgeProximity {
    Vertex u = 0;
    Vertex v = 0;
    std::size_t n_u = 0;
    std::size_t n_v = 0;
    double term = 0.0;
};

struct IndexReport {
    double total = 0.0;
    std::vector<EdgeProximity> per_edge;  // sorted by (u, v)
};

/// sqrt(num / den) with num and den formed exactly as integers.
inline double sqrt_ratio(long long num, long long den) {
    return std::sqrt(static_cast<double>(num) / static_cast<double>(den));
}

/// The per-edge term sqrt((a + b - 2) / (a * b)) for positive integer counts.
inline double proximity_term(std::size_t a, std::size_t b) {
    return sqrt_ratio(static_cast<long long>(a + b) - 2, static_cast<long long>(a * b));
}

namespace detail {

inline void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw GraphError(std::string(op) + ": graph is disconnected");
}

inline void require_edge(const Graph& g, Vertex u, Vertex v, const char* op) {
    if (!g.has_edge(u, v)) {
        throw GraphError(std::string(op) + ": (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not an edge");
    }
}

inline EdgeProximity proximity_from_rows(const std::vector<std::uint32_t>& du,
                                         const std::vector<std::uint32_t>& dv, Vertex u, Vertex v) {
    EdgeProximity e{u, v, 0, 0, 0.0};
    for (std::size_t w = 0; w < du.size(); ++w) {
        if (du[w] < dv[w]) ++e.n_u;
        else if (dv[w] < du[w]) ++e.n_v;
    }
    e.term = proximity_term(e.n_u, e.n_v);
    return e;
}

}  // namespace detail

inline EdgeProximity edge_proximity(const Graph& g, Vertex u, Vertex v) {
    detail::require_edge(g, u, v, "edge_proximity");
    detail::require_connected(g, "edge_proximity");
    return detail::proximity_from_rows(bfs_distances(g, u), bfs_distances(g, v), u, v);
}

/// Graovac-Ghorbani index with its per-edge breakdown.
inline IndexReport abc_gg(const Graph& g) {
    if (g.order() < 2) throw GraphError("abc_gg: graph needs at least two vertices");
    detail::require_connected(g, "abc_gg");
    auto dist = distance_matrix(g);
    IndexReport report;
    report.per_edge.reserve(g.size());
    for (auto [u, v] : g.edges()) {
        report.per_edge.push_back(detail::proximity_from_rows(dist[u], dist[v], u, v));
        report.total += report.per_edge.back().term;
    }
    return report;
}

inline double abc_gg_value(const Graph& g) { return abc_gg(g).total; }

/// Degree-based atom-bond connectivity index.
inline double abc_classic(const Graph& g) {
    if (g.order() < 2) throw GraphError("abc_classic: graph needs at least two vertices");
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) == 0) {
            throw GraphError("abc_classic: isolated vertex " + std::to_string(u));
        }
    }
    detail::require_connected(g, "abc_classic");
    double total = 0.0;
    for (auto [u, v] : g.edges()) total += proximity_term(g.degree(u), g.degree(v));
    return total;
}

}  // namespace ggindex
