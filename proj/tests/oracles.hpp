// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "ggindex/graph.hpp"

namespace oracle {

using ggindex::Graph;
using ggindex::Vertex;

inline constexpr unsigned kInf = 1u << 20;

// Floyd-Warshall over the adjacency matrix.
inline std::vector<std::vector<unsigned>> all_pairs(const Graph& g) {
    std::size_t n = g.order();
    std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline double abc_gg(const Graph& g) {
    auto d = all_pairs(g);
    double total = 0.0;
    for (auto [u, v] : g.edges()) {
        double nu = 0, nv = 0;
        for (std::size_t w = 0; w < g.order(); ++w) {
            if (d[u][w] < d[v][w]) ++nu;
            if (d[v][w] < d[u][w]) ++nv;
        }
        total += std::sqrt((nu + nv - 2.0) / (nu * nv));
    }
    return total;
}

// Size of the component containing `start` once edge (a,b) is removed.
inline std::size_t component_without(const Graph& g, Vertex start, Vertex a, Vertex b) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges())
        if (!((u == a && v == b) || (u == b && v == a))) parent[find(u)] = find(v);
    std::size_t count = 0;
    for (std::size_t w = 0; w < g.order(); ++w) count += find(static_cast<int>(w)) == find(start);
    return count;
}

// Tries every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(p[u], p[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Graph path(std::size_t n) {
    std::vector<ggindex::Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<ggindex::Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<ggindex::Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph q4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

}  // namespace oracle
