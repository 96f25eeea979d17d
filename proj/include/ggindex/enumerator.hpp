#pragma once

// Isomorphism-free generation of connected bicyclic graphs (n vertices,
// n + 1 edges).
//
// Every such graph is a bicyclic base (its 2-core) with rooted trees hung on
// the base vertices. Bases come in three shapes: two cycles sharing a vertex,
// two disjoint cycles joined by a path, and theta graphs. The structured
// generator walks all bases that fit in n vertices, distributes the remaining
// vertices as rooted trees over the base vertices, and deduplicates by
// canonical form. naive_enumerate_bicyclic is the independent check: it runs
// over every (n+1)-subset of the possible edges.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "edge_list.hpp"
#include "families.hpp"
#include "index.hpp"
#include "scalar.hpp"
#include "transforms.hpp"

namespace ggindex {

enum class BaseShape { SharedVertex, Dumbbell, Theta };

inline const char* to_string(BaseShape s) {
    switch (s) {
        case BaseShape::SharedVertex: return "shared_vertex";
        case BaseShape::Dumbbell: return "dumbbell";
        case BaseShape::Theta: return "theta";
    }
    return "?";
}

struct EnumerationRecord {
    CanonicalForm canonical;
    Graph graph;  // canonically labelled
    double index_value = 0.0;
    std::size_t pendant_count = 0;
    BaseShape shape = BaseShape::SharedVertex;
};

class EnumerationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vertices of the 2-core (repeatedly strip degree-1 vertices).
inline std::vector<bool> two_core(const Graph& g) {
    std::vector<std::size_t> degree(g.order());
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.order(); ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) stack.push_back(v);
    }
    std::vector<bool> in_core(g.order(), true);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (!in_core[v]) continue;
        in_core[v] = false;
        for (Vertex w : g.neighbors(v)) {
            if (in_core[w] && --degree[w] == 1) stack.push_back(w);
        }
    }
    return in_core;
}

/// Shape of the 2-core of a connected bicyclic graph.
inline BaseShape classify_bicyclic(const Graph& g) {
    if (g.size() != g.order() + 1 || !is_connected(g)) {
        throw GraphError("classify_bicyclic: graph is not connected bicyclic");
    }
    auto core = two_core(g);
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!core[v]) continue;
        std::size_t d = 0;
        for (Vertex w : g.neighbors(v)) d += core[w];
        if (d >= 3) branch.push_back(v);
        if (d == 4) return BaseShape::SharedVertex;
    }
    // Two branch vertices of core degree 3: a theta is 2-connected, a
    // dumbbell has a bridge on its connecting path. The bridge then starts
    // at a branch vertex.
    for (Vertex b : branch) {
        for (Vertex w : g.neighbors(b)) {
            if (core[w] && is_cut_edge(g, b, w)) return BaseShape::Dumbbell;
        }
    }
    return BaseShape::Theta;
}

namespace detail {

/// Rooted unlabelled trees as parent arrays (vertex 0 is the root, parent[0]
/// unused), indexed by order.
class RootedTreeTable {
public:
    explicit RootedTreeTable(std::size_t max_order) : by_order_(max_order + 1) {
        if (max_order >= 1) by_order_[1].push_back({0});
        for (std::size_t s = 2; s <= max_order; ++s) {
            std::set<std::string> seen;
            for (const auto& parent : by_order_[s - 1]) {
                for (std::size_t at = 0; at < parent.size(); ++at) {
                    auto grown = parent;
                    grown.push_back(static_cast<Vertex>(at));
                    if (seen.insert(encode(grown)).second) by_order_[s].push_back(std::move(grown));
                }
            }
        }
    }

    const std::vector<std::vector<Vertex>>& of_order(std::size_t s) const { return by_order_.at(s); }

private:
    // Canonical nested-parenthesis code of the tree rooted at 0.
    static std::string encode(const std::vector<Vertex>& parent) {
        std::vector<std::vector<Vertex>> children(parent.size());
        for (std::size_t v = 1; v < parent.size(); ++v) children[parent[v]].push_back(static_cast<Vertex>(v));
        std::function<std::string(Vertex)> rec = [&](Vertex v) {
            std::vector<std::string> parts;
            for (Vertex c : children[v]) parts.push_back(rec(c));
            std::sort(parts.begin(), parts.end());
            std::string out = "(";
            for (auto& p : parts) out += p;
            return out + ")";
        };
        return rec(0);
    }

    std::vector<std::vector<std::vector<Vertex>>> by_order_;
};

struct Base {
    std::size_t order = 0;
    std::vector<Edge> edges;
};

inline void add_cycle(std::vector<Edge>& edges, const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
}

inline std::vector<Base> bicyclic_bases(std::size_t n) {
    std::vector<Base> bases;
    // Two cycles sharing vertex 0.
    for (std::size_t a = 3; a + 2 <= n; ++a) {
        for (std::size_t b = 3; b <= a && a + b - 1 <= n; ++b) {
            Base base{a + b - 1, {}};
            std::vector<Vertex> ca, cb{0};
            for (Vertex i = 0; i < a; ++i) ca.push_back(i);
            for (Vertex i = 0; i + 1 < b; ++i) cb.push_back(static_cast<Vertex>(a + i));
            add_cycle(base.edges, ca);
            add_cycle(base.edges, cb);
            bases.push_back(std::move(base));
        }
    }
    // Two disjoint cycles joined by a path of `len` edges.
    for (std::size_t a = 3; a + 3 <= n; ++a) {
        for (std::size_t b = 3; b <= a; ++b) {
            for (std::size_t len = 1; a + b + len - 1 <= n; ++len) {
                Base base{a + b + len - 1, {}};
                std::vector<Vertex> ca, cb;
                for (Vertex i = 0; i < a; ++i) ca.push_back(i);
                for (Vertex i = 0; i < b; ++i) cb.push_back(static_cast<Vertex>(a + i));
                add_cycle(base.edges, ca);
                add_cycle(base.edges, cb);
                Vertex prev = 0;
                for (std::size_t k = 1; k < len; ++k) {
                    auto w = static_cast<Vertex>(a + b + k - 1);
                    base.edges.emplace_back(prev, w);
                    prev = w;
                }
                base.edges.emplace_back(prev, static_cast<Vertex>(a));
                bases.push_back(std::move(base));
            }
        }
    }
    // Theta graphs: branch vertices 0 and 1 joined by paths of x >= y >= z
    // edges, at most one of them a single edge.
    for (std::size_t x = 2; x <= n; ++x) {
        for (std::size_t y = 2; y <= x; ++y) {
            for (std::size_t z = 1; z <= y && x + y + z - 1 <= n; ++z) {
                Base base{x + y + z - 1, {}};
                Vertex next = 2;
                for (std::size_t len : {x, y, z}) {
                    Vertex prev = 0;
                    for (std::size_t k = 1; k < len; ++k) {
                        base.edges.emplace_back(prev, next);
                        prev = next++;
                    }
                    base.edges.emplace_back(prev, 1);
                }
                bases.push_back(std::move(base));
            }
        }
    }
    return bases;
}

template <class Emit>
void attach_forests(const Base& base, std::size_t n, const RootedTreeTable& trees, Emit&& emit) {
    const std::size_t b = base.order;
    std::vector<std::size_t> sizes(b, 1);
    std::vector<std::size_t> choice(b, 0);
    std::vector<Edge> edges;

    auto build = [&] {
        edges = base.edges;
        std::size_t next = b;
        for (std::size_t i = 0; i < b; ++i) {
            const auto& parent = trees.of_order(sizes[i])[choice[i]];
            std::vector<Vertex> label(parent.size());
            label[0] = static_cast<Vertex>(i);
            for (std::size_t v = 1; v < parent.size(); ++v) {
                label[v] = static_cast<Vertex>(next++);
                edges.emplace_back(label[parent[v]], label[v]);
            }
        }
        emit(Graph(n, edges));
    };

    // Odometer over the tree choices for a fixed size vector.
    auto over_choices = [&] {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            build();
            std::size_t i = 0;
            while (i < b && ++choice[i] == trees.of_order(sizes[i]).size()) choice[i++] = 0;
            if (i == b) return;
        }
    };

    // Compositions of n into b positive parts.
    std::function<void(std::size_t, std::size_t)> compose = [&](std::size_t i, std::size_t left) {
        if (i + 1 == b) {
            sizes[i] = left;
            over_choices();
            return;
        }
        for (std::size_t s = 1; s + (b - i - 1) <= left; ++s) {
            sizes[i] = s;
            compose(i + 1, left - s);
        }
    };
    compose(0, n);
}

inline std::vector<EnumerationRecord> collect(std::map<CanonicalForm, Graph>& found) {
    std::vector<EnumerationRecord> out;
    out.reserve(found.size());
    for (auto& [form, g] : found) {
        EnumerationRecord r;
        r.canonical = form;
        r.index_value = abc_gg_value(g);
        r.pendant_count = pendant_count(g);
        r.shape = classify_bicyclic(g);
        r.graph = std::move(g);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

inline constexpr std::size_t kMaxStructuredOrder = 12;
inline constexpr std::size_t kMaxNaiveOrder = 8;

/// One record per isomorphism class of connected bicyclic graphs of order n,
/// sorted by canonical form. Empty for n < 4.
inline std::vector<EnumerationRecord> enumerate_bicyclic(std::size_t n) {
    if (n < 4) return {};
    if (n > kMaxStructuredOrder) {
        throw EnumerationError("enumerate_bicyclic: n = " + std::to_string(n) +
                               " exceeds the supported maximum " + std::to_string(kMaxStructuredOrder));
    }
    detail::RootedTreeTable trees(n);
    std::map<CanonicalForm, Graph> found;
    for (const auto& base : detail::bicyclic_bases(n)) {
        detail::attach_forests(base, n, trees, [&](const Graph& g) {
            auto [form, labelled] = canonical_labelling(g);
            found.try_emplace(std::move(form), std::move(labelled));
        });
    }
    return detail::collect(found);
}

/// Brute-force oracle: every (n+1)-edge subset of K_n that is connected,
/// deduplicated by canonical form. Refuses n > 8.
inline std::vector<EnumerationRecord> naive_enumerate_bicyclic(std::size_t n) {
    if (n > kMaxNaiveOrder) {
        throw EnumerationError("naive_enumerate_bicyclic: n = " + std::to_string(n) +
                               " is above the brute-force limit " + std::to_string(kMaxNaiveOrder));
    }
    if (n < 4) return {};
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    const std::size_t m = n + 1;
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;

    std::map<CanonicalForm, Graph> found;
    std::vector<Vertex> root(n);
    std::vector<Edge> edges(m);
    auto find = [&](Vertex v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    while (true) {
        for (Vertex v = 0; v < n; ++v) root[v] = v;
        std::size_t components = n;
        for (std::size_t i = 0; i < m; ++i) {
            edges[i] = all[pick[i]];
            Vertex a = find(edges[i].first), b = find(edges[i].second);
            if (a != b) {
                root[a] = b;
                --components;
            }
        }
        if (components == 1) {
            auto [form, labelled] = canonical_labelling(Graph(n, edges));
            found.try_emplace(std::move(form), std::move(labelled));
        }
        // Next combination in lexicographic order.
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == all.size() - m + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return detail::collect(found);
}

struct ExtremalScan {
    std::size_t n = 0;
    std::size_t class_count = 0;
    EnumerationRecord best;
    double second_value = 0.0;
    double gap = 0.0;
    double bound = 0.0;          // closed-form maximum
    bool matches_family = false;  // best is isomorphic to B_n(n-3,1,1,1)
    bool matches_bound = false;   // |best - bound| <= 1e-9
    bool unique = false;          // gap > 1e-9

    bool passed() const { return matches_family && matches_bound && unique; }
};

/// Maximum of the index over the records (ties broken by canonical form) and
/// the gap to the largest value among the remaining classes.
inline ExtremalScan extremal_scan(const std::vector<EnumerationRecord>& records, std::size_t n) {
    if (records.size() < 2) throw EnumerationError("extremal_scan: need at least two classes");
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        const auto& b = records[best];
        if (r.index_value > b.index_value ||
            (r.index_value == b.index_value && r.canonical < b.canonical)) {
            best = i;
        }
    }
    ExtremalScan scan;
    scan.n = n;
    scan.class_count = records.size();
    scan.best = records[best];
    scan.second_value = -1.0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i != best) scan.second_value = std::max(scan.second_value, records[i].index_value);
    }
    scan.gap = scan.best.index_value - scan.second_value;
    auto bound = bicyclic_max_bound(static_cast<long>(n));
    scan.bound = bound.value;
    scan.matches_family = scan.best.canonical == canonical_form(make_family(bound.family));
    scan.matches_bound = std::abs(scan.best.index_value - bound.value) <= 1e-9;
    scan.unique = scan.gap > 1e-9;
    return scan;
}

inline ExtremalScan extremal_scan(std::size_t n) {
    if (n < 4) throw EnumerationError("extremal_scan: n must be >= 4");
    if (n > kMaxStructuredOrder) {
        throw EnumerationError("extremal_scan: n = " + std::to_string(n) +
                               " is beyond exhaustive enumeration; use n <= " +
                               std::to_string(kMaxStructuredOrder) +
                               " (n <= 10 runs in well under a minute)");
    }
    if (n == 4) {
        // K4 minus an edge is the only bicyclic graph on four vertices.
        auto records = enumerate_bicyclic(4);
        ExtremalScan scan;
        scan.n = 4;
        scan.class_count = records.size();
        scan.best = records.front();
        auto bound = bicyclic_max_bound(4);
        scan.bound = bound.value;
        scan.second_value = 0.0;
        scan.gap = std::numeric_limits<double>::infinity();
        scan.matches_family = scan.best.canonical == canonical_form(make_family(bound.family));
        scan.matches_bound = std::abs(scan.best.index_value - bound.value) <= 1e-9;
        scan.unique = records.size() == 1;
        return scan;
    }
    return extremal_scan(enumerate_bicyclic(n), n);
}

inline std::string hash_hex(const CanonicalForm& c) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(c)));
    return buf;
}

/// Writes one edge-list file per class plus manifest.csv into `dir`.
inline void emit_enumeration(const std::filesystem::path& dir,
                             const std::vector<EnumerationRecord>& records) {
    std::filesystem::create_directories(dir);
    std::ofstream manifest(dir / "manifest.csv");
    manifest << "canonical_hash,n,pendant_count,index_value,file\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        char name[64];
        std::snprintf(name, sizeof name, "class_%05zu.txt", i);
        std::ofstream out(dir / name);
        out << "# canonical_hash " << hash_hex(r.canonical) << "\n";
        write_edge_list(out, r.graph);
        char value[32];
        std::snprintf(value, sizeof value, "%.10g", r.index_value);
        manifest << hash_hex(r.canonical) << ',' << r.graph.order() << ',' << r.pendant_count << ','
                 << value << ',' << name << '\n';
    }
}

}  // namespace ggindex
