#pragma once

// Canonical labelling by individualisation-refinement.
//
// Colour refinement starts from vertex degrees and is iterated to an
// equitable partition; new colours are ranks of sorted signatures so the
// procedure commutes with relabelling. The search individualises each
// vertex of the first non-singleton cell in turn and keeps the smallest
// edge-list code over all discrete leaves. A cell whose members are
// pairwise twins (same neighbourhood apart from each other) is branched on
// its first member only: swapping two twins is an automorphism fixing every
// other vertex, so the skipped subtrees produce the same codes.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ggindex {

/// Sorted canonical edge list, encoded as bytes: n, then (a, b) per edge.
struct CanonicalForm {
    std::string bytes;

    std::size_t order() const { return bytes.empty() ? 0 : static_cast<unsigned char>(bytes[0]); }

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// 64-bit FNV-1a hash of the canonical bytes.
inline std::uint64_t fnv1a(const CanonicalForm& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : c.bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const { return static_cast<std::size_t>(fnv1a(c)); }
};

namespace detail {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        if (n_ > 255) throw GraphError("canonical_form: graphs above 255 vertices are not supported");
    }

    std::pair<CanonicalForm, std::vector<Vertex>> run() {
        std::vector<std::uint32_t> colour(n_);
        for (Vertex v = 0; v < n_; ++v) colour[v] = static_cast<std::uint32_t>(g_.degree(v));
        rank_in_place(colour);
        search(std::move(colour));
        return {CanonicalForm{best_}, best_perm_};
    }

private:
    using Signature = std::pair<std::uint32_t, std::vector<std::uint32_t>>;

    // Replaces values by their rank among the distinct values; returns the class count.
    static std::size_t rank_in_place(std::vector<std::uint32_t>& colour) {
        std::vector<std::uint32_t> distinct(colour);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (auto& c : colour) {
            c = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                                           distinct.begin());
        }
        return distinct.size();
    }

    std::size_t class_count(const std::vector<std::uint32_t>& colour) const {
        std::vector<bool> seen(n_, false);
        std::size_t k = 0;
        for (auto c : colour) {
            if (!seen[c]) {
                seen[c] = true;
                ++k;
            }
        }
        return k;
    }

    void refine(std::vector<std::uint32_t>& colour) const {
        std::size_t classes = class_count(colour);
        std::vector<Signature> sig(n_);
        while (classes < n_) {
            for (Vertex v = 0; v < n_; ++v) {
                sig[v].first = colour[v];
                sig[v].second.clear();
                for (Vertex w : g_.neighbors(v)) sig[v].second.push_back(colour[w]);
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            std::vector<Signature> distinct(sig);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            if (distinct.size() == classes) return;
            for (Vertex v = 0; v < n_; ++v) {
                colour[v] = static_cast<std::uint32_t>(
                    std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            }
            classes = distinct.size();
        }
    }

    bool twins(Vertex a, Vertex b) const {
        auto na = g_.neighbors(a), nb = g_.neighbors(b);
        std::size_t i = 0, j = 0;
        while (i < na.size() || j < nb.size()) {
            if (i < na.size() && na[i] == b) { ++i; continue; }
            if (j < nb.size() && nb[j] == a) { ++j; continue; }
            if (i == na.size() || j == nb.size() || na[i] != nb[j]) return false;
            ++i;
            ++j;
        }
        return true;
    }

    bool pairwise_twins(const std::vector<Vertex>& cell) const {
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j)
                if (!twins(cell[i], cell[j])) return false;
        return true;
    }

    void search(std::vector<std::uint32_t> colour) {
        refine(colour);
        // Colours are dense ranks, so discreteness means n distinct values.
        std::vector<std::uint32_t> size(n_, 0);
        for (auto c : colour) ++size[c];
        std::uint32_t target = 0;
        while (target < n_ && size[target] <= 1) ++target;
        if (target == n_) {
            leaf(colour);
            return;
        }
        std::vector<Vertex> cell;
        for (Vertex v = 0; v < n_; ++v)
            if (colour[v] == target) cell.push_back(v);
        if (pairwise_twins(cell)) cell.resize(1);
        for (Vertex v : cell) {
            std::vector<std::uint32_t> next(colour);
            for (auto& c : next) c = 2 * c + (c == target ? 1u : 0u);
            next[v] = 2 * target;
            rank_in_place(next);
            search(std::move(next));
        }
    }

    void leaf(const std::vector<std::uint32_t>& position) {
        std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
        edges.reserve(g_.size());
        for (auto [u, v] : g_.edges()) {
            auto a = static_cast<std::uint8_t>(position[u]), b = static_cast<std::uint8_t>(position[v]);
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        std::string code;
        code.reserve(1 + 2 * edges.size());
        code.push_back(static_cast<char>(n_));
        for (auto [a, b] : edges) {
            code.push_back(static_cast<char>(a));
            code.push_back(static_cast<char>(b));
        }
        if (best_perm_.empty() || code < best_) {
            best_ = std::move(code);
            best_perm_.assign(position.begin(), position.end());
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::string best_;
    std::vector<Vertex> best_perm_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) return CanonicalForm{std::string(1, '\0')};
    return detail::CanonicalSearch(g).run().first;
}

/// Canonical form together with the relabelled graph it encodes.
inline std::pair<CanonicalForm, Graph> canonical_labelling(const Graph& g) {
    if (g.order() == 0) return {CanonicalForm{std::string(1, '\0')}, g};
    auto [form, perm] = detail::CanonicalSearch(g).run();
    return {std::move(form), relabel(g, perm)};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace ggindex
