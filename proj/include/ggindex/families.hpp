#pragma once

// Generators for the parametric bicyclic (and unicyclic) families.
//
// Vertex numbering is fixed so canonical-form tests are reproducible:
//   cycle-with-pendants  cycle 0..k-1, then pendants grouped by cycle vertex;
//   S_n^{r,t}            hub 0, C_r = 0,1,..,r-1, C_t = 0,r,..,r+t-2, then the
//                        pendants of vertices 1..r+t-2 in order, hub pendants last;
//   B_n(n1,n2,n3,n4)     Q4 on 0..3 (cycle 0-1-2-3-0 plus chord 0-2), vertex i
//                        carries n_{i+1}-1 pendants appended in order;
//   shared path          P_s = 0..s-1, then the r-s inner vertices of C_r's other
//                        arc, then the t-s inner vertices of C_t's other arc,
//                        then pendants grouped by base vertex.

#include <array>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "index.hpp"

namespace ggindex {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CyclePendants {
    std::size_t k = 3;
    std::vector<std::size_t> pendants;  // k entries
    friend bool operator==(const CyclePendants&, const CyclePendants&) = default;
};

struct SharedVertex {
    std::size_t r = 3;
    std::size_t t = 3;
    std::vector<std::size_t> m;   // r-1 entries, non-hub vertices of C_r
    std::vector<std::size_t> nn;  // t-1 entries, non-hub vertices of C_t
    std::size_t m0 = 0;           // pendants on the hub
    friend bool operator==(const SharedVertex&, const SharedVertex&) = default;
};

struct QuadPendants {
    std::array<std::size_t, 4> q{1, 1, 1, 1};
    friend bool operator==(const QuadPendants&, const QuadPendants&) = default;
};

struct SharedPath {
    std::size_t r = 3;
    std::size_t t = 3;
    std::size_t s = 2;
    std::vector<std::size_t> pendants;  // r+t-s entries, one per base vertex
    friend bool operator==(const SharedPath&, const SharedPath&) = default;
};

using FamilySpec = std::variant<CyclePendants, SharedVertex, QuadPendants, SharedPath>;

enum class FamilyTag { CyclePendants, SRT, BQuad, SharedPathBase };

inline FamilyTag family_tag(const FamilySpec& spec) { return static_cast<FamilyTag>(spec.index()); }

/// S_n^{3,3}(m1, n1, m0), i.e. S_n^{3,3}(m1, 0, n1, 0, m0).
inline SharedVertex s33(std::size_t m1, std::size_t n1, std::size_t m0) {
    return SharedVertex{3, 3, {m1, 0}, {n1, 0}, m0};
}

inline QuadPendants b_quad(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t n4) {
    return QuadPendants{{n1, n2, n3, n4}};
}

namespace detail {

inline std::size_t sum(const std::vector<std::size_t>& xs) {
    return std::accumulate(xs.begin(), xs.end(), std::size_t{0});
}

inline void attach_pendants(std::vector<Edge>& edges, std::size_t& next, Vertex at,
                            std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) edges.emplace_back(at, static_cast<Vertex>(next++));
}

inline std::string join(const std::vector<std::size_t>& xs, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace detail

inline Graph make_cycle_pendants(std::size_t k, const std::vector<std::size_t>& m) {
    if (k < 3) throw FamilyError("cycle length must be at least 3");
    if (m.size() != k) throw FamilyError("cycle-with-pendants needs one pendant count per cycle vertex");
    std::size_t n = k + detail::sum(m);
    std::vector<Edge> edges;
    edges.reserve(n);
    for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
    std::size_t next = k;
    for (Vertex i = 0; i < k; ++i) detail::attach_pendants(edges, next, i, m[i]);
    return Graph(n, edges);
}

inline Graph make_s_rt(std::size_t r, std::size_t t, const std::vector<std::size_t>& m,
                       const std::vector<std::size_t>& nn, std::size_t m0) {
    if (r < 3 || t < 3) throw FamilyError("S_n^{r,t} needs r, t >= 3");
    if (m.size() != r - 1) throw FamilyError("S_n^{r,t} needs r-1 pendant counts on C_r");
    if (nn.size() != t - 1) throw FamilyError("S_n^{r,t} needs t-1 pendant counts on C_t");
    std::size_t base = r + t - 1;
    std::size_t n = base + detail::sum(m) + detail::sum(nn) + m0;
    std::vector<Edge> edges;
    edges.reserve(n + 1);
    for (Vertex i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(static_cast<Vertex>(r - 1), 0);
    Vertex prev = 0;
    for (Vertex i = static_cast<Vertex>(r); i < base; ++i) {
        edges.emplace_back(prev, i);
        prev = i;
    }
    edges.emplace_back(prev, 0);
    std::size_t next = base;
    for (std::size_t i = 0; i < m.size(); ++i)
        detail::attach_pendants(edges, next, static_cast<Vertex>(1 + i), m[i]);
    for (std::size_t j = 0; j < nn.size(); ++j)
        detail::attach_pendants(edges, next, static_cast<Vertex>(r + j), nn[j]);
    detail::attach_pendants(edges, next, 0, m0);
    return Graph(n, edges);
}

inline Graph make_b_quad(const std::array<std::size_t, 4>& q) {
    for (auto x : q) {
        if (x < 1) throw FamilyError("B_n(n1,n2,n3,n4) needs every n_i >= 1");
    }
    std::size_t n = q[0] + q[1] + q[2] + q[3];
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
    std::size_t next = 4;
    for (Vertex i = 0; i < 4; ++i) detail::attach_pendants(edges, next, i, q[i] - 1);
    return Graph(n, edges);
}

inline Graph make_shared_path(std::size_t r, std::size_t t, std::size_t s,
                              const std::vector<std::size_t>& pendants) {
    if (t < 3 || r < t) throw FamilyError("shared path needs r >= t >= 3");
    if (s < 2) throw FamilyError("shared path needs s >= 2 (s = 1 is the S_n^{r,t} case)");
    if (s > t) throw FamilyError("shared path P_s cannot be longer than C_t (s > t)");
    if (r == s) {
        // Both other arcs would be the single edge between the path ends.
        throw FamilyError("r = t = s makes both non-shared arcs a single edge (multi-edge)");
    }
    std::size_t base = r + t - s;
    if (!pendants.empty() && pendants.size() != base) {
        throw FamilyError("shared path needs one pendant count per base vertex (" +
                          std::to_string(base) + ")");
    }
    std::size_t n = base + detail::sum(pendants);
    std::vector<Edge> edges;
    edges.reserve(n + 1);
    auto last = static_cast<Vertex>(s - 1);
    for (Vertex i = 0; i < last; ++i) edges.emplace_back(i, i + 1);
    auto close_arc = [&](Vertex first_inner, std::size_t inner) {
        Vertex prev = last;
        for (std::size_t j = 0; j < inner; ++j) {
            auto w = static_cast<Vertex>(first_inner + j);
            edges.emplace_back(prev, w);
            prev = w;
        }
        edges.emplace_back(prev, 0);
    };
    close_arc(static_cast<Vertex>(s), r - s);
    close_arc(static_cast<Vertex>(r), t - s);
    std::size_t next = base;
    for (std::size_t i = 0; i < pendants.size(); ++i)
        detail::attach_pendants(edges, next, static_cast<Vertex>(i), pendants[i]);
    return Graph(n, edges);
}

/// Closed form of the index of B_n(n1, n2, 1, 1), n = n1 + n2 + 2.
inline double b_quad_closed_form(std::size_t n1, std::size_t n2) {
    if (n1 < 1 || n2 < 1) throw FamilyError("b_quad_closed_form needs n1, n2 >= 1");
    auto a = static_cast<long long>(n1), b = static_cast<long long>(n2);
    long long n = a + b + 2;
    return sqrt_ratio(n - 3, (a + 1) * b)                     // v1 v2
           + sqrt_ratio(b, b + 1)                            // v3 v4
           + sqrt_ratio(a - 1, a)                            // chord v1 v3
           + sqrt_ratio(n - 3, n - 2)                        // v1 v4
           + sqrt_ratio(1, 2)                                // v2 v3
           + static_cast<double>(n - 4) * sqrt_ratio(n - 2, n - 1);  // pendant edges
}

inline std::size_t family_order(const FamilySpec& spec) {
    struct {
        std::size_t operator()(const CyclePendants& c) const { return c.k + detail::sum(c.pendants); }
        std::size_t operator()(const SharedVertex& s) const {
            return s.r + s.t - 1 + detail::sum(s.m) + detail::sum(s.nn) + s.m0;
        }
        std::size_t operator()(const QuadPendants& b) const {
            return b.q[0] + b.q[1] + b.q[2] + b.q[3];
        }
        std::size_t operator()(const SharedPath& p) const {
            return p.r + p.t - p.s + detail::sum(p.pendants);
        }
    } visitor;
    return std::visit(visitor, spec);
}

inline Graph make_family(const FamilySpec& spec) {
    struct {
        Graph operator()(const CyclePendants& c) const { return make_cycle_pendants(c.k, c.pendants); }
        Graph operator()(const SharedVertex& s) const { return make_s_rt(s.r, s.t, s.m, s.nn, s.m0); }
        Graph operator()(const QuadPendants& b) const { return make_b_quad(b.q); }
        Graph operator()(const SharedPath& p) const {
            return make_shared_path(p.r, p.t, p.s, p.pendants);
        }
    } visitor;
    return std::visit(visitor, spec);
}

/// Human-readable name, e.g. "B_7(4,1,1,1)" or "S_7^{3,3}(1,1,0)".
inline std::string family_label(const FamilySpec& spec) {
    std::string n = std::to_string(family_order(spec));
    struct {
        const std::string& n;
        std::string operator()(const CyclePendants& c) const {
            return "C_" + std::to_string(c.k) + "(" + detail::join(c.pendants) + ")";
        }
        std::string operator()(const SharedVertex& s) const {
            std::string rt = "^{" + std::to_string(s.r) + "," + std::to_string(s.t) + "}";
            if (s.r == 3 && s.t == 3 && s.m[1] == 0 && s.nn[1] == 0) {
                return "S_" + n + rt + "(" + std::to_string(s.m[0]) + "," + std::to_string(s.nn[0]) +
                       "," + std::to_string(s.m0) + ")";
            }
            return "S_" + n + rt + "(" + detail::join(s.m) + "," + detail::join(s.nn) + "," +
                   std::to_string(s.m0) + ")";
        }
        std::string operator()(const QuadPendants& b) const {
            return "B_" + n + "(" + detail::join({b.q.begin(), b.q.end()}) + ")";
        }
        std::string operator()(const SharedPath& p) const {
            std::string out = "theta_" + n + "^{" + std::to_string(p.r) + "," + std::to_string(p.t) +
                              "}(s=" + std::to_string(p.s);
            if (!p.pendants.empty()) out += ";" + detail::join(p.pendants);
            return out + ")";
        }
    } visitor{n};
    return std::visit(visitor, spec);
}

/// Text form accepted by parse_family_spec.
inline std::string family_spec_text(const FamilySpec& spec) {
    struct {
        std::string operator()(const CyclePendants& c) const {
            return "C " + std::to_string(c.k) + " m=" + detail::join(c.pendants);
        }
        std::string operator()(const SharedVertex& s) const {
            return "S " + std::to_string(s.r) + " " + std::to_string(s.t) + " m=" + detail::join(s.m) +
                   " n=" + detail::join(s.nn) + " m0=" + std::to_string(s.m0);
        }
        std::string operator()(const QuadPendants& b) const {
            return "B " + detail::join({b.q.begin(), b.q.end()}, ' ');
        }
        std::string operator()(const SharedPath& p) const {
            std::string out = "theta " + std::to_string(p.r) + " " + std::to_string(p.t) + " " +
                              std::to_string(p.s);
            if (!p.pendants.empty()) out += " p=" + detail::join(p.pendants);
            return out;
        }
    } visitor;
    return std::visit(visitor, spec);
}

namespace detail {

inline std::size_t parse_count(std::string_view token, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw FamilyError("expected a non-negative integer for " + std::string(what) + ", got '" +
                          std::string(token) + "'");
    }
    return value;
}

inline std::vector<std::size_t> parse_count_list(std::string_view text, std::string_view what) {
    std::vector<std::size_t> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_count(text.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

/// Splits "key=value" options; returns false for a bare token.
inline bool split_option(std::string_view token, std::string_view& key, std::string_view& value) {
    auto eq = token.find('=');
    if (eq == std::string_view::npos) return false;
    key = token.substr(0, eq);
    value = token.substr(eq + 1);
    return true;
}

}  // namespace detail

/// Parses the family grammar:
///
///   C <k> [m=a1,..,ak]
///   S <r> <t> [m=a1,..,a_{r-1}] [n=b1,..,b_{t-1}] [m0=c]
///   B <n1> <n2> <n3> <n4>
///   theta <r> <t> <s> [p=c1,..,c_{r+t-s}]
///
/// Omitted lists default to zeros. For r = 3 (resp. t = 3) a single value
/// m=a (resp. n=b) is shorthand for a,0 (resp. b,0). Parameters are
/// validated by constructing the graph.
inline FamilySpec parse_family_spec(std::string_view text) {
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(text)};
        for (std::string t; in >> t;) tokens.push_back(t);
    }
    if (tokens.empty()) throw FamilyError("empty family spec");
    const std::string& kind = tokens[0];

    auto positional = [&](std::size_t count, std::string_view what) {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= count; ++i) {
            if (i >= tokens.size()) throw FamilyError("missing " + std::string(what) + " parameters");
            out.push_back(detail::parse_count(tokens[i], what));
        }
        return out;
    };
    auto options = [&](std::size_t first, auto&& handle) {
        for (std::size_t i = first; i < tokens.size(); ++i) {
            std::string_view key, value;
            if (!detail::split_option(tokens[i], key, value)) {
                throw FamilyError("unexpected token '" + tokens[i] + "'");
            }
            handle(key, value);
        }
    };
    auto fill = [](std::vector<std::size_t> values, std::size_t want, bool pad_single,
                   std::string_view what) {
        if (values.empty()) return std::vector<std::size_t>(want, 0);
        if (pad_single && values.size() == 1 && want == 2) values.push_back(0);
        if (values.size() != want) {
            throw FamilyError(std::string(what) + " needs " + std::to_string(want) + " values");
        }
        return values;
    };

    FamilySpec spec;
    if (kind == "C") {
        CyclePendants c;
        c.k = positional(1, "cycle")[0];
        if (c.k < 3) throw FamilyError("cycle length must be at least 3");
        std::vector<std::size_t> m;
        options(2, [&](std::string_view key, std::string_view value) {
            if (key != "m") throw FamilyError("unknown option '" + std::string(key) + "' for C");
            m = detail::parse_count_list(value, "m");
        });
        c.pendants = fill(m, c.k, false, "m");
        spec = c;
    } else if (kind == "S") {
        auto rt = positional(2, "S r t");
        SharedVertex s;
        s.r = rt[0];
        s.t = rt[1];
        if (s.r < 3 || s.t < 3) throw FamilyError("S_n^{r,t} needs r, t >= 3");
        std::vector<std::size_t> m, nn;
        options(3, [&](std::string_view key, std::string_view value) {
            if (key == "m") m = detail::parse_count_list(value, "m");
            else if (key == "n") nn = detail::parse_count_list(value, "n");
            else if (key == "m0") s.m0 = detail::parse_count(value, "m0");
            else throw FamilyError("unknown option '" + std::string(key) + "' for S");
        });
        s.m = fill(m, s.r - 1, s.r == 3, "m");
        s.nn = fill(nn, s.t - 1, s.t == 3, "n");
        spec = s;
    } else if (kind == "B") {
        auto q = positional(4, "B");
        if (tokens.size() != 5) throw FamilyError("B takes exactly four parameters");
        spec = b_quad(q[0], q[1], q[2], q[3]);
    } else if (kind == "theta") {
        auto rts = positional(3, "theta r t s");
        SharedPath p{rts[0], rts[1], rts[2], {}};
        options(4, [&](std::string_view key, std::string_view value) {
            if (key != "p") throw FamilyError("unknown option '" + std::string(key) + "' for theta");
            p.pendants = detail::parse_count_list(value, "p");
        });
        spec = p;
    } else {
        throw FamilyError("unknown family '" + kind + "' (expected C, S, B or theta)");
    }
    make_family(spec);  // validates parameters
    return spec;
}

}  // namespace ggindex
