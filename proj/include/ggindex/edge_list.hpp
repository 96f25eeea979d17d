#pragma once

// Plain-text edge-list format:
//
//   n m
//   u v      (m lines, 0-based vertex indices)
//
// Tokens are whitespace separated. Lines whose first non-blank character is
// '#' are comments; blank lines are skipped.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ggindex {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool parse_unsigned(const std::string& token, std::uint64_t& out) {
    if (token.empty() || token.size() > 9) return false;
    out = 0;
    for (char c : token) {
        if (c < '0' || c > '9') return false;
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
}

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return tokens;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                          " tokens");
        }
        std::uint64_t a = 0, b = 0;
        if (!detail::parse_unsigned(tokens[0], a) || !detail::parse_unsigned(tokens[1], b)) {
            throw ParseError(line_no, "non-integer token in '" + line + "'");
        }
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            if (n == 0) throw ParseError(line_no, "vertex count must be positive");
            continue;
        }
        if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared m");
        if (a >= n || b >= n) {
            throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(n - 1));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError(line_no, "missing 'n m' header");
    if (edges.size() != m) {
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    try {
        return Graph(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
    }
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace ggindex
