#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// graph6 text format: a size header followed by the column-major upper
// triangle of the adjacency matrix, six bits per printable byte, each offset
// by 63. Vertex counts are capped at 65535 here.
namespace graph6 {

constexpr int kMinByte = 63;
constexpr int kMaxByte = 126;
constexpr long long kMaxVertices = 65535;

}  // namespace graph6

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < graph6::kMinByte || c > graph6::kMaxByte)
            throw ParseError("graph6 byte out of range 63..126", i);
    }

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = text[0] - graph6::kMinByte;
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("truncated graph6 size header", text.size());
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - graph6::kMinByte);
        pos = 4;
    } else {
        // 8-byte header encodes up to 2^36-1 vertices; beyond the cap here.
        throw ParseError("graph6 vertex count above supported cap", 0);
    }
    if (n > graph6::kMaxVertices)
        throw ParseError("graph6 vertex count above supported cap", 0);

    long long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != body)
        throw ParseError("graph6 body length does not match vertex count",
                         text.size() < pos + body ? text.size() : pos + body);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = text[pos + static_cast<std::size_t>(bit / 6)] - graph6::kMinByte;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // Padding bits must be zero.
    for (; bit < static_cast<long long>(body) * 6; ++bit) {
        int byte = text[pos + static_cast<std::size_t>(bit / 6)] - graph6::kMinByte;
        if ((byte >> (5 - bit % 6)) & 1)
            throw ParseError("nonzero trailing padding bits", pos + static_cast<std::size_t>(bit / 6));
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
    long long n = g.vertex_count();
    if (n > graph6::kMaxVertices)
        throw InvalidArgument("graph too large for graph6 writer cap");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + graph6::kMinByte));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + graph6::kMinByte));
        out.push_back(static_cast<char>(((n >> 6) & 63) + graph6::kMinByte));
        out.push_back(static_cast<char>((n & 63) + graph6::kMinByte));
    }

    int acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + graph6::kMinByte));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + graph6::kMinByte));
    return out;
}

}  // namespace symbreak
