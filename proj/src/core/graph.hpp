#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace oidrd {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Bit set over at most 64 vertices; bit v stands for vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaskCapacity = 64;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted ascending. For
/// graphs with at most 64 vertices a bitmask row per vertex is kept as well,
/// which is what the search code uses.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge. Throws Error(invalid_argument) on an
    /// out-of-range endpoint or a self-loop, naming the offending pair.
    Graph(int n, std::span<const Edge> edges);

    static Graph empty(int n) { return Graph(n, {}); }

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Valid only when order() <= 64.
    VertexMask neighbor_mask(Vertex v) const { return rows_[v]; }
    bool has_masks() const noexcept { return n_ <= kMaskCapacity; }

    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexMask> rows_;
};

bool is_connected(const Graph& g);
int degree(const Graph& g, Vertex v);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// Disjoint union; the vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace oidrd
