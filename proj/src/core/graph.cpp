#include "core/graph.hpp"

#include <algorithm>
#include <string>

#include "core/errors.hpp"

namespace oidrd {

namespace {

std::string pair_text(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n > 0 ? n : 0) {
    if (n < 0) fail(ErrorKind::invalid_argument, "negative vertex count " + std::to_string(n));
    for (const Edge& e : edges) {
        auto [u, v] = e;
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorKind::invalid_argument,
                 "edge " + pair_text(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) fail(ErrorKind::invalid_argument, "self-loop " + pair_text(e));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    long twice_m = 0;
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        twice_m += static_cast<long>(row.size());
    }
    m_ = static_cast<int>(twice_m / 2);
    if (n_ <= kMaskCapacity) {
        rows_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex u : adj_[v]) rows_[v] |= VertexMask{1} << u;
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (has_masks()) return (rows_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (seen[u]) continue;
            seen[u] = 1;
            ++reached;
            stack.push_back(u);
        }
    }
    return reached == n;
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.order();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.order() + b.order(), edges);
}

}  // namespace oidrd
