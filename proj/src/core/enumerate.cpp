#include "core/enumerate.hpp"

#include <string>

#include "core/errors.hpp"

namespace oidrd {

namespace {

void check_range(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi)
        fail(ErrorKind::cap_exceeded, std::string(what) + " supports " + std::to_string(lo) + " <= n <= " +
                                          std::to_string(hi) + ", got " + std::to_string(n));
}

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    return slots;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    const auto slots = edge_slots(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(slots[i]);
    return Graph(n, edges);
}

GraphStream::GraphStream(int n, bool connected_only) : n_(n), connected_only_(connected_only) {
    check_range(n, 1, 7, "graph enumeration");
    end_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> GraphStream::next() {
    while (mask_ < end_) {
        Graph g = graph_from_mask(n_, mask_++);
        if (!connected_only_ || is_connected(g)) return g;
    }
    return std::nullopt;
}

GraphStream enumerate_connected_graphs(int n) { return GraphStream(n, true); }
GraphStream enumerate_all_graphs(int n) { return GraphStream(n, false); }

TreeStream::TreeStream(int n) : n_(n) {
    check_range(n, 1, 10, "tree enumeration");
    if (n >= 3) code_.assign(n - 2, 0);
}

std::optional<Graph> TreeStream::next() {
    if (done_) return std::nullopt;
    if (n_ <= 2) {
        done_ = true;
        return n_ == 1 ? Graph::empty(1) : Graph(2, std::vector<Edge>{{0, 1}});
    }
    Graph t = tree_from_prufer(n_, code_);
    int pos = n_ - 3;
    while (pos >= 0 && code_[pos] == n_ - 1) code_[pos--] = 0;
    if (pos < 0) done_ = true;
    else ++code_[pos];
    return t;
}

TreeStream enumerate_trees(int n) { return TreeStream(n); }

Graph tree_from_prufer(int n, const std::vector<int>& code) {
    if (n < 2 || static_cast<int>(code.size()) != n - 2)
        fail(ErrorKind::invalid_argument, "Prüfer sequence must have length n-2");
    std::vector<int> deg(n, 1);
    for (int x : code) {
        if (x < 0 || x >= n) fail(ErrorKind::invalid_argument, "Prüfer entry out of range");
        ++deg[x];
    }
    std::vector<Edge> edges;
    for (int x : code) {
        int leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        --deg[leaf];
        --deg[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] != 1) continue;
        if (u < 0) u = v;
        else edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::int64_t labeled_connected_count(int n) {
    std::vector<std::int64_t> c(n + 1, 0);
    auto all = [](int k) { return std::int64_t{1} << (k * (k - 1) / 2); };
    for (int k = 1; k <= n; ++k) {
        std::int64_t disconnected = 0;
        for (int j = 1; j < k; ++j) disconnected += binomial(k - 1, j - 1) * c[j] * all(k - j);
        c[k] = all(k) - disconnected;
    }
    return c[n];
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

Graph random_tree(int n, Rng& rng) {
    if (n <= 2) return n == 1 ? Graph::empty(1) : Graph(2, std::vector<Edge>{{0, 1}});
    std::vector<int> code(n - 2);
    for (int& x : code) x = static_cast<int>(uniform_below(rng, n));
    return tree_from_prufer(n, code);
}

Graph random_connected_graph(int n, Rng& rng, int max_deg) {
    check_range(n, 1, 11, "random graph sampling");
    const int slots = n * (n - 1) / 2;
    const std::uint64_t keep = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;
    while (true) {
        Graph g = graph_from_mask(n, rng() & keep);
        if (is_connected(g) && max_degree(g) <= max_deg) return g;
    }
}

}  // namespace oidrd
