#pragma once

// Reference implementations used only by the tests. They work on a plain
// adjacency matrix and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

struct Adj {
    int n = 0;
    std::vector<std::vector<char>> a;

    Adj(int n_, const std::vector<std::pair<int, int>>& edges) : n(n_), a(n_, std::vector<char>(n_, 0)) {
        for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
    }
};

enum class Kind { double_roman, roman };

// f valid as a (double) Roman function, zeros optionally independent.
inline bool valid(const Adj& g, const std::vector<int>& f, Kind kind, bool independent_zeros) {
    for (int v = 0; v < g.n; ++v) {
        int twos = 0, threes = 0, zeros = 0;
        for (int u = 0; u < g.n; ++u) {
            if (!g.a[v][u]) continue;
            twos += f[u] == 2;
            threes += f[u] == 3;
            zeros += f[u] == 0;
        }
        if (f[v] == 0) {
            if (independent_zeros && zeros > 0) return false;
            if (kind == Kind::roman && twos == 0) return false;
            if (kind == Kind::double_roman && threes == 0 && twos < 2) return false;
        }
        if (f[v] == 1 && kind == Kind::double_roman && twos + threes == 0) return false;
    }
    return true;
}

struct Best {
    int value = 0;
    std::vector<int> first;  // lexicographically smallest optimum
    long long count = 0;
};

// Odometer over {0..k-1}^n in lexicographic order.
template <class F>
void each(int n, int k, F&& visit) {
    std::vector<int> f(n, 0);
    while (true) {
        visit(f);
        int i = n - 1;
        while (i >= 0 && f[i] == k - 1) f[i--] = 0;
        if (i < 0) return;
        ++f[i];
    }
}

inline Best labeling_optimum(const Adj& g, Kind kind, bool independent_zeros) {
    Best b;
    b.value = 1 << 30;
    const int k = kind == Kind::double_roman ? 4 : 3;
    each(g.n, k, [&](const std::vector<int>& f) {
        if (!valid(g, f, kind, independent_zeros)) return;
        int w = 0;
        for (int x : f) w += x;
        if (w < b.value) {
            b.value = w;
            b.first = f;
            b.count = 1;
        } else if (w == b.value) {
            ++b.count;
        }
    });
    return b;
}

inline int gamma_oidr(const Adj& g) { return labeling_optimum(g, Kind::double_roman, true).value; }
inline int gamma_dr(const Adj& g) { return labeling_optimum(g, Kind::double_roman, false).value; }
inline int gamma_oir(const Adj& g) { return labeling_optimum(g, Kind::roman, true).value; }
inline int gamma_r(const Adj& g) { return labeling_optimum(g, Kind::roman, false).value; }

inline bool independent(const Adj& g, std::uint32_t s) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if ((s >> u & 1) && (s >> v & 1) && g.a[u][v]) return false;
    return true;
}

inline bool dominating(const Adj& g, std::uint32_t s) {
    for (int v = 0; v < g.n; ++v) {
        if (s >> v & 1) continue;
        bool hit = false;
        for (int u = 0; u < g.n && !hit; ++u) hit = (s >> u & 1) && g.a[v][u];
        if (!hit) return false;
    }
    return true;
}

inline int alpha(const Adj& g) {
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << g.n); ++s)
        if (independent(g, s)) best = std::max(best, __builtin_popcount(s));
    return best;
}

inline int beta(const Adj& g) {
    int best = g.n;
    for (std::uint32_t s = 0; s < (1U << g.n); ++s)
        if (independent(g, ~s & ((1U << g.n) - 1))) best = std::min(best, __builtin_popcount(s));
    return best;
}

inline int gamma(const Adj& g) {
    int best = g.n;
    for (std::uint32_t s = 0; s < (1U << g.n); ++s)
        if (dominating(g, s)) best = std::min(best, __builtin_popcount(s));
    return best;
}

inline bool connected(const Adj& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.n; ++u)
            if (g.a[v][u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return std::count(seen.begin(), seen.end(), 1) == g.n;
}

inline int edge_count(const Adj& g) {
    int m = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) m += g.a[u][v];
    return m;
}

// Known counts of labeled connected graphs on 1..7 vertices.
inline constexpr long long kConnectedLabeled[] = {1, 1, 4, 38, 728, 26704, 1866256};

}  // namespace oracle
