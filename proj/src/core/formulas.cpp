#include "core/formulas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace oidrd {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) fail(ErrorKind::precondition, message);
}

}  // namespace

int formula_path(int n) {
    require(n >= 1, "path formula needs n >= 1");
    return n == 3 ? 3 : n + 1;
}

int formula_cycle(int n) {
    require(n >= 3, "cycle formula needs n >= 3");
    return n % 2 == 0 ? n : n + 1;
}

int formula_complete(int n) {
    require(n >= 1, "complete graph formula needs n >= 1");
    return n + 1;
}

int formula_complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete bipartite formula needs both parts nonempty");
    if (m > n) std::swap(m, n);
    if (m == 1) return 3;
    if (m == 2 || m == 3) return 2 * m;
    return m + 4;
}

int formula_complete_multipartite(std::vector<int> parts) {
    require(parts.size() >= 3, "complete multipartite formula needs k >= 3 parts; use the bipartite formula");
    require(std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; }),
            "every part needs at least one vertex");
    std::sort(parts.begin(), parts.end());
    return std::accumulate(parts.begin(), parts.end() - 1, 0) + 2;
}

CoronaCoefficients corona_coefficients(const InvariantBundle& h, int h_order) {
    return {h_order + h.gamma, h.gamma_oidr + 1, h.gamma_oir + 2, h.beta + 3};
}

int corona_minimum(const Graph& g, const CoronaCoefficients& c) {
    const int n = g.order();
    require(n >= 1 && n <= kCoronaBaseCap,
            "corona minimum supports 1 <= |V(G)| <= " + std::to_string(kCoronaBaseCap));
    const int rest = std::min({c.c1, c.c2, c.c3});
    int best = std::numeric_limits<int>::max();
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t s = 0; s < end; ++s) {
        bool independent = true;
        for (Vertex v = 0; v < n && independent; ++v)
            if ((s >> v) & 1U) independent = (g.neighbor_mask(v) & s) == 0;
        if (!independent) continue;
        const int zeros = std::popcount(s);
        best = std::min(best, zeros * c.c0 + (n - zeros) * rest);
    }
    return best;
}

int corona_minimum_direct(const Graph& g, const CoronaCoefficients& c) {
    const int n = g.order();
    require(n >= 1 && n <= 8, "direct corona enumeration supports 1 <= |V(G)| <= 8");
    const std::array<int, 4> cost{c.c0, c.c1, c.c2, c.c3};
    std::vector<int> f(n, 0);
    int best = std::numeric_limits<int>::max();
    while (true) {
        bool independent = true;
        for (auto [u, v] : g.edges())
            if (f[u] == 0 && f[v] == 0) independent = false;
        if (independent) {
            int total = 0;
            for (int x : f) total += cost[x];
            best = std::min(best, total);
        }
        int pos = n - 1;
        while (pos >= 0 && f[pos] == 3) f[pos--] = 0;
        if (pos < 0) break;
        ++f[pos];
    }
    return best;
}

int corona_formula(const Graph& g, const InvariantBundle& hb, int h_order, int h_max_degree) {
    require(h_max_degree <= h_order - 2,
            "the corona formula needs H to have maximum degree at most its order minus two "
            "(max degree " + std::to_string(h_max_degree) + ", order " + std::to_string(h_order) + ")");
    const CoronaCoefficients c = corona_coefficients(hb, h_order);
    const int value = corona_minimum(g, c);
    if (g.order() <= 8 && corona_minimum_direct(g, c) != value)
        throw std::logic_error("reduced corona scan disagrees with direct enumeration");
    return value;
}

CoronaFormula corona_formula(const Graph& g, const Graph& h) {
    CoronaFormula out;
    require(max_degree(h) <= h.order() - 2,
            "the corona formula needs H to have maximum degree at most its order minus two "
            "(max degree " + std::to_string(max_degree(h)) + ", order " + std::to_string(h.order()) + ")");
    out.h_bundle = bundle(h);
    out.coefficients = corona_coefficients(out.h_bundle, h.order());
    out.value = corona_formula(g, out.h_bundle, h.order(), max_degree(h));
    return out;
}

}  // namespace oidrd
