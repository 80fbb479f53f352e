#include "core/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/solver.hpp"

namespace oidrd {

GadgetMap build_gadget(const Graph& g) {
    const int n = g.order();
    if (n < 1) fail(ErrorKind::precondition, "gadget construction needs at least one vertex");
    GadgetMap out;
    out.base = g;
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < n; ++v) {
        const Vertex u = n + v;
        const std::array<Vertex, 2> leaves{2 * n + 2 * v, 2 * n + 2 * v + 1};
        edges.emplace_back(v, u);
        edges.emplace_back(u, leaves[0]);
        edges.emplace_back(u, leaves[1]);
        out.u_index.push_back(u);
        out.leaf_index.push_back(leaves);
    }
    out.gadget = Graph(4 * n, edges);

    const Graph& gp = out.gadget;
    bool ok = gp.order() == 4 * n && max_degree(gp) == std::max(max_degree(g) + 1, 3);
    for (Vertex v = 0; v < n && ok; ++v) {
        ok = gp.degree(out.u_index[v]) == 3 && gp.degree(out.leaf_index[v][0]) == 1 &&
             gp.degree(out.leaf_index[v][1]) == 1 && gp.degree(v) == g.degree(v) + 1;
    }
    if (!ok) throw std::logic_error("gadget degree invariants violated");
    return out;
}

IdentityReport verify_identity(const Graph& g, int cap_override) {
    if (g.order() > cap_override)
        fail(ErrorKind::cap_exceeded, "identity check supports base graphs with at most " +
                                          std::to_string(cap_override) + " vertices, got " +
                                          std::to_string(g.order()));
    const GadgetMap map = build_gadget(g);
    IdentityReport r;
    SolveResult lhs = solve_oidrd(map.gadget);
    r.lhs = lhs.value;
    r.witness = std::move(lhs.witness);
    r.alpha = solve_alpha(g).value;
    r.rhs = 4 * g.order() - r.alpha;
    r.equal = r.lhs == r.rhs;
    return r;
}

Labeling witness_from_independent_set(const Graph& g, const std::vector<Vertex>& independent) {
    const int n = g.order();
    std::vector<char> in(n, 0);
    for (Vertex v : independent) {
        if (v < 0 || v >= n) fail(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (in[u] && in[v])
            fail(ErrorKind::precondition, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                              " are adjacent, so the set is not independent");
    std::vector<int> f(4 * n, 0);
    for (Vertex v = 0; v < n; ++v) {
        f[v] = in[v] ? 0 : 1;
        f[n + v] = 3;
    }
    return Labeling(std::move(f));
}

}  // namespace oidrd
