#pragma once

#include <array>
#include <vector>

#include "core/graph.hpp"
#include "core/labeling.hpp"

namespace oidrd {

/// G' built from G by hanging a fresh P3 off every vertex: vertex v_i of G
/// is joined to the center u_i of its own path, whose two ends are leaves.
///
/// Numbering: v_i keeps index i, u_i = n + i, and the leaves of u_i are
/// 2n + 2i and 2n + 2i + 1. Attaching trees keeps a planar G planar.
struct GadgetMap {
    Graph base;
    Graph gadget;
    std::vector<Vertex> u_index;                  // v_i -> u_i
    std::vector<std::array<Vertex, 2>> leaf_index;  // v_i -> leaves of u_i
};

/// Requires g.order() >= 1. Asserts the degree invariants (|V(G')| = 4n,
/// deg(u_i) = 3, leaves of degree 1, max degree = max(max degree of G + 1, 3)).
GadgetMap build_gadget(const Graph& g);

struct IdentityReport {
    int lhs = 0;  // gamma_oidR(G')
    int rhs = 0;  // 4n - alpha(G)
    bool equal = false;
    int alpha = 0;
    Labeling witness;  // canonical optimal labeling of G'
};

/// Largest base order verify_identity accepts (G' then has at most 20 vertices).
inline constexpr int kReductionCap = 5;

/// Solves both sides exactly. Throws Error(cap_exceeded) above kReductionCap
/// unless `cap_override` raises the limit.
IdentityReport verify_identity(const Graph& g, int cap_override = kReductionCap);

/// u_i -> 3, every leaf and every v_i in I -> 0, other v_i -> 1. Throws
/// Error(precondition) if I is not independent in g. Weight is 4n - |I|.
Labeling witness_from_independent_set(const Graph& g, const std::vector<Vertex>& independent);

}  // namespace oidrd
