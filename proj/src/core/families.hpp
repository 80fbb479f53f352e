#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace oidrd {

enum class Family {
    path,
    cycle,
    complete,
    empty,
    star,
    double_star,
    complete_bipartite,
    complete_multipartite,
    g1,
    g2,
    g3,
    h1,
    h2,
    h3,
    h4,
    h5,
    h6,
    sharpness_h,
    corona,
    gadget,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// A named construction plus its parameters. `children` is used by the
/// composite tags only: corona takes two, gadget takes one.
struct FamilySpec {
    Family tag = Family::path;
    std::string subcase;  // h-families only; empty means "any subcase that holds"
    std::vector<int> params;
    std::vector<FamilySpec> children;
};

// Vertex numbering, per tag:
//   path:n, cycle:n        0..n-1 in path/cycle order
//   complete:n, empty:n    0..n-1
//   star:k                 center 0, leaves 1..k
//   double_star:a,b        centers 0 (a leaves) and 1 (b leaves); leaves of 0
//                          are 2..a+1, leaves of 1 follow
//   kbipartite:m,n         parts [0,m) and [m,m+n)
//   kpartite:n1,...,nk     consecutive blocks
//   g1:k,l  g2:k  g3:k     v1=0, v2=1, w1..wk = 2..k+1, then the l leaves of v1
//   h1..h6:<sub>,sizes     anchors a=0, b=1 (c=2), then each V-set as a
//                          consecutive block in the family's set order
//   sharpness_h:t,m1..mt   block i is x_i, y_i, z_i followed by the m_i
//                          vertices of the large side of K_{2,m_i}
//   corona(G,H)            see corona()
//   gadget(G)              see build_gadget()
Graph family(const FamilySpec& spec);

/// G o H: vertex i of G keeps index i; copy i of H occupies
/// [g.n + i*h.n, g.n + (i+1)*h.n).
Graph corona(const Graph& g, const Graph& h);

/// Sharpness graph for the domination + vertex-cover lower bound. Requires
/// t >= 3 (the z_i must form a simple cycle) and every m_i >= 2.
Graph sharpness_h(std::span<const int> m);

/// Anchor-pattern description shared by the star, G and H families.
///
/// A member graph consists of `anchor_count` anchor vertices with exactly the
/// listed anchor-anchor edges, plus disjoint sets of further vertices where
/// every vertex of set i has neighborhood exactly `set_masks[i]` (a bitmask
/// over anchor positions: bit 0 = a / v1, bit 1 = b / v2, bit 2 = c).
struct PatternFamily {
    Family tag;
    int anchor_count;
    std::vector<Edge> anchor_edges;
    std::vector<unsigned> set_masks;
    std::vector<std::string_view> subcases;  // empty for families without subcases
};

const PatternFamily& pattern_family(Family f);

/// The pattern families in classification order: star, g1, g2, g3, h1..h6.
std::span<const Family> pattern_families();

/// Whether set sizes (in set_masks order) satisfy the named subcase. For
/// families without subcases pass an empty subcase.
bool subcase_holds(Family f, std::string_view subcase, std::span<const int> sizes);

/// First subcase (in declaration order) satisfied by the sizes, "" for
/// families without subcases, nullopt when the sizes fit none.
std::optional<std::string_view> matching_subcase(Family f, std::span<const int> sizes);

/// Builds the member of a pattern family with the given set sizes.
Graph build_pattern(Family f, std::span<const int> sizes);

}  // namespace oidrd
