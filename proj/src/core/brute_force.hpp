#pragma once

#include <functional>
#include <vector>

#include "core/graph.hpp"
#include "core/labeling.hpp"
#include "core/solver.hpp"

namespace oidrd {

/// Largest order accepted by the exhaustive routines.
inline constexpr int kBruteForceCap = 12;

/// Plain enumeration of every labeling in lexicographic order, checked with
/// the labeling predicates. Same result contract as solve(); additionally
/// fills optimal_count. Throws Error(cap_exceeded) above kBruteForceCap.
SolveResult brute_force(const Graph& g, Invariant inv);

SolveResult brute_force_oidrd(const Graph& g);

/// Every optimal witness for `inv`, in lexicographic order.
std::vector<Labeling> enumerate_optimal(const Graph& g, Invariant inv);

std::vector<Labeling> enumerate_optimal_oidrd(const Graph& g);

}  // namespace oidrd
