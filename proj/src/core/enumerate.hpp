#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "core/graph.hpp"

namespace oidrd {

/// Candidate edges of K_n in the order used for edge bitmasks:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::vector<Edge> edge_slots(int n);

/// Graph whose edges are the slots selected by `mask`.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Every labeled simple graph on n vertices, edge bitmask ascending,
/// optionally only the connected ones. Single consumer.
class GraphStream {
public:
    /// Throws Error(cap_exceeded) unless 1 <= n <= 7.
    GraphStream(int n, bool connected_only);

    std::optional<Graph> next();

private:
    int n_;
    bool connected_only_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
};

/// Labeled connected graphs on n vertices (1 <= n <= 7).
GraphStream enumerate_connected_graphs(int n);
/// All labeled graphs on n vertices, connected or not (1 <= n <= 7).
GraphStream enumerate_all_graphs(int n);

/// Every labeled tree on n vertices: Prüfer sequences in lexicographic order
/// for n >= 3, the unique tree for n <= 2. Single consumer.
class TreeStream {
public:
    /// Throws Error(cap_exceeded) unless 1 <= n <= 10.
    explicit TreeStream(int n);

    std::optional<Graph> next();

private:
    int n_;
    std::vector<int> code_;
    bool done_ = false;
};

TreeStream enumerate_trees(int n);

/// Tree encoded by a Prüfer sequence of length n-2 over 0..n-1.
Graph tree_from_prufer(int n, const std::vector<int>& code);

/// Number of labeled connected graphs on n vertices by the standard
/// inclusion-exclusion recurrence.
std::int64_t labeled_connected_count(int n);

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) drawn with rejection from raw engine output,
/// so sequences are reproducible across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform labeled tree (random Prüfer sequence).
Graph random_tree(int n, Rng& rng);

/// Uniform edge subset of K_n, redrawn until connected and of maximum degree
/// at most `max_deg` (pass n for no degree limit). Requires n <= 11.
Graph random_connected_graph(int n, Rng& rng, int max_deg);

}  // namespace oidrd
