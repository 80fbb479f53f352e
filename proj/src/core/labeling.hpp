#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace oidrd {

/// Assignment of a value in {0,1,2,3} to each vertex 0..n-1.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(int n, int fill = 0);
    /// Throws Error(invalid_argument) if any value lies outside {0,1,2,3}.
    explicit Labeling(std::vector<int> values);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    int operator[](Vertex v) const { return values_[v]; }
    void set(Vertex v, int value);
    std::span<const std::uint8_t> values() const { return values_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;
    /// Lexicographic in vertex order 0..n-1.
    friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
    std::vector<std::uint8_t> values_;
};

struct ClassPartition {
    std::vector<Vertex> v0, v1, v2, v3;
};

int weight(const Labeling& f);
ClassPartition classes(const Labeling& f);

// Validity predicates. They return false on any semantic failure and throw
// Error(invalid_argument) only when the labeling does not fit the graph.

/// Every 0 has a 3-neighbor or two 2-neighbors; every 1 has a neighbor >= 2.
bool is_drd(const Graph& g, const Labeling& f);
/// is_drd and the 0-labeled vertices are pairwise nonadjacent.
bool is_oidrd(const Graph& g, const Labeling& f);
/// Values in {0,1,2}; every 0 has a 2-neighbor. Throws on a 3.
bool is_rd(const Graph& g, const Labeling& f);
/// is_rd and the 0-labeled vertices are pairwise nonadjacent.
bool is_oird(const Graph& g, const Labeling& f);

/// `f` restricted to {0,1} read as a vertex-set indicator.
bool is_independent_set(const Graph& g, const Labeling& f);
bool is_vertex_cover(const Graph& g, const Labeling& f);
bool is_dominating_set(const Graph& g, const Labeling& f);

/// "0,3,0" form.
std::string to_text(const Labeling& f);
/// Inverse of to_text. Throws Error(parse) on anything but comma-separated
/// digits 0..3.
Labeling labeling_from_text(std::string_view text);

}  // namespace oidrd
