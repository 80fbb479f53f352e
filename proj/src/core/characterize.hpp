#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/families.hpp"
#include "core/graph.hpp"

namespace oidrd {

enum class ValueClass { three, four, five, other };

std::string_view value_class_name(ValueClass c);
/// THREE/FOUR/FIVE for 3/4/5, OTHER for anything larger.
ValueClass value_class_of(int gamma_oidr);

/// A recognized anchor-pattern membership: the anchors (a, b, c or v1, v2)
/// and the partition of the remaining vertices into the family's V-sets,
/// listed in the family's set order.
struct PatternMatch {
    Family family;
    std::string subcase;
    std::vector<Vertex> anchors;
    std::vector<std::vector<Vertex>> sets;
};

struct ClassifyResult {
    ValueClass value_class = ValueClass::other;
    std::optional<PatternMatch> match;  // present iff value_class != other
};

/// Tries every ordered anchor tuple; returns the first that matches `f`.
std::optional<PatternMatch> recognize(const Graph& g, Family f);

/// K_{1,n-1}. Requires g connected with n >= 3.
bool is_star(const Graph& g);
/// First of G1, G2, G3 that matches. Requires g connected.
std::optional<PatternMatch> recognize_G(const Graph& g);
/// First of H1..H6 that matches. Requires g connected.
std::optional<PatternMatch> recognize_H(const Graph& g);

/// Star, then G1..G3, then H1..H6. Requires g connected with n >= 3.
ClassifyResult classify(const Graph& g);

/// Re-checks a reported match against the family definition.
bool verify_match(const Graph& g, const PatternMatch& m);

}  // namespace oidrd
