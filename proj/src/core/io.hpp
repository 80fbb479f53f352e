#pragma once

#include <string>
#include <string_view>

#include "core/families.hpp"
#include "core/graph.hpp"

namespace oidrd {

/// "n m" header line followed by m lines "u v" (0-indexed). Blank lines and
/// text after '#' are ignored. Throws Error(parse) naming the line.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: header, then edges u < v in sorted order, each
/// line newline-terminated.
std::string to_edge_list(const Graph& g);

/// Generator strings:
///
///   graph   := family | "corona(" graph "," graph ")" | "gadget(" graph ")"
///   family  := name ":" [subcase ","] int ("," int)*
///
/// with names path, cycle, complete, empty, star, double_star, kbipartite,
/// kpartite, g1, g2, g3, h1..h6, sharpness_h. Examples: "path:6",
/// "kbipartite:3,7", "h1:a1,2", "corona(path:2,empty:2)", "gadget(cycle:4)".
FamilySpec parse_family_spec(std::string_view text);

std::string to_text(const FamilySpec& spec);

/// Edge-list text if the input starts with a digit, otherwise a generator
/// string.
Graph parse_graph(std::string_view text);

}  // namespace oidrd
