#pragma once

#include <string>

#include "core/graph.hpp"
#include "core/io.hpp"
#include "oracles.hpp"

inline oracle::Adj adj(const oidrd::Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (auto e : g.edges()) es.push_back(e);
    return oracle::Adj(g.order(), es);
}

inline oidrd::Graph G(const std::string& text) { return oidrd::parse_graph(text); }

inline std::vector<int> degrees(const oidrd::Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    return d;
}
