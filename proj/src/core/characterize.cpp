#include "core/characterize.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "core/errors.hpp"

namespace oidrd {

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) fail(ErrorKind::precondition, "recognition needs a connected graph");
}

void require_classifiable(const Graph& g) {
    require_connected(g);
    if (g.order() < 3) fail(ErrorKind::precondition, "classification needs order n >= 3");
}

bool anchor_edges_match(const Graph& g, const PatternFamily& p, std::span<const Vertex> anchors) {
    for (int i = 0; i < p.anchor_count; ++i)
        for (int j = i + 1; j < p.anchor_count; ++j) {
            const bool want = std::any_of(p.anchor_edges.begin(), p.anchor_edges.end(), [&](const Edge& e) {
                return (e.first == i && e.second == j) || (e.first == j && e.second == i);
            });
            if (g.adjacent(anchors[i], anchors[j]) != want) return false;
        }
    return true;
}

// Partitions the non-anchor vertices by exact neighborhood. nullopt if some
// vertex fits no V-set.
std::optional<std::vector<std::vector<Vertex>>> partition(const Graph& g, const PatternFamily& p,
                                                         std::span<const Vertex> anchors) {
    std::vector<std::vector<Vertex>> sets(p.set_masks.size());
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::find(anchors.begin(), anchors.end(), x) != anchors.end()) continue;
        unsigned mask = 0;
        for (int i = 0; i < p.anchor_count; ++i)
            if (g.adjacent(x, anchors[i])) mask |= 1U << i;
        if (std::popcount(mask) != g.degree(x)) return std::nullopt;
        auto it = std::find(p.set_masks.begin(), p.set_masks.end(), mask);
        if (it == p.set_masks.end()) return std::nullopt;
        sets[it - p.set_masks.begin()].push_back(x);
    }
    return sets;
}

std::optional<PatternMatch> try_anchors(const Graph& g, const PatternFamily& p, std::span<const Vertex> anchors) {
    if (!anchor_edges_match(g, p, anchors)) return std::nullopt;
    auto sets = partition(g, p, anchors);
    if (!sets) return std::nullopt;
    std::vector<int> sizes;
    for (const auto& s : *sets) sizes.push_back(static_cast<int>(s.size()));
    const auto sub = matching_subcase(p.tag, sizes);
    if (!sub) return std::nullopt;
    return PatternMatch{p.tag, std::string(*sub), {anchors.begin(), anchors.end()}, std::move(*sets)};
}

std::optional<PatternMatch> first_of(const Graph& g, std::span<const Family> families) {
    for (Family f : families)
        if (auto m = recognize(g, f)) return m;
    return std::nullopt;
}

}  // namespace

std::string_view value_class_name(ValueClass c) {
    switch (c) {
        case ValueClass::three: return "THREE";
        case ValueClass::four: return "FOUR";
        case ValueClass::five: return "FIVE";
        case ValueClass::other: return "OTHER";
    }
    return "?";
}

ValueClass value_class_of(int gamma_oidr) {
    switch (gamma_oidr) {
        case 3: return ValueClass::three;
        case 4: return ValueClass::four;
        case 5: return ValueClass::five;
        default: return ValueClass::other;
    }
}

std::optional<PatternMatch> recognize(const Graph& g, Family f) {
    const PatternFamily& p = pattern_family(f);
    const int n = g.order();
    if (n < p.anchor_count) return std::nullopt;
    std::array<Vertex, 3> a{};
    // ordered tuples of distinct vertices, lexicographic
    for (a[0] = 0; a[0] < n; ++a[0]) {
        if (p.anchor_count == 1) {
            if (auto m = try_anchors(g, p, std::span(a.data(), 1))) return m;
            continue;
        }
        for (a[1] = 0; a[1] < n; ++a[1]) {
            if (a[1] == a[0]) continue;
            if (p.anchor_count == 2) {
                if (auto m = try_anchors(g, p, std::span(a.data(), 2))) return m;
                continue;
            }
            for (a[2] = 0; a[2] < n; ++a[2]) {
                if (a[2] == a[0] || a[2] == a[1]) continue;
                if (auto m = try_anchors(g, p, std::span(a.data(), 3))) return m;
            }
        }
    }
    return std::nullopt;
}

bool is_star(const Graph& g) {
    require_classifiable(g);
    return recognize(g, Family::star).has_value();
}

std::optional<PatternMatch> recognize_G(const Graph& g) {
    require_connected(g);
    static constexpr std::array kG{Family::g1, Family::g2, Family::g3};
    return first_of(g, kG);
}

std::optional<PatternMatch> recognize_H(const Graph& g) {
    require_connected(g);
    static constexpr std::array kH{Family::h1, Family::h2, Family::h3, Family::h4, Family::h5, Family::h6};
    return first_of(g, kH);
}

ClassifyResult classify(const Graph& g) {
    require_classifiable(g);
    if (auto m = recognize(g, Family::star)) return {ValueClass::three, std::move(m)};
    if (auto m = recognize_G(g)) return {ValueClass::four, std::move(m)};
    if (auto m = recognize_H(g)) return {ValueClass::five, std::move(m)};
    return {ValueClass::other, std::nullopt};
}

bool verify_match(const Graph& g, const PatternMatch& m) {
    const PatternFamily& p = pattern_family(m.family);
    if (static_cast<int>(m.anchors.size()) != p.anchor_count || m.sets.size() != p.set_masks.size())
        return false;
    std::vector<int> seen(g.order(), 0);
    for (Vertex a : m.anchors) {
        if (a < 0 || a >= g.order() || seen[a]++) return false;
    }
    if (!anchor_edges_match(g, p, m.anchors)) return false;
    std::vector<int> sizes;
    for (std::size_t i = 0; i < m.sets.size(); ++i) {
        std::vector<Vertex> expected;
        for (int k = 0; k < p.anchor_count; ++k)
            if ((p.set_masks[i] >> k) & 1U) expected.push_back(m.anchors[k]);
        std::sort(expected.begin(), expected.end());
        for (Vertex x : m.sets[i]) {
            if (x < 0 || x >= g.order() || seen[x]++) return false;
            auto nb = g.neighbors(x);
            if (!std::equal(nb.begin(), nb.end(), expected.begin(), expected.end())) return false;
        }
        sizes.push_back(static_cast<int>(m.sets[i].size()));
    }
    if (std::count(seen.begin(), seen.end(), 1) != g.order()) return false;
    return subcase_holds(m.family, m.subcase, sizes);
}

}  // namespace oidrd
