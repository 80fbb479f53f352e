#include "core/families.hpp"

#include <algorithm>
#include <array>

#include "core/errors.hpp"
#include "core/reduction.hpp"

namespace oidrd {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 20> kNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::empty, "empty"},
    {Family::star, "star"},
    {Family::double_star, "double_star"},
    {Family::complete_bipartite, "kbipartite"},
    {Family::complete_multipartite, "kpartite"},
    {Family::g1, "g1"},
    {Family::g2, "g2"},
    {Family::g3, "g3"},
    {Family::h1, "h1"},
    {Family::h2, "h2"},
    {Family::h3, "h3"},
    {Family::h4, "h4"},
    {Family::h5, "h5"},
    {Family::h6, "h6"},
    {Family::sharpness_h, "sharpness_h"},
    {Family::corona, "corona"},
    {Family::gadget, "gadget"},
}};

constexpr unsigned A = 0b001, B = 0b010, C = 0b100;

const std::array<PatternFamily, 10>& pattern_table() {
    static const std::array<PatternFamily, 10> table{{
        {Family::star, 1, {}, {A}, {}},
        {Family::g1, 2, {{0, 1}}, {A | B, A}, {}},
        {Family::g2, 2, {{0, 1}}, {A | B}, {}},
        {Family::g3, 2, {}, {A | B}, {}},
        {Family::h1, 3, {{0, 1}, {1, 2}}, {A | B | C, A | B, B | C, B}, {"a1", "b1", "c1"}},
        {Family::h2, 3, {{0, 1}, {1, 2}, {0, 2}}, {A | B | C, A | B, B | C, B}, {"a2", "b2"}},
        {Family::h3, 2, {}, {A, A | B}, {}},
        {Family::h4, 3, {{1, 2}}, {A | B | C, A | B}, {"a4", "b4"}},
        {Family::h5, 3, {{0, 1}, {1, 2}}, {A | B | C, A | B}, {"a5", "b5"}},
        {Family::h6, 3, {{0, 1}, {1, 2}}, {A | B | C, A | C}, {"a6", "b6"}},
    }};
    return table;
}

constexpr std::array<Family, 10> kPatternOrder{
    Family::star, Family::g1, Family::g2, Family::g3, Family::h1,
    Family::h2,   Family::h3, Family::h4, Family::h5, Family::h6,
};

void require(bool ok, const std::string& message) {
    if (!ok) fail(ErrorKind::precondition, message);
}

std::string with_params(Family f, std::span<const int> params) {
    std::string out(family_name(f));
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    return out;
}

void require_count(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
    require(spec.params.size() >= lo && spec.params.size() <= hi,
            std::string(family_name(spec.tag)) + " expects " + std::to_string(lo) +
                (lo == hi ? "" : ".." + std::to_string(hi)) + " parameter(s), got " +
                std::to_string(spec.params.size()));
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_multipartite(std::span<const int> parts) {
    std::vector<int> start;
    int n = 0;
    for (int p : parts) {
        require(p >= 1, "every part needs at least one vertex");
        start.push_back(n);
        n += p;
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u = start[i]; u < start[i] + parts[i]; ++u)
                for (int v = start[j]; v < start[j] + parts[j]; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph double_star(int a, int b) {
    require(a >= 1 && b >= 1, "double_star needs a, b >= 1");
    std::vector<Edge> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
    return Graph(next, e);
}

}  // namespace

std::string_view family_name(Family f) {
    for (auto [tag, name] : kNames)
        if (tag == f) return name;
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (auto [tag, n] : kNames)
        if (n == name) return tag;
    return std::nullopt;
}

const PatternFamily& pattern_family(Family f) {
    for (const auto& p : pattern_table())
        if (p.tag == f) return p;
    fail(ErrorKind::invalid_argument, std::string(family_name(f)) + " is not an anchor-pattern family");
}

std::span<const Family> pattern_families() { return kPatternOrder; }

bool subcase_holds(Family f, std::string_view sub, std::span<const int> s) {
    const auto& p = pattern_family(f);
    if (s.size() != p.set_masks.size()) return false;
    if (std::any_of(s.begin(), s.end(), [](int x) { return x < 0; })) return false;
    switch (f) {
        case Family::star: return sub.empty() && s[0] >= 2;
        case Family::g1: return sub.empty() && s[0] >= 1 && s[1] >= 1;
        case Family::g2: return sub.empty() && s[0] >= 1;
        case Family::g3: return sub.empty() && s[0] >= 2;
        case Family::h3: return sub.empty() && s[0] >= 1 && s[1] >= 1;
        default: break;
    }
    // sets for h1/h2: abc, ab, bc, b; for h4/h5: abc, ab; for h6: abc, ac
    const int abc = s[0], second = s[1];
    if (f == Family::h1) {
        const int bc = s[2];
        if (sub == "a1") return second == 0 && bc == 0 && abc >= 2;
        if (sub == "b1") return ((second == 0) != (bc == 0)) && abc >= 1;
        if (sub == "c1") return second >= 1 && bc >= 1;
        return false;
    }
    if (f == Family::h2) {
        const int bc = s[2];
        if (sub == "a2") return abc >= 1;
        if (sub == "b2") return second >= 1 && bc >= 1;
        return false;
    }
    if (f == Family::h4) {
        if (sub == "a4") return second == 0 && abc >= 2;
        if (sub == "b4") return second >= 1;
        return false;
    }
    if (f == Family::h5) {
        if (sub == "a5") return second >= 1 && abc >= 1;
        if (sub == "b5") return second == 0 && abc >= 2;
        return false;
    }
    if (f == Family::h6) {
        if (sub == "a6") return second >= 1 && abc >= 1;
        if (sub == "b6") return second == 0 && abc >= 2;
        return false;
    }
    return false;
}

std::optional<std::string_view> matching_subcase(Family f, std::span<const int> sizes) {
    const auto& p = pattern_family(f);
    if (p.subcases.empty()) {
        if (subcase_holds(f, "", sizes)) return std::string_view{};
        return std::nullopt;
    }
    for (std::string_view sub : p.subcases)
        if (subcase_holds(f, sub, sizes)) return sub;
    return std::nullopt;
}

Graph build_pattern(Family f, std::span<const int> sizes) {
    const auto& p = pattern_family(f);
    require(sizes.size() == p.set_masks.size(),
            std::string(family_name(f)) + " expects " + std::to_string(p.set_masks.size()) +
                " set size(s)");
    require(matching_subcase(f, sizes).has_value(),
            with_params(f, sizes) + " satisfies none of the family's conditions");
    std::vector<Edge> e(p.anchor_edges.begin(), p.anchor_edges.end());
    int next = p.anchor_count;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (int k = 0; k < sizes[i]; ++k, ++next)
            for (int a = 0; a < p.anchor_count; ++a)
                if ((p.set_masks[i] >> a) & 1U) e.emplace_back(a, next);
    }
    return Graph(next, e);
}

Graph corona(const Graph& g, const Graph& h) {
    require(g.order() >= 1 && h.order() >= 1, "corona needs two nonempty graphs");
    const int gn = g.order(), hn = h.order();
    std::vector<Edge> e = g.edges();
    const auto h_edges = h.edges();
    for (int i = 0; i < gn; ++i) {
        const int base = gn + i * hn;
        for (auto [u, v] : h_edges) e.emplace_back(base + u, base + v);
        for (int w = 0; w < hn; ++w) e.emplace_back(i, base + w);
    }
    return Graph(gn * (1 + hn), e);
}

Graph sharpness_h(std::span<const int> m) {
    const int t = static_cast<int>(m.size());
    require(t >= 3, "sharpness_h needs t >= 3 so that the z-vertices form a simple cycle");
    std::vector<Edge> e;
    std::vector<Vertex> z(t);
    int next = 0;
    for (int i = 0; i < t; ++i) {
        require(m[i] >= 2, "sharpness_h needs every m_i >= 2");
        const Vertex x = next, y = next + 1;
        z[i] = next + 2;
        e.emplace_back(x, z[i]);
        e.emplace_back(y, z[i]);
        next += 3;
        for (int k = 0; k < m[i]; ++k, ++next) {
            e.emplace_back(x, next);
            e.emplace_back(y, next);
        }
    }
    for (int i = 0; i < t; ++i) e.emplace_back(z[i], z[(i + 1) % t]);
    return Graph(next, e);
}

Graph family(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.tag) {
        case Family::path:
            require_count(spec, 1, 1);
            return path_graph(p[0]);
        case Family::cycle:
            require_count(spec, 1, 1);
            return cycle_graph(p[0]);
        case Family::complete: {
            require_count(spec, 1, 1);
            require(p[0] >= 1, "complete needs n >= 1");
            std::vector<int> parts(p[0], 1);
            return p[0] == 1 ? Graph::empty(1) : complete_multipartite(parts);
        }
        case Family::empty:
            require_count(spec, 1, 1);
            require(p[0] >= 1, "empty needs n >= 1");
            return Graph::empty(p[0]);
        case Family::star:
            require_count(spec, 1, 1);
            require(p[0] >= 1, "star needs at least one leaf");
            return complete_multipartite(std::array{1, p[0]});
        case Family::double_star:
            require_count(spec, 2, 2);
            return double_star(p[0], p[1]);
        case Family::complete_bipartite:
            require_count(spec, 2, 2);
            return complete_multipartite(p);
        case Family::complete_multipartite:
            require(p.size() >= 2, "kpartite needs at least two parts");
            return complete_multipartite(p);
        case Family::g1:
            require_count(spec, 2, 2);
            return build_pattern(spec.tag, p);
        case Family::g2:
        case Family::g3:
            require_count(spec, 1, 1);
            return build_pattern(spec.tag, p);
        case Family::h1:
        case Family::h2:
        case Family::h3:
        case Family::h4:
        case Family::h5:
        case Family::h6: {
            const auto& pf = pattern_family(spec.tag);
            require_count(spec, 1, pf.set_masks.size());
            std::vector<int> sizes(p.begin(), p.end());
            sizes.resize(pf.set_masks.size(), 0);
            if (!spec.subcase.empty()) {
                require(std::find(pf.subcases.begin(), pf.subcases.end(), spec.subcase) !=
                            pf.subcases.end(),
                        std::string(family_name(spec.tag)) + " has no subcase '" + spec.subcase + "'");
                require(subcase_holds(spec.tag, spec.subcase, sizes),
                        with_params(spec.tag, sizes) + " violates subcase " + spec.subcase);
            }
            return build_pattern(spec.tag, sizes);
        }
        case Family::sharpness_h: {
            require(!p.empty(), "sharpness_h needs t");
            const int t = p[0];
            require(t >= 3, "sharpness_h needs t >= 3 so that the z-vertices form a simple cycle");
            std::vector<int> m(p.begin() + 1, p.end());
            if (m.empty()) m.assign(t, 2);
            require(static_cast<int>(m.size()) == t,
                    "sharpness_h:t expects either no sizes or exactly t sizes m_1..m_t");
            return sharpness_h(m);
        }
        case Family::corona:
            require(spec.children.size() == 2, "corona needs two graph arguments");
            return corona(family(spec.children[0]), family(spec.children[1]));
        case Family::gadget:
            require(spec.children.size() == 1, "gadget needs one graph argument");
            return build_gadget(family(spec.children[0])).gadget;
    }
    fail(ErrorKind::invalid_argument, "unknown family");
}

}  // namespace oidrd
