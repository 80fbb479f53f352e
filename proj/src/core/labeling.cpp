#include "core/labeling.hpp"

#include <algorithm>
#include <array>

#include "core/errors.hpp"

namespace oidrd {

namespace {

void check_value(int value) {
    if (value < 0 || value > 3)
        fail(ErrorKind::invalid_argument, "label " + std::to_string(value) + " outside {0,1,2,3}");
}

void check_fit(const Graph& g, const Labeling& f) {
    if (f.size() != g.order())
        fail(ErrorKind::invalid_argument, "labeling has " + std::to_string(f.size()) +
                                              " values but the graph has " +
                                              std::to_string(g.order()) + " vertices");
}

void check_binary(const Labeling& f) {
    for (int v = 0; v < f.size(); ++v)
        if (f[v] > 1) fail(ErrorKind::invalid_argument, "vertex-set indicator must be 0/1");
}

std::array<int, 4> neighbor_counts(const Graph& g, const Labeling& f, Vertex v) {
    std::array<int, 4> c{};
    for (Vertex u : g.neighbors(v)) ++c[f[u]];
    return c;
}

bool no_edge_within(const Graph& g, const Labeling& f, int value) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f[v] != value) continue;
        for (Vertex u : g.neighbors(v))
            if (u > v && f[u] == value) return false;
    }
    return true;
}

bool zeros_independent(const Graph& g, const Labeling& f) { return no_edge_within(g, f, 0); }

}  // namespace

Labeling::Labeling(int n, int fill) : values_(n, 0) {
    check_value(fill);
    std::fill(values_.begin(), values_.end(), static_cast<std::uint8_t>(fill));
}

Labeling::Labeling(std::vector<int> values) {
    values_.reserve(values.size());
    for (int x : values) {
        check_value(x);
        values_.push_back(static_cast<std::uint8_t>(x));
    }
}

void Labeling::set(Vertex v, int value) {
    check_value(value);
    values_[v] = static_cast<std::uint8_t>(value);
}

int weight(const Labeling& f) {
    int w = 0;
    for (auto x : f.values()) w += x;
    return w;
}

ClassPartition classes(const Labeling& f) {
    ClassPartition p;
    std::array<std::vector<Vertex>*, 4> slot{&p.v0, &p.v1, &p.v2, &p.v3};
    for (Vertex v = 0; v < f.size(); ++v) slot[f[v]]->push_back(v);
    return p;
}

bool is_drd(const Graph& g, const Labeling& f) {
    check_fit(g, f);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f[v] >= 2) continue;
        const auto c = neighbor_counts(g, f, v);
        if (f[v] == 0 && !(c[3] >= 1 || c[2] >= 2)) return false;
        if (f[v] == 1 && c[2] + c[3] == 0) return false;
    }
    return true;
}

bool is_oidrd(const Graph& g, const Labeling& f) { return is_drd(g, f) && zeros_independent(g, f); }

bool is_rd(const Graph& g, const Labeling& f) {
    check_fit(g, f);
    for (Vertex v = 0; v < g.order(); ++v)
        if (f[v] == 3) fail(ErrorKind::invalid_argument, "Roman labeling contains a 3");
    for (Vertex v = 0; v < g.order(); ++v)
        if (f[v] == 0 && neighbor_counts(g, f, v)[2] == 0) return false;
    return true;
}

bool is_oird(const Graph& g, const Labeling& f) { return is_rd(g, f) && zeros_independent(g, f); }

bool is_independent_set(const Graph& g, const Labeling& f) {
    check_fit(g, f);
    check_binary(f);
    return no_edge_within(g, f, 1);
}

bool is_vertex_cover(const Graph& g, const Labeling& f) {
    check_fit(g, f);
    check_binary(f);
    return zeros_independent(g, f);
}

bool is_dominating_set(const Graph& g, const Labeling& f) {
    check_fit(g, f);
    check_binary(f);
    for (Vertex v = 0; v < g.order(); ++v)
        if (f[v] == 0 && neighbor_counts(g, f, v)[1] == 0) return false;
    return true;
}

std::string to_text(const Labeling& f) {
    std::string out;
    for (int v = 0; v < f.size(); ++v) {
        if (v) out += ',';
        out += static_cast<char>('0' + f[v]);
    }
    return out;
}

Labeling labeling_from_text(std::string_view text) {
    std::vector<int> values;
    bool expect_digit = true;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (expect_digit) {
            if (ch < '0' || ch > '3')
                fail(ErrorKind::parse, std::string("expected a label 0..3, found '") + ch + "'");
            values.push_back(ch - '0');
            expect_digit = false;
        } else {
            if (ch != ',') fail(ErrorKind::parse, std::string("expected ',', found '") + ch + "'");
            expect_digit = true;
        }
    }
    if (expect_digit && !values.empty()) fail(ErrorKind::parse, "trailing ',' in labeling");
    return Labeling(std::move(values));
}

}  // namespace oidrd
