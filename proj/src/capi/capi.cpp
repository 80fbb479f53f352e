#include "oidrd/oidrd.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/brute_force.hpp"
#include "core/characterize.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/formulas.hpp"
#include "core/harness.hpp"
#include "core/io.hpp"
#include "core/reduction.hpp"
#include "core/solver.hpp"

struct oidrd_graph {
    oidrd::Graph g;
};

namespace {

using nlohmann::json;
using namespace oidrd;

thread_local std::string last_error;

oidrd_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_argument: return OIDRD_ERR_INVALID_ARGUMENT;
        case ErrorKind::parse: return OIDRD_ERR_PARSE;
        case ErrorKind::cap_exceeded: return OIDRD_ERR_CAP_EXCEEDED;
        case ErrorKind::precondition: return OIDRD_ERR_PRECONDITION;
    }
    return OIDRD_ERR_INTERNAL;
}

template <class F>
oidrd_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return OIDRD_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return OIDRD_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) fail(ErrorKind::invalid_argument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(json j, char** out) {
    json doc{{"schema", "oidrd/1"}};
    doc.update(j);
    *out = dup(doc.dump(2));
}

Invariant parse_invariant(const char* name) {
    require(name, "invariant");
    auto inv = invariant_from_name(name);
    if (!inv) fail(ErrorKind::invalid_argument, std::string("unknown invariant '") + name + "'");
    return *inv;
}

json bundle_json(const InvariantBundle& b) {
    return {{"gamma", b.gamma},         {"alpha", b.alpha},         {"beta", b.beta},
            {"gamma_r", b.gamma_r},     {"gamma_oir", b.gamma_oir}, {"gamma_dr", b.gamma_dr},
            {"gamma_oidr", b.gamma_oidr}};
}

json graph_summary(const Graph& g) { return {{"n", g.order()}, {"m", g.size()}}; }

json match_json(const PatternMatch& m) {
    return {{"family", family_name(m.family)}, {"subcase", m.subcase}, {"anchors", m.anchors}, {"sets", m.sets}};
}

std::optional<int> closed_form(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](std::size_t k) {
        if (p.size() != k)
            fail(ErrorKind::invalid_argument, std::string(family_name(spec.tag)) + " takes " + std::to_string(k) +
                                                  " parameter(s)");
    };
    switch (spec.tag) {
        case Family::path: arity(1); return formula_path(p[0]);
        case Family::cycle: arity(1); return formula_cycle(p[0]);
        case Family::complete: arity(1); return formula_complete(p[0]);
        case Family::star: arity(1); return formula_complete_bipartite(1, p[0]);
        case Family::complete_bipartite: arity(2); return formula_complete_bipartite(p[0], p[1]);
        case Family::complete_multipartite:
            if (p.size() == 2) return formula_complete_bipartite(p[0], p[1]);
            return formula_complete_multipartite(p);
        default: return std::nullopt;
    }
}

}  // namespace

extern "C" {

const char* oidrd_last_error(void) { return last_error.c_str(); }

const char* oidrd_version(void) { return "1.0.0"; }

void oidrd_string_free(char* s) { std::free(s); }

oidrd_status oidrd_graph_parse(const char* text, oidrd_graph** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new oidrd_graph{parse_graph(text)};
    });
}

oidrd_status oidrd_graph_from_edges(int n, const int* edges, int m, oidrd_graph** out) {
    return guarded([&] {
        require(out, "out");
        if (n < 0 || m < 0) fail(ErrorKind::invalid_argument, "vertex and edge counts must be nonnegative");
        if (m > 0) require(edges, "edges");
        std::vector<Edge> es;
        for (int i = 0; i < m; ++i) es.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new oidrd_graph{Graph(n, es)};
    });
}

void oidrd_graph_free(oidrd_graph* g) { delete g; }

int oidrd_graph_order(const oidrd_graph* g) { return g ? g->g.order() : -1; }

int oidrd_graph_size(const oidrd_graph* g) { return g ? g->g.size() : -1; }

oidrd_status oidrd_graph_edge_list(const oidrd_graph* g, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = dup(to_edge_list(g->g));
    });
}

oidrd_status oidrd_solve_value(const oidrd_graph* g, const char* invariant, int* value) {
    return guarded([&] {
        require(g, "graph");
        require(value, "value");
        *value = solve(g->g, parse_invariant(invariant)).value;
    });
}

oidrd_status oidrd_solve_json(const oidrd_graph* g, const char* invariant, unsigned workers, int count_optima,
                              char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const Invariant inv = parse_invariant(invariant);
        const SolveResult r = solve(g->g, inv, {workers});
        json j = graph_summary(g->g);
        const std::string name(invariant_name(inv));
        j["invariant"] = name;
        j[name] = r.value;
        j["value"] = r.value;
        j["witness"] = to_text(r.witness);
        const ClassPartition c = classes(r.witness);
        j["classes"] = {{"v0", c.v0}, {"v1", c.v1}, {"v2", c.v2}, {"v3", c.v3}};
        j["node_count"] = r.node_count;
        if (count_optima) j["optimal_count"] = *brute_force(g->g, inv).optimal_count;
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_bundle_json(const oidrd_graph* g, unsigned workers, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        json j = graph_summary(g->g);
        j.update(bundle_json(bundle(g->g, {workers})));
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_bounds_json(const oidrd_graph* g, unsigned workers, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const InvariantBundle b = bundle(g->g, {workers});
        const int delta = max_degree(g->g);
        json j = graph_summary(g->g);
        j.update(bundle_json(b));
        j["max_degree"] = delta;
        // lower bound as num/den; without edges the 2 alpha / Delta term is undefined
        std::int64_t num = b.gamma + b.beta, den = 1;
        if (delta > 0) {
            j["alpha_term"] = {{"num", 2 * b.alpha}, {"den", delta}};
            num = std::max<std::int64_t>(std::int64_t{b.gamma} * delta, 2 * std::int64_t{b.alpha}) +
                  std::int64_t{b.beta} * delta;
            den = delta;
        } else {
            j["alpha_term"] = nullptr;
        }
        j["lower_bound"] = {{"num", num}, {"den", den}};
        j["upper_bound"] = 3 * b.beta;
        j["lower_holds"] = num <= std::int64_t{b.gamma_oidr} * den;
        j["upper_holds"] = b.gamma_oidr <= 3 * b.beta;
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_classify_json(const oidrd_graph* g, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const ClassifyResult c = classify(g->g);
        const int value = solve_oidrd(g->g).value;
        json j = graph_summary(g->g);
        j["class"] = value_class_name(c.value_class);
        j["match"] = c.match ? match_json(*c.match) : json(nullptr);
        j["gamma_oidr"] = value;
        j["agrees"] = value_class_of(value) == c.value_class;
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_reduce_json(const oidrd_graph* g, int max_order, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const GadgetMap map = build_gadget(g->g);
        const IdentityReport r = verify_identity(g->g, max_order > 0 ? max_order : kReductionCap);
        json j = graph_summary(g->g);
        j["gadget"] = to_edge_list(map.gadget);
        j["gadget_n"] = map.gadget.order();
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["alpha"] = r.alpha;
        j["equal"] = r.equal;
        j["witness"] = to_text(r.witness);
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_corona_json(const oidrd_graph* g, const oidrd_graph* h, int verify, char** out) {
    return guarded([&] {
        require(g, "graph G");
        require(h, "graph H");
        require(out, "out");
        const CoronaFormula f = corona_formula(g->g, h->g);
        json j;
        j["g"] = graph_summary(g->g);
        j["h"] = graph_summary(h->g);
        j["h_bundle"] = bundle_json(f.h_bundle);
        j["coefficients"] = {{"c0", f.coefficients.c0},
                             {"c1", f.coefficients.c1},
                             {"c2", f.coefficients.c2},
                             {"c3", f.coefficients.c3}};
        j["formula"] = f.value;
        if (verify) {
            const int direct = solve_oidrd(corona(g->g, h->g)).value;
            j["solver"] = direct;
            j["agrees"] = direct == f.value;
        }
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_formula_json(const char* spec_text, int verify, char** out) {
    return guarded([&] {
        require(spec_text, "spec");
        require(out, "out");
        const FamilySpec spec = parse_family_spec(spec_text);
        const auto value = closed_form(spec);
        if (!value)
            fail(ErrorKind::invalid_argument,
                 "no closed form for family '" + std::string(family_name(spec.tag)) +
                     "'; use path, cycle, complete, star, kbipartite or kpartite");
        json j;
        j["family"] = to_text(spec);
        j["formula"] = *value;
        if (verify) {
            const int direct = solve_oidrd(family(spec)).value;
            j["solver"] = direct;
            j["agrees"] = direct == *value;
        }
        emit(std::move(j), out);
    });
}

oidrd_status oidrd_audit_json(const char* campaign, int max_n, uint64_t seed, unsigned workers, char** out) {
    return guarded([&] {
        require(campaign, "campaign");
        require(out, "out");
        const AuditReport r = run_campaign(campaign, max_n, {workers, seed});
        *out = dup(report_to_json(r).dump(2));
    });
}

oidrd_status oidrd_campaign_names(char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup(json(campaign_names()).dump());
    });
}

oidrd_status oidrd_audit_csv(const char* report_json, char** out) {
    return guarded([&] {
        require(out, "out");
        if (!report_json) {
            *out = dup(csv_header());
            return;
        }
        json j;
        try {
            j = json::parse(report_json);
        } catch (const json::exception& e) {
            fail(ErrorKind::parse, std::string("report is not valid JSON: ") + e.what());
        }
        *out = dup(csv_row(report_from_json(j)));
    });
}

}  // extern "C"
