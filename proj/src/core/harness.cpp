#include "core/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "core/brute_force.hpp"
#include "core/characterize.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/formulas.hpp"
#include "core/io.hpp"
#include "core/reduction.hpp"
#include "core/solver.hpp"

namespace oidrd {

namespace {

using Clock = std::chrono::steady_clock;

// Per-instance findings; merged into the report in input order.
struct Outcome {
    std::vector<Violation> violations;
    std::map<std::string, std::int64_t> notes;

    void claim(bool ok, const Graph& g, const std::string& id, std::int64_t lhs, std::int64_t rhs) {
        if (!ok) violations.push_back({to_edge_list(g), id, lhs, rhs});
    }
    void note(const std::string& key, std::int64_t by = 1) { notes[key] += by; }

    void merge(Outcome&& other) {
        for (auto& v : other.violations) violations.push_back(std::move(v));
        for (auto& [k, v] : other.notes) notes[k] += v;
    }
};

using Check = std::function<void(const Graph&, Outcome&)>;
using Source = std::function<std::optional<Graph>()>;

constexpr std::size_t kBatch = 2048;

void for_each_index(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
}

// Pulls graphs from `source` in batches and checks them, in parallel when
// asked. Returns the number of graphs checked.
std::int64_t sweep(const Source& source, const Check& check, unsigned workers, Outcome& total) {
    std::int64_t count = 0;
    while (true) {
        std::vector<Graph> batch;
        while (batch.size() < kBatch) {
            auto g = source();
            if (!g) break;
            batch.push_back(std::move(*g));
        }
        if (batch.empty()) break;
        std::vector<Outcome> out(batch.size());
        for_each_index(batch.size(), workers, [&](std::size_t i) { check(batch[i], out[i]); });
        for (auto& o : out) total.merge(std::move(o));
        count += static_cast<std::int64_t>(batch.size());
        if (batch.size() < kBatch) break;
    }
    return count;
}

std::int64_t sweep(std::vector<Graph> graphs, const Check& check, unsigned workers, Outcome& total) {
    std::size_t i = 0;
    return sweep([&]() -> std::optional<Graph> {
        if (i == graphs.size()) return std::nullopt;
        return std::move(graphs[i++]);
    }, check, workers, total);
}

Source stream_source(GraphStream& s) {
    return [&s] { return s.next(); };
}

std::vector<Graph> sample(int count, const std::function<Graph()>& draw) {
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(draw());
    return out;
}

class Campaign {
public:
    Campaign(std::string name, const CampaignOptions& opts) : opts_(opts), start_(Clock::now()) {
        report_.campaign = std::move(name);
    }

    void param(const std::string& key, std::int64_t value) { report_.parameters[key] = value; }
    void use_seed() { report_.seed = opts_.seed; }
    unsigned workers() const { return opts_.workers; }
    Outcome& outcome() { return outcome_; }
    void count(std::int64_t n) { report_.instances_checked += n; }

    std::int64_t run(const Source& s, const Check& c) {
        const auto n = sweep(s, c, opts_.workers, outcome_);
        count(n);
        return n;
    }
    std::int64_t run(std::vector<Graph> gs, const Check& c) {
        const auto n = sweep(std::move(gs), c, opts_.workers, outcome_);
        count(n);
        return n;
    }

    AuditReport finish() {
        report_.violations = std::move(outcome_.violations);
        std::sort(report_.violations.begin(), report_.violations.end());
        report_.notes = std::move(outcome_.notes);
        report_.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    CampaignOptions opts_;
    Clock::time_point start_;
    AuditReport report_;
    Outcome outcome_;
};

void require_range(int value, int lo, int hi, const std::string& what) {
    if (value < lo || value > hi)
        fail(ErrorKind::invalid_argument,
             what + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " + std::to_string(value));
}

Graph named(const std::string& dsl) { return parse_graph(dsl); }

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// Sorted partitions of `total` into exactly k parts, each >= 1.
void partitions(int total, int k, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = min_part; p * k <= total; ++p) {
        cur.push_back(p);
        partitions(total - p, k - 1, p, cur, out);
        cur.pop_back();
    }
}

int class_code(ValueClass c) {
    switch (c) {
        case ValueClass::three: return 3;
        case ValueClass::four: return 4;
        case ValueClass::five: return 5;
        case ValueClass::other: return 6;
    }
    return 0;
}

}  // namespace

nlohmann::json report_to_json(const AuditReport& r) {
    nlohmann::json j;
    j["schema"] = "oidrd/1";
    j["campaign"] = r.campaign;
    j["parameters"] = r.parameters;
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    j["instances_checked"] = r.instances_checked;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"graph", v.graph}, {"claim", v.claim}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["notes"] = r.notes;
    j["runtime_ms"] = r.runtime_ms;
    j["status"] = r.passed() ? "pass" : "fail";
    return j;
}

AuditReport report_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema").get<std::string>() != "oidrd/1")
            fail(ErrorKind::parse, "unsupported report schema '" + j.at("schema").get<std::string>() + "'");
        AuditReport r;
        r.campaign = j.at("campaign").get<std::string>();
        r.parameters = j.at("parameters").get<std::map<std::string, std::int64_t>>();
        if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
        r.instances_checked = j.at("instances_checked").get<std::int64_t>();
        for (const auto& v : j.at("violations"))
            r.violations.push_back({v.at("graph").get<std::string>(), v.at("claim").get<std::string>(),
                                    v.at("lhs").get<std::int64_t>(), v.at("rhs").get<std::int64_t>()});
        r.notes = j.at("notes").get<std::map<std::string, std::int64_t>>();
        r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
        const std::string status = j.at("status").get<std::string>();
        if (status != (r.passed() ? "pass" : "fail"))
            fail(ErrorKind::parse, "report status '" + status + "' contradicts its violation list");
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("malformed audit report: ") + e.what());
    }
}

std::string csv_header() { return "campaign,instances,violations,runtime_ms,status\n"; }

std::string csv_row(const AuditReport& r) {
    return r.campaign + "," + std::to_string(r.instances_checked) + "," + std::to_string(r.violations.size()) + "," +
           std::to_string(r.runtime_ms) + "," + (r.passed() ? "pass" : "fail") + "\n";
}

AuditReport audit_formulas(const CampaignOptions& opts) {
    Campaign c("formulas", opts);
    struct Case {
        std::string dsl;
        std::string claim;
        int expected;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 11; ++n) cases.push_back({"path:" + std::to_string(n), "path", formula_path(n)});
    for (int n = 3; n <= 11; ++n) cases.push_back({"cycle:" + std::to_string(n), "cycle", formula_cycle(n)});
    for (int n = 1; n <= 9; ++n) cases.push_back({"complete:" + std::to_string(n), "complete", formula_complete(n)});
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; m + n <= 11; ++n)
            cases.push_back({"kbipartite:" + std::to_string(m) + "," + std::to_string(n), "complete_bipartite",
                             formula_complete_bipartite(m, n)});
    for (int total = 3; total <= 10; ++total)
        for (int k = 3; k <= total; ++k) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions(total, k, 1, cur, parts);
            for (const auto& p : parts)
                cases.push_back({"kpartite:" + join(p), "complete_multipartite", formula_complete_multipartite(p)});
        }
    std::vector<Outcome> out(cases.size());
    for_each_index(cases.size(), c.workers(), [&](std::size_t i) {
        const Graph g = named(cases[i].dsl);
        const int got = solve_oidrd(g).value;
        out[i].claim(got == cases[i].expected, g, "formula_" + cases[i].claim, got, cases[i].expected);
        out[i].note(cases[i].claim);
    });
    for (auto& o : out) c.outcome().merge(std::move(o));
    c.count(static_cast<std::int64_t>(cases.size()));
    return c.finish();
}

AuditReport audit_characterization(int max_n, int samples, int sample_n, const CampaignOptions& opts) {
    require_range(max_n, 3, 6, "characterization max_n");
    require_range(samples, 0, 100000, "characterization samples");
    require_range(sample_n, 3, 11, "characterization sample order");
    Campaign c("characterization", opts);
    c.param("max_n", max_n);
    c.param("samples", samples);
    c.param("sample_n", sample_n);
    c.use_seed();

    auto check = [](const std::string& tier) {
        return [tier](const Graph& g, Outcome& o) {
            const int value = solve_oidrd(g).value;
            const ClassifyResult cls = classify(g);
            const ValueClass expected = value_class_of(value);
            o.claim(cls.value_class == expected, g, "value_class", class_code(cls.value_class), value);
            if (cls.match)
                o.claim(verify_match(g, *cls.match), g, "match_certificate", 0, 1);
            o.note(tier + "_" + std::string(value_class_name(expected)));
        };
    };
    std::int64_t exhaustive = 0;
    for (int n = 3; n <= max_n; ++n) {
        GraphStream s = enumerate_connected_graphs(n);
        exhaustive += c.run(stream_source(s), check("n" + std::to_string(n)));
    }
    c.outcome().note("exhaustive_instances", exhaustive);

    Rng rng(opts.seed);
    c.run(sample(samples, [&] { return random_connected_graph(sample_n, rng, sample_n); }),
          check("sampled_n" + std::to_string(sample_n)));

    c.run({named("cycle:5")}, [](const Graph& g, Outcome& o) {
        const int value = solve_oidrd(g).value;
        const ClassifyResult cls = classify(g);
        o.claim(cls.value_class == ValueClass::other, g, "c5_other", class_code(cls.value_class), 6);
        o.claim(value == 6, g, "c5_value", value, 6);
    });
    return c.finish();
}

AuditReport audit_reduction(int max_n, int samples, const CampaignOptions& opts) {
    require_range(max_n, 1, 4, "reduction max_n");
    require_range(samples, 0, 10000, "reduction samples");
    Campaign c("reduction", opts);
    c.param("max_n", max_n);
    c.param("samples", samples);
    c.use_seed();

    const Check check = [](const Graph& g, Outcome& o) {
        const IdentityReport r = verify_identity(g);
        o.claim(r.equal, g, "identity", r.lhs, r.rhs);
        const Labeling indicator = solve_alpha(g).witness;
        std::vector<Vertex> independent;
        for (Vertex v = 0; v < g.order(); ++v)
            if (indicator[v] == 1) independent.push_back(v);
        const GadgetMap map = build_gadget(g);
        const Labeling w = witness_from_independent_set(g, independent);
        o.claim(is_oidrd(map.gadget, w) && weight(w) == r.lhs, g, "independent_set_witness", weight(w), r.lhs);
        if (max_degree(g) <= 3) o.claim(max_degree(map.gadget) <= 4, g, "gadget_max_degree", max_degree(map.gadget), 4);
    };
    std::int64_t exhaustive = 0;
    for (int n = 1; n <= max_n; ++n) {
        GraphStream s = enumerate_all_graphs(n);
        exhaustive += c.run(stream_source(s), check);
    }
    c.outcome().note("exhaustive_instances", exhaustive);
    Rng rng(opts.seed);
    c.run(sample(samples, [&] { return random_connected_graph(5, rng, 3); }), check);
    return c.finish();
}

AuditReport audit_roman_relations(int max_n, const CampaignOptions& opts) {
    require_range(max_n, 1, 5, "roman relations max_n");
    Campaign c("roman_relations", opts);
    c.param("max_n", max_n);
    const Check check = [](const Graph& g, Outcome& o) {
        const int oidr = solve_oidrd(g).value;
        const int oir = solve_gamma_oir(g).value;
        o.claim(oir < oidr, g, "oir_below_oidr", oir, oidr);
        const bool edgeless = g.size() == 0;
        o.claim((oidr == 2 * oir) == edgeless, g, "doubling_iff_edgeless", oidr, 2 * oir);
        if (g.order() >= 2 && is_connected(g)) o.claim(oidr < 2 * oir, g, "strict_sandwich", oidr, 2 * oir);
        for (const Labeling& f : enumerate_optimal(g, Invariant::gamma_oir)) {
            const int v2 = static_cast<int>(classes(f).v2.size());
            o.claim(oidr <= 2 * oir - v2, g, "v2_bound", oidr, 2 * oir - v2);
            o.note("optimal_oir_labelings");
        }
        if (edgeless) o.note("edgeless");
    };
    std::int64_t exhaustive = 0;
    for (int n = 1; n <= max_n; ++n) {
        GraphStream s = enumerate_all_graphs(n);
        exhaustive += c.run(stream_source(s), check);
    }
    c.outcome().note("exhaustive_instances", exhaustive);
    return c.finish();
}

AuditReport audit_bounds(int max_n, const CampaignOptions& opts) {
    require_range(max_n, 2, 6, "bounds max_n");
    Campaign c("bounds", opts);
    c.param("max_n", max_n);
    // lower = max{gamma, 2 alpha / Delta} + beta, kept as the fraction num / Delta
    struct Lower {
        std::int64_t num, den;
    };
    auto lower = [](const InvariantBundle& b, int delta) {
        const std::int64_t d = delta;
        return Lower{std::max<std::int64_t>(std::int64_t{b.gamma} * d, 2 * std::int64_t{b.alpha}) + b.beta * d, d};
    };
    const Check check = [&](const Graph& g, Outcome& o) {
        const InvariantBundle b = bundle(g);
        const Lower lo = lower(b, max_degree(g));
        const std::int64_t scaled = std::int64_t{b.gamma_oidr} * lo.den;
        o.claim(lo.num <= scaled, g, "lower_bound_times_max_degree", lo.num, scaled);
        o.claim(b.gamma_oidr <= 3 * b.beta, g, "upper_bound", b.gamma_oidr, 3 * b.beta);
        if (lo.num == scaled) o.note("lower_bound_attained");
        if (b.gamma_oidr == 3 * b.beta) o.note("upper_bound_attained");
    };
    std::int64_t exhaustive = 0;
    for (int n = 2; n <= max_n; ++n) {
        GraphStream s = enumerate_connected_graphs(n);
        exhaustive += c.run(stream_source(s), check);
    }
    c.outcome().note("exhaustive_instances", exhaustive);

    std::vector<Graph> stars;
    for (int k = 2; k <= 6; ++k) stars.push_back(named("star:" + std::to_string(k)));
    c.run(stars, [&](const Graph& g, Outcome& o) {
        const InvariantBundle b = bundle(g);
        const int delta = max_degree(g);
        const std::int64_t bound = 2 * std::int64_t{b.alpha} + std::int64_t{b.beta} * delta;
        const std::int64_t scaled = std::int64_t{b.gamma_oidr} * delta;
        o.claim(bound == scaled, g, "star_attains_alpha_bound_times_max_degree", bound, scaled);
    });
    std::vector<Graph> coronas;
    for (const char* base : {"path:2", "path:3", "cycle:3"})
        coronas.push_back(named(std::string("corona(") + base + ",empty:2)"));
    c.run(coronas, [](const Graph& g, Outcome& o) {
        const int value = solve_oidrd(g).value;
        const int beta = solve_beta(g).value;
        o.claim(value == 3 * beta, g, "corona_attains_upper_bound", value, 3 * beta);
    });
    return c.finish();
}

AuditReport audit_sharpness_h(const std::vector<int>& m, const CampaignOptions& opts) {
    const int t = static_cast<int>(m.size());
    if (t < 3) fail(ErrorKind::invalid_argument, "sharpness graph needs t >= 3 blocks, got " + std::to_string(t));
    int order = 0;
    for (int mi : m) {
        if (mi < 2) fail(ErrorKind::invalid_argument, "sharpness graph needs every m_i >= 2");
        order += 3 + mi;
    }
    if (order > 24)
        fail(ErrorKind::cap_exceeded, "sharpness graph of order " + std::to_string(order) + " exceeds 24 vertices");
    Campaign c("sharpness_h", opts);
    c.param("t", t);
    for (int i = 0; i < t; ++i) c.param("m" + std::to_string(i + 1), m[i]);
    c.run({sharpness_h(m)}, [t](const Graph& g, Outcome& o) {
        const int value = solve_oidrd(g).value;
        const int beta = solve_beta(g).value;
        const int gamma = solve_gamma(g).value;
        o.claim(value == 4 * t + (t + 1) / 2, g, "weight", value, 4 * t + (t + 1) / 2);
        o.claim(beta == 3 * t - t / 2, g, "beta", beta, 3 * t - t / 2);
        o.claim(gamma == 2 * t, g, "gamma", gamma, 2 * t);
        o.claim(gamma + beta == value, g, "lower_bound_equality", gamma + beta, value);
        o.note("gamma_oidr", value);
        o.note("beta", beta);
        o.note("gamma", gamma);
    });
    return c.finish();
}

AuditReport audit_trees(int max_n, int exhaustive_max, int samples, const CampaignOptions& opts) {
    require_range(max_n, 1, 10, "trees max_n");
    require_range(exhaustive_max, 1, 8, "trees exhaustive_max");
    require_range(samples, 0, 1000000, "trees samples");
    Campaign c("trees", opts);
    c.param("max_n", max_n);
    c.param("exhaustive_max", exhaustive_max);
    c.param("samples_per_order", samples);
    c.use_seed();

    const Check check = [](const Graph& g, Outcome& o) {
        const int value = solve_oidrd(g).value;
        const int beta = solve_beta(g).value;
        o.claim(2 * beta + 1 <= value, g, "lower_bound", 2 * beta + 1, value);
        if (2 * beta + 1 == value) o.note("equality_cases");
    };
    std::int64_t exhaustive = 0;
    for (int n = 1; n <= std::min(max_n, exhaustive_max); ++n) {
        TreeStream s = enumerate_trees(n);
        exhaustive += c.run([&s] { return s.next(); }, check);
    }
    c.outcome().note("exhaustive_instances", exhaustive);
    Rng rng(opts.seed);
    for (int n = exhaustive_max + 1; n <= max_n; ++n)
        c.run(sample(samples, [&] { return random_tree(n, rng); }), check);

    std::vector<Graph> even_paths;
    for (int n = 2; n <= max_n; n += 2) even_paths.push_back(named("path:" + std::to_string(n)));
    c.run(even_paths, [](const Graph& g, Outcome& o) {
        const int value = solve_oidrd(g).value;
        const int beta = solve_beta(g).value;
        o.claim(value == 2 * beta + 1, g, "even_path_equality", value, 2 * beta + 1);
    });
    std::vector<Graph> spiders;
    for (int b = 1; b <= 4; ++b) spiders.push_back(named("double_star:1," + std::to_string(b)));
    for (int a = 2; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) spiders.push_back(named("double_star:" + std::to_string(a) + "," + std::to_string(b)));
    c.run(spiders, [](const Graph& g, Outcome& o) {
        const int value = solve_oidrd(g).value;
        const int beta = solve_beta(g).value;
        // a center with a single leaf has degree 2
        const bool thin = degree(g, 0) == 2 || degree(g, 1) == 2;
        if (thin)
            o.claim(value == 5 && value == 2 * beta + 1, g, "double_star_thin", value, 2 * beta + 1);
        else
            o.claim(value == 6 && value > 2 * beta + 1, g, "double_star_strict", value, 2 * beta + 1);
    });
    return c.finish();
}

AuditReport audit_corona(int max_g, int max_h, const CampaignOptions& opts) {
    require_range(max_g, 1, 3, "corona max_g");
    require_range(max_h, 2, 4, "corona max_h");
    Campaign c("corona", opts);
    c.param("max_g", max_g);
    c.param("max_h", max_h);

    std::vector<Graph> hs;
    for (int n = 2; n <= max_h; ++n) {
        GraphStream s = enumerate_all_graphs(n);
        while (auto h = s.next())
            if (max_degree(*h) <= n - 2) hs.push_back(std::move(*h));
    }
    std::vector<InvariantBundle> hb(hs.size());
    for_each_index(hs.size(), c.workers(), [&](std::size_t i) { hb[i] = bundle(hs[i]); });

    std::vector<Graph> gs;
    for (int n = 1; n <= max_g; ++n) {
        GraphStream s = enumerate_connected_graphs(n);
        while (auto g = s.next()) gs.push_back(std::move(*g));
    }
    struct Pair {
        std::size_t g, h;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < hs.size(); ++j) pairs.push_back({i, j});
    std::vector<Outcome> out(pairs.size());
    for_each_index(pairs.size(), c.workers(), [&](std::size_t k) {
        const Graph& g = gs[pairs[k].g];
        const Graph& h = hs[pairs[k].h];
        const Graph gh = corona(g, h);
        const int formula = corona_formula(g, hb[pairs[k].h], h.order(), max_degree(h));
        const int value = solve_oidrd(gh).value;
        out[k].claim(formula == value, gh, "formula", formula, value);
    });
    for (auto& o : out) c.outcome().merge(std::move(o));
    c.count(static_cast<std::int64_t>(pairs.size()));
    c.outcome().note("h_graphs", static_cast<std::int64_t>(hs.size()));
    c.outcome().note("g_graphs", static_cast<std::int64_t>(gs.size()));

    struct Fixed {
        const char* g;
        const char* h;
        int expected;
    };
    for (const Fixed& f : {Fixed{"path:2", "empty:2", 6}, Fixed{"path:2", "path:4", 10}}) {
        const Graph g = named(f.g), h = named(f.h);
        const Graph gh = corona(g, h);
        const int formula = corona_formula(g, h).value;
        const int value = brute_force_oidrd(gh).value;
        c.outcome().claim(formula == f.expected, gh, "formula_fixed", formula, f.expected);
        c.outcome().claim(value == f.expected, gh, "brute_force_fixed", value, f.expected);
        c.count(1);
    }
    return c.finish();
}

AuditReport audit_fact_v1(const Graph& g, std::optional<int> expected_value, std::optional<bool> expect_all_v1_nonempty,
                          const CampaignOptions& opts) {
    if (g.order() > kBruteForceCap)
        fail(ErrorKind::cap_exceeded, "optimal-labeling enumeration supports at most " +
                                          std::to_string(kBruteForceCap) + " vertices, got " +
                                          std::to_string(g.order()));
    Campaign c("fact_v1", opts);
    c.param("n", g.order());
    c.run({g}, [&](const Graph& h, Outcome& o) {
        const auto optima = enumerate_optimal_oidrd(h);
        const int value = optima.empty() ? 0 : weight(optima.front());
        const auto with_v1 = std::count_if(optima.begin(), optima.end(),
                                           [](const Labeling& f) { return !classes(f).v1.empty(); });
        const bool all_v1 = with_v1 == static_cast<std::int64_t>(optima.size());
        o.note("gamma_oidr", value);
        o.note("optimal_labelings", static_cast<std::int64_t>(optima.size()));
        o.note("optima_with_v1", with_v1);
        o.note("all_optima_use_v1", all_v1 ? 1 : 0);
        if (expected_value) o.claim(value == *expected_value, h, "value", value, *expected_value);
        if (expect_all_v1_nonempty)
            o.claim(all_v1 == *expect_all_v1_nonempty, h, "all_optima_use_v1", all_v1, *expect_all_v1_nonempty);
    });
    return c.finish();
}

AuditReport audit_fact_v1(const CampaignOptions& opts) {
    return audit_fact_v1(named("kbipartite:5,5"), formula_complete_bipartite(5, 5), true, opts);
}

AuditReport audit_oracle(int max_n, int samples, const CampaignOptions& opts) {
    require_range(max_n, 1, 6, "oracle max_n");
    require_range(samples, 0, 100000, "oracle samples");
    Campaign c("oracle", opts);
    c.param("max_n", max_n);
    c.param("samples", samples);
    c.use_seed();
    const Check check = [](const Graph& g, Outcome& o) {
        for (int i = 0; i <= static_cast<int>(Invariant::beta); ++i) {
            const auto inv = static_cast<Invariant>(i);
            const SolveResult fast = solve(g, inv);
            const SolveResult slow = brute_force(g, inv);
            const std::string name(invariant_name(inv));
            o.claim(fast.value == slow.value, g, name + "_value", fast.value, slow.value);
            o.claim(fast.witness == slow.witness, g, name + "_witness", fast.value, slow.value);
        }
    };
    std::int64_t exhaustive = 0;
    for (int n = 1; n <= max_n; ++n) {
        GraphStream s = enumerate_connected_graphs(n);
        exhaustive += c.run(stream_source(s), check);
    }
    c.outcome().note("exhaustive_instances", exhaustive);
    Rng rng(opts.seed);
    int drawn = 0;
    c.run(sample(samples, [&] {
              const int n = 7 + (drawn++ % 2);
              return random_connected_graph(n, rng, n);
          }),
          check);
    return c.finish();
}

const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names{"formulas", "characterization", "reduction", "roman_relations",
                                                "bounds",   "sharpness_h",      "trees",     "corona",
                                                "fact_v1",  "oracle"};
    return names;
}

AuditReport run_campaign(const std::string& name, int max_n, const CampaignOptions& opts) {
    if (max_n < 1) fail(ErrorKind::invalid_argument, "max_n must be at least 1");
    if (name == "formulas") return audit_formulas(opts);
    if (name == "characterization")
        return audit_characterization(std::clamp(max_n, 3, 6), max_n >= 7 ? 300 : 0, 7, opts);
    if (name == "reduction") return audit_reduction(std::min(max_n, 4), max_n >= 5 ? 50 : 0, opts);
    if (name == "roman_relations") return audit_roman_relations(std::min(max_n, 5), opts);
    if (name == "bounds") return audit_bounds(std::clamp(max_n, 2, 6), opts);
    if (name == "sharpness_h") return audit_sharpness_h({2, 2, 2}, opts);
    if (name == "trees") return audit_trees(std::min(max_n, 10), std::min(max_n, 8), 10000, opts);
    if (name == "corona") return audit_corona(3, 4, opts);
    if (name == "fact_v1") return audit_fact_v1(opts);
    if (name == "oracle") return audit_oracle(std::min(max_n, 6), max_n >= 8 ? 200 : 0, opts);
    fail(ErrorKind::invalid_argument, "unknown campaign '" + name + "'");
}

}  // namespace oidrd
