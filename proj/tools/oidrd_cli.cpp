#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oidrd/oidrd.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr const char* kGraphHelp = R"(Graphs are given as a file path, '-' for standard input, or inline text:

  edge list   "n m" header, then m lines "u v" (0-indexed, '#' starts a comment)
  generator   path:N  cycle:N  complete:N  empty:N  star:K  double_star:A,B
              kbipartite:M,N  kpartite:N1,N2,...  sharpness_h:T[,M1,...,MT]
              g1:K,L  g2:K  g3:K  h1..h6:[SUBCASE,]SIZES
              corona(G,H)  gadget(G)

Solver inputs are capped at 24 vertices; set OIDRD_MAX_N to raise the cap at
your own risk.)";

struct Failure {
    int code;
    std::string message;
};

struct GraphDeleter {
    void operator()(oidrd_graph* g) const { oidrd_graph_free(g); }
};
using GraphPtr = std::unique_ptr<oidrd_graph, GraphDeleter>;

void check(oidrd_status s) {
    if (s == OIDRD_OK) return;
    throw Failure{s == OIDRD_ERR_INTERNAL ? kExitInternal : kExitUsage, oidrd_last_error()};
}

std::string take(char* s) {
    std::string out(s);
    oidrd_string_free(s);
    return out;
}

int max_order() {
    const char* env = std::getenv("OIDRD_MAX_N");
    if (!env || !*env) return 24;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw Failure{kExitUsage, std::string("OIDRD_MAX_N must be a positive integer, got '") + env + "'"};
    return static_cast<int>(v);
}

std::string read_source(const std::string& source) {
    if (source == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        if (!in) throw Failure{kExitUsage, "cannot read '" + source + "'"};
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return source;
}

GraphPtr load(const std::string& source) {
    oidrd_graph* g = nullptr;
    check(oidrd_graph_parse(read_source(source).c_str(), &g));
    return GraphPtr(g);
}

void require_cap(const oidrd_graph* g, const std::string& what) {
    const int cap = max_order();
    if (oidrd_graph_order(g) > cap)
        throw Failure{kExitUsage, what + " has " + std::to_string(oidrd_graph_order(g)) + " vertices, above the cap of " +
                                      std::to_string(cap) + " (set OIDRD_MAX_N to raise it)"};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{kExitUsage, "cannot write '" + path + "'"};
    out << text;
}

void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

std::string str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string fraction(const json& f) {
    auto num = f.at("num").get<std::int64_t>(), den = f.at("den").get<std::int64_t>();
    const auto d = std::gcd(num, den);
    num /= d;
    den /= d;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

struct Options {
    bool json_out = false;
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::string graph;
    std::string second;
    std::string invariant = "gamma_oidr";
    bool count = false;
    bool verify = false;
    bool all = false;
    int max_n = 5;
    std::uint64_t seed = 20240917;
    std::string output;
    std::string csv;
    std::vector<std::string> campaigns;
};

int run_solve(const Options& o) {
    GraphPtr g = load(o.graph);
    require_cap(g.get(), "graph");
    const json j = json::parse(take([&] {
        char* s = nullptr;
        check(oidrd_solve_json(g.get(), o.invariant.c_str(), o.workers, o.count, &s));
        return s;
    }()));
    if (o.json_out) {
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::pair<std::string, std::string>> rows{
        {"n", str(j["n"])}, {"m", str(j["m"])}, {o.invariant, str(j["value"])}, {"witness", str(j["witness"])}};
    if (j.contains("optimal_count")) rows.emplace_back("optimal labelings", str(j["optimal_count"]));
    rows.emplace_back("search nodes", str(j["node_count"]));
    print_table(rows);
    return kExitOk;
}

int run_bounds(const Options& o) {
    GraphPtr g = load(o.graph);
    require_cap(g.get(), "graph");
    char* s = nullptr;
    check(oidrd_bounds_json(g.get(), o.workers, &s));
    const json j = json::parse(take(s));
    const bool holds = j["lower_holds"].get<bool>() && j["upper_holds"].get<bool>();
    if (o.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_table({{"gamma", str(j["gamma"])},
                     {"alpha", str(j["alpha"])},
                     {"beta", str(j["beta"])},
                     {"max degree", str(j["max_degree"])},
                     {"2 alpha / Delta", j["alpha_term"].is_null() ? "undefined" : fraction(j["alpha_term"])},
                     {"lower bound", fraction(j["lower_bound"])},
                     {"gamma_oidr", str(j["gamma_oidr"])},
                     {"upper bound", str(j["upper_bound"])},
                     {"bounds hold", holds ? "yes" : "no"}});
    }
    return holds ? kExitOk : kExitViolation;
}

int run_classify(const Options& o) {
    GraphPtr g = load(o.graph);
    require_cap(g.get(), "graph");
    char* s = nullptr;
    check(oidrd_classify_json(g.get(), &s));
    const json j = json::parse(take(s));
    if (o.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::string line = j["class"].get<std::string>();
        if (!j["match"].is_null()) {
            std::string fam = j["match"]["family"].get<std::string>();
            for (char& ch : fam) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            line += " / " + fam;
            if (!j["match"]["subcase"].get<std::string>().empty()) line += " (" + j["match"]["subcase"].get<std::string>() + ")";
        }
        std::cout << line << "\n";
        std::cout << "gamma_oidr = " << j["gamma_oidr"] << "\n";
    }
    return j["agrees"].get<bool>() ? kExitOk : kExitViolation;
}

int run_reduce(const Options& o) {
    GraphPtr g = load(o.graph);
    const int cap = std::getenv("OIDRD_MAX_N") ? max_order() / 4 : 0;
    char* s = nullptr;
    check(oidrd_reduce_json(g.get(), cap, &s));
    json j = json::parse(take(s));
    if (!o.json_out) {
        std::cout << j["gadget"].get<std::string>();
        j.erase("gadget");
    }
    std::cout << j.dump(2) << "\n";
    return j["equal"].get<bool>() ? kExitOk : kExitViolation;
}

int run_corona(const Options& o) {
    GraphPtr g = load(o.graph);
    GraphPtr h = load(o.second);
    const int product = oidrd_graph_order(g.get()) * (1 + oidrd_graph_order(h.get()));
    if (o.verify && product > max_order())
        throw Failure{kExitUsage, "corona graph has " + std::to_string(product) + " vertices, above the cap of " +
                                      std::to_string(max_order()) + " for --verify (set OIDRD_MAX_N to raise it)"};
    char* s = nullptr;
    check(oidrd_corona_json(g.get(), h.get(), o.verify, &s));
    const json j = json::parse(take(s));
    const bool agrees = !j.contains("agrees") || j["agrees"].get<bool>();
    if (o.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        const json& c = j["coefficients"];
        std::cout << "gamma_oidr(G o H) = " << j["formula"] << "\n\n";
        print_table({{"label", "cost"},
                     {"c0", str(c["c0"])},
                     {"c1", str(c["c1"])},
                     {"c2", str(c["c2"])},
                     {"c3", str(c["c3"])}});
        if (j.contains("solver")) std::cout << "\nsolver = " << j["solver"] << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    return agrees ? kExitOk : kExitViolation;
}

int run_formula(const Options& o) {
    char* s = nullptr;
    check(oidrd_formula_json(o.graph.c_str(), o.verify, &s));
    const json j = json::parse(take(s));
    const bool agrees = !j.contains("agrees") || j["agrees"].get<bool>();
    if (o.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j["family"].get<std::string>() << ": " << j["formula"];
        if (j.contains("solver")) std::cout << " (solver " << j["solver"] << ")";
        std::cout << "\n";
    }
    return agrees ? kExitOk : kExitViolation;
}

int run_audit(const Options& o) {
    std::vector<std::string> names = o.campaigns;
    if (o.all) {
        char* s = nullptr;
        check(oidrd_campaign_names(&s));
        names = json::parse(take(s)).get<std::vector<std::string>>();
    }
    if (names.empty()) throw Failure{kExitUsage, "audit needs campaign names or --all"};
    json reports = json::array();
    std::string csv;
    {
        char* s = nullptr;
        check(oidrd_audit_csv(nullptr, &s));
        csv = take(s);
    }
    bool pass = true;
    for (const auto& name : names) {
        char* s = nullptr;
        check(oidrd_audit_json(name.c_str(), o.max_n, o.seed, o.workers, &s));
        const std::string text = take(s);
        check(oidrd_audit_csv(text.c_str(), &s));
        const std::string row = take(s);
        csv += row;
        json r = json::parse(text);
        pass = pass && r["status"] == "pass";
        if (!o.json_out) std::cout << row << std::flush;
        reports.push_back(std::move(r));
    }
    const json doc{{"schema", "oidrd/1"}, {"max_n", o.max_n}, {"seed", o.seed}, {"reports", reports},
                   {"status", pass ? "pass" : "fail"}};
    if (o.json_out) std::cout << doc.dump(2) << "\n";
    if (!o.output.empty()) write_file(o.output, doc.dump(2) + "\n");
    if (!o.csv.empty()) write_file(o.csv, csv);
    return pass ? kExitOk : kExitViolation;
}

int run_generate(const Options& o) {
    GraphPtr g = load(o.graph);
    char* s = nullptr;
    check(oidrd_graph_edge_list(g.get(), &s));
    const std::string text = take(s);
    if (o.output.empty())
        std::cout << text;
    else
        write_file(o.output, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact outer independent double Roman domination toolkit"};
    app.footer(kGraphHelp);
    app.require_subcommand(1, 1);
    Options o;

    auto add_graph = [&](CLI::App* cmd) { cmd->add_option("graph", o.graph, "Graph file, '-', or inline text")->required(); };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json_out, "Emit JSON"); };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", o.workers, "Worker threads (default: available parallelism)")
            ->check(CLI::Range(1U, 1024U));
    };

    auto* solve = app.add_subcommand("solve", "Exact value and canonical witness");
    add_graph(solve);
    add_json(solve);
    add_workers(solve);
    solve->add_option("--invariant", o.invariant, "gamma_oidr, gamma_dr, gamma_oir, gamma_r, gamma, alpha or beta")
        ->check(CLI::IsMember({"gamma_oidr", "gamma_dr", "gamma_oir", "gamma_r", "gamma", "alpha", "beta"}));
    solve->add_flag("--count", o.count, "Also count optimal labelings (at most 12 vertices)");

    auto* bounds = app.add_subcommand("bounds", "Domination and vertex-cover bounds against the exact value");
    add_graph(bounds);
    add_json(bounds);
    add_workers(bounds);

    auto* classify = app.add_subcommand("classify", "Recognize the value class THREE, FOUR, FIVE or OTHER");
    add_graph(classify);
    add_json(classify);

    auto* reduce = app.add_subcommand("reduce", "Build G' and check gamma_oidr(G') = 4n - alpha(G)");
    add_graph(reduce);
    add_json(reduce);

    auto* coronac = app.add_subcommand("corona", "Corona formula for G o H");
    coronac->add_option("graph", o.graph, "Graph G: file, '-', or inline text")->required();
    coronac->add_option("other", o.second, "Graph H")->required();
    add_json(coronac);
    coronac->add_flag("--verify", o.verify, "Also solve G o H directly");

    auto* formula = app.add_subcommand("formula", "Closed form for a standard family");
    formula->add_option("spec", o.graph, "Generator string, e.g. kbipartite:4,7")->required();
    add_json(formula);
    formula->add_flag("--verify", o.verify, "Also run the solver");

    auto* audit = app.add_subcommand("audit", "Run verification campaigns");
    audit->add_option("campaigns", o.campaigns, "Campaign names");
    audit->add_flag("--all", o.all, "Run every campaign");
    audit->add_option("--max-n", o.max_n, "Largest exhaustive order")->check(CLI::Range(1, 10));
    audit->add_option("--seed", o.seed, "Sampling seed");
    audit->add_option("--output", o.output, "Write the JSON reports to this file");
    audit->add_option("--csv", o.csv, "Write the CSV summary to this file");
    add_json(audit);
    add_workers(audit);

    auto* generate = app.add_subcommand("generate", "Print a graph as an edge list");
    add_graph(generate);
    generate->add_option("--output", o.output, "Write to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return run_solve(o);
        if (*bounds) return run_bounds(o);
        if (*classify) return run_classify(o);
        if (*reduce) return run_reduce(o);
        if (*coronac) return run_corona(o);
        if (*formula) return run_formula(o);
        if (*audit) return run_audit(o);
        if (*generate) return run_generate(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
