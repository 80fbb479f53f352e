#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/graph.hpp"

namespace oidrd {

struct Violation {
    std::string graph;  // edge-list text
    std::string claim;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Outcome of one verification campaign. `notes` carries counters such as
/// equality cases or per-class tallies.
struct AuditReport {
    std::string campaign;
    std::map<std::string, std::int64_t> parameters;
    std::optional<std::uint64_t> seed;
    std::int64_t instances_checked = 0;
    std::vector<Violation> violations;  // sorted
    std::map<std::string, std::int64_t> notes;
    std::int64_t runtime_ms = 0;

    bool passed() const { return violations.empty(); }
    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

nlohmann::json report_to_json(const AuditReport& r);
/// Throws Error(parse) on a malformed document or a status that contradicts
/// the violation list.
AuditReport report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const AuditReport& r);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CampaignOptions {
    unsigned workers = 1;
    std::uint64_t seed = kDefaultSeed;
};

/// Closed forms against the solver: P1..P11, C3..C11, K1..K9, K_{m,n} with
/// m + n <= 11, complete multipartite with k >= 3 parts and at most 10 vertices.
AuditReport audit_formulas(const CampaignOptions& opts = {});

/// Value class from classify() against the solver on every labeled connected
/// graph of order 3..max_n (max_n <= 6) plus `samples` random connected graphs
/// of order `sample_n`.
AuditReport audit_characterization(int max_n = 6, int samples = 300, int sample_n = 7,
                                   const CampaignOptions& opts = {});

/// gamma_oidR(G') = 4n - alpha(G) on every labeled graph of order 1..max_n
/// (max_n <= 4) and `samples` random connected graphs of order 5 with max
/// degree at most 3.
AuditReport audit_reduction(int max_n = 4, int samples = 50, const CampaignOptions& opts = {});

/// gamma_oiR against gamma_oidR on every labeled graph of order 1..max_n
/// (max_n <= 5): strict inequality, doubling exactly on edgeless graphs,
/// strict sandwich on connected graphs, and the V2 bound for every optimal
/// outer independent Roman labeling.
AuditReport audit_roman_relations(int max_n = 5, const CampaignOptions& opts = {});

/// Lower bound max{gamma, 2 alpha / Delta} + beta and upper bound 3 beta on
/// every connected graph of order 2..max_n (2 <= max_n <= 6), compared exactly;
/// attainment on stars and on P2, P3, C3 corona two isolated vertices.
AuditReport audit_bounds(int max_n = 5, const CampaignOptions& opts = {});

/// Sharpness graph: gamma_oidR = 4t + ceil(t/2), beta = 3t - floor(t/2),
/// gamma = 2t, and gamma + beta = gamma_oidR. Requires t >= 3, every m_i >= 2
/// and at most 24 vertices.
AuditReport audit_sharpness_h(const std::vector<int>& m = {2, 2, 2}, const CampaignOptions& opts = {});

/// 2 beta + 1 <= gamma_oidR on every labeled tree of order 1..exhaustive_max
/// (<= 8) and on `samples` random trees at each order exhaustive_max+1..max_n
/// (max_n <= 10); equality on even paths; double stars.
AuditReport audit_trees(int max_n = 10, int exhaustive_max = 8, int samples = 10000,
                        const CampaignOptions& opts = {});

/// Corona formula against the solver on G o H for every connected G of order
/// <= max_g and every H of order <= max_h with max degree <= |V(H)| - 2.
AuditReport audit_corona(int max_g = 3, int max_h = 4, const CampaignOptions& opts = {});

/// Enumerates every optimal labeling of g (order <= 12) and records whether
/// all of them use the label 1. Expectations, when given, become claims.
AuditReport audit_fact_v1(const Graph& g, std::optional<int> expected_value,
                          std::optional<bool> expect_all_v1_nonempty, const CampaignOptions& opts = {});
/// K_{5,5}: value 9 and V1 nonempty in every optimum.
AuditReport audit_fact_v1(const CampaignOptions& opts = {});

/// Branch and bound against brute force (value and canonical witness) for all
/// seven invariants on every connected graph of order 1..max_n (max_n <= 6)
/// and `samples` random connected graphs of orders 7 and 8, alternating.
AuditReport audit_oracle(int max_n = 6, int samples = 200, const CampaignOptions& opts = {});

/// Campaign names accepted by run_campaign, in run order.
const std::vector<std::string>& campaign_names();

/// Runs one campaign scaled by max_n: exhaustive tiers are capped at
/// min(max_n, campaign limit), sampled tiers run only when max_n reaches the
/// sampled order. Throws Error(invalid_argument) for an unknown name.
AuditReport run_campaign(const std::string& name, int max_n, const CampaignOptions& opts = {});

}  // namespace oidrd
