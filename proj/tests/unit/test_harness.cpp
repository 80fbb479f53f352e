#include <doctest.h>

#include "core/errors.hpp"
#include "core/harness.hpp"
#include "support.hpp"

using namespace oidrd;

namespace {
AuditReport strip_time(AuditReport r) {
    r.runtime_ms = 0;
    return r;
}
}  // namespace

TEST_CASE("report JSON round trip") {
    AuditReport r;
    r.campaign = "demo";
    r.parameters = {{"max_n", 4}};
    r.seed = 18446744073709551615ULL;
    r.instances_checked = 12;
    r.violations = {{"2 1\n0 1\n", "claim_a", 3, 2}};
    r.notes = {{"count", 5}};
    r.runtime_ms = 17;
    const nlohmann::json j = report_to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["schema"] == "oidrd/1");
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);

    nlohmann::json lie = j;
    lie["status"] = "pass";
    CHECK_THROWS_AS(report_from_json(lie), Error);
    nlohmann::json broken = j;
    broken.erase("campaign");
    CHECK_THROWS_AS(report_from_json(broken), Error);

    AuditReport quiet;
    quiet.campaign = "quiet";
    CHECK(report_to_json(quiet)["status"] == "pass");
    CHECK(report_from_json(report_to_json(quiet)) == quiet);
    CHECK(csv_header() == "campaign,instances,violations,runtime_ms,status\n");
    CHECK(csv_row(r) == "demo,12,1,17,fail\n");
}

TEST_CASE("instance counts match enumeration formulas") {
    const AuditReport trees = audit_trees(6, 6, 0);
    CHECK(trees.passed());
    CHECK(trees.notes.at("exhaustive_instances") == 1 + 1 + 3 + 16 + 125 + 1296);

    const AuditReport chr = audit_characterization(5, 0, 7);
    CHECK(chr.passed());
    CHECK(chr.notes.at("exhaustive_instances") == 4 + 38 + 728);
    CHECK(chr.notes.at("n4_FOUR") + chr.notes.at("n4_FIVE") + chr.notes.at("n4_THREE") == 38);

    const AuditReport red = audit_reduction(3, 0);
    CHECK(red.passed());
    CHECK(red.notes.at("exhaustive_instances") == 1 + 2 + 8);

    const AuditReport rom = audit_roman_relations(4);
    CHECK(rom.passed());
    CHECK(rom.notes.at("exhaustive_instances") == 1 + 2 + 8 + 64);
    CHECK(rom.notes.at("edgeless") == 4);

    const AuditReport b = audit_bounds(4);
    CHECK(b.passed());
    CHECK(b.notes.at("exhaustive_instances") == 1 + 4 + 38);
}

TEST_CASE("campaigns are deterministic across worker counts and seeds are recorded") {
    const AuditReport one = audit_characterization(4, 20, 7, {1, 5});
    const AuditReport three = audit_characterization(4, 20, 7, {3, 5});
    CHECK(strip_time(one) == strip_time(three));
    CHECK(one.seed == 5U);
    const AuditReport other = audit_characterization(4, 20, 7, {1, 6});
    CHECK(other.seed == 6U);
    CHECK(audit_oracle(3, 4, {2, 9}).passed());
}

TEST_CASE("small campaigns pass") {
    CHECK(audit_sharpness_h().passed());
    CHECK(audit_sharpness_h().notes.at("gamma_oidr") == 14);
    CHECK(audit_fact_v1(G("path:3"), std::nullopt, std::nullopt).notes.at("all_optima_use_v1") == 0);
    CHECK(audit_corona(2, 3).passed());
    CHECK(audit_formulas().passed());
}

TEST_CASE("a false expectation is reported, not hidden") {
    const AuditReport r = audit_fact_v1(G("path:3"), 4, true);
    CHECK_FALSE(r.passed());
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].claim == "all_optima_use_v1");
    CHECK(r.violations[1].claim == "value");
    CHECK(r.violations[1].lhs == 3);
    CHECK(r.violations[1].rhs == 4);
}

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(audit_bounds(7), Error);
    CHECK_THROWS_AS(audit_sharpness_h({2, 2}), Error);
    CHECK_THROWS_AS(audit_sharpness_h({2, 1, 2}), Error);
    CHECK_THROWS_AS(audit_trees(11), Error);
    CHECK_THROWS_AS(run_campaign("nope", 3), Error);
    CHECK(campaign_names().size() == 10);
}
