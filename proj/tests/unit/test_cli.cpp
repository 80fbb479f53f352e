#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef OIDRD_CLI_PATH
#error "OIDRD_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + OIDRD_CLI_PATH + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("oidrd_cli_test_" + name);
}

}  // namespace

TEST_CASE("solve") {
    const Run r = run("solve path:5 --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["gamma_oidr"] == 6);
    CHECK(j["schema"] == "oidrd/1");
    auto many = nlohmann::json::parse(run("solve path:5 --json --workers 3").out);
    auto single = j;
    many.erase("node_count");
    single.erase("node_count");
    CHECK(many == single);
    CHECK(run("solve cycle:5 --invariant alpha --json").out.find("\"alpha\": 2") != std::string::npos);
}

TEST_CASE("classify and corona tables") {
    const Run c = run("classify complete:3");
    CHECK(c.code == 0);
    CHECK(c.out.find("FOUR / G2") != std::string::npos);
    const Run k = run("corona path:2 path:4");
    CHECK(k.code == 0);
    CHECK(k.out.find("= 10") != std::string::npos);
    CHECK(k.out.find("c0     6") != std::string::npos);
    CHECK(k.out.find("c2     5") != std::string::npos);
}

TEST_CASE("generate, write, re-read") {
    const auto file = scratch("graph.txt");
    CHECK(run("generate sharpness_h:3 --output " + file.string()).code == 0);
    const Run a = run("solve " + file.string() + " --json");
    const Run b = run("solve sharpness_h:3 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["gamma_oidr"] == 14);
    std::filesystem::remove(file);
}

TEST_CASE("reduce prints the gadget then the report") {
    const Run r = run("reduce path:2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("8 7\n", 0) == 0);
    CHECK(r.out.find("\"lhs\": 7") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "3 2\n0 1\n";
    const Run e = run("solve " + bad.string());
    CHECK(e.code == 2);
    CHECK(e.out.find("expected 2 edges, found 1") != std::string::npos);
    std::filesystem::remove(bad);
    CHECK(run("solve bogus:3").code == 2);
    CHECK(run("solve --frobnicate path:3").code == 2);
    CHECK(run("").code == 2);
    const Run cap = run("solve path:30");
    CHECK(cap.code == 2);
    CHECK(cap.out.find("cap of 24") != std::string::npos);
    CHECK(run("solve path:30", "OIDRD_MAX_N=30").code == 0);
    CHECK(run("corona path:2 path:2").code == 2);
}

TEST_CASE("audit writes reports and exits 0 on a correct build") {
    const auto json_file = scratch("audit.json");
    const auto csv_file = scratch("audit.csv");
    const Run r = run("audit --all --max-n 5 --output " + json_file.string() + " --csv " + csv_file.string());
    CHECK(r.code == 0);
    std::ifstream in(json_file);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["status"] == "pass");
    CHECK(doc["reports"].size() == 10);
    std::ifstream csv(csv_file);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "campaign,instances,violations,runtime_ms,status");
    std::filesystem::remove(json_file);
    std::filesystem::remove(csv_file);
    CHECK(run("audit nope").code == 2);
}
