#include <doctest.h>

#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "support.hpp"

using namespace oidrd;

namespace {
std::string parse_error(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("edge list") {
    const Graph p3 = parse_graph("3 2\n0 1\n1 2");
    CHECK(p3 == G("path:3"));
    CHECK(parse_graph("3 2\n# comment\n0 1   # first\n\n1 2\n") == p3);
    CHECK(parse_error("3 2\n0 1") == "expected 2 edges, found 1");
    CHECK(parse_error("3 1\n0 3").find("line 2") != std::string::npos);
    CHECK(parse_error("3 1\n1 1").find("self-loop") != std::string::npos);
    CHECK(parse_error("3 1\n0 x").find("line 2") != std::string::npos);
    CHECK(parse_error("3 2\n0 1\n1 2\n0 2") == "expected 2 edges, found 3");
    CHECK(parse_graph("1 0") == Graph::empty(1));
}

TEST_CASE("generator strings") {
    CHECK(G("kbipartite:2,3").size() == 6);
    CHECK(G(" path:6 ").order() == 6);
    CHECK(G("corona(path:2,empty:2)").order() == 6);
    CHECK(G("corona(h1:a1,2,path:2)").order() == 15);
    CHECK(G("gadget(corona(path:1,empty:1))").order() == 8);
    CHECK_FALSE(parse_error("bogus:3").empty());
    CHECK_FALSE(parse_error("path").empty());
    CHECK_FALSE(parse_error("path:3,").empty());
    CHECK_FALSE(parse_error("corona(path:2)").empty());
    CHECK_FALSE(parse_error("path:3 extra").empty());
    CHECK_FALSE(parse_error("").empty());
}

TEST_CASE("spec text round trip") {
    for (const char* s : {"path:6", "kbipartite:3,7", "kpartite:1,2,3", "h1:a1,2", "g1:2,1",
                          "corona(path:2,empty:2)", "gadget(cycle:4)", "sharpness_h:3,2,2,2"})
        CHECK(to_text(parse_family_spec(s)) == s);
}

TEST_CASE("edge-list round trip") {
    Rng rng(13);
    for (int round = 0; round < 100; ++round) {
        const Graph g = random_connected_graph(1 + round % 10, rng, 10);
        CHECK(parse_graph(to_edge_list(g)) == g);
    }
    for (const char* s : {"sharpness_h:3", "corona(cycle:3,path:3)", "h2:b2,0,1,1,2", "empty:4"}) {
        const Graph g = G(s);
        CHECK(parse_graph(to_edge_list(g)) == g);
    }
    CHECK(to_edge_list(G("path:3")) == "3 2\n0 1\n1 2\n");
}
