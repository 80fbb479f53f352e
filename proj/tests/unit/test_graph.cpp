#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/reduction.hpp"
#include "support.hpp"

using namespace oidrd;

TEST_CASE("build") {
    const Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(degrees(p3) == std::vector<int>{1, 2, 1});
    CHECK(p3.size() == 2);

    const Graph k1 = Graph::empty(1);
    CHECK(max_degree(k1) == 0);

    const Graph dup(4, std::vector<Edge>{{0, 1}, {1, 0}});
    CHECK(dup.size() == 1);
    CHECK(dup.edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), Error);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), Error);
    try {
        Graph(3, std::vector<Edge>{{2, 2}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find('2') != std::string::npos);
        CHECK(e.kind() == ErrorKind::invalid_argument);
    }
}

TEST_CASE("structural queries") {
    CHECK_FALSE(is_connected(G("empty:2")));
    CHECK(max_degree(G("star:5")) == 5);
    CHECK(is_connected(G("cycle:7")));
    CHECK(min_degree(G("path:4")) == 1);
    CHECK(degree(G("complete:5"), 3) == 4);
    const Graph u = disjoint_union(G("path:2"), G("path:3"));
    CHECK(u.order() == 5);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
}

TEST_CASE("handshake and symmetry on random graphs") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_connected_graph(2 + i % 8, rng, 9);
        int sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            sum += g.degree(v);
            for (Vertex u : g.neighbors(v)) CHECK(g.adjacent(u, v));
        }
        CHECK(sum == 2 * g.size());
    }
}

TEST_CASE("family generators") {
    SUBCASE("g3 with k=2 is C4") {
        const Graph g = G("g3:2");
        CHECK(degrees(g) == std::vector<int>{2, 2, 2, 2});
        CHECK(is_connected(g));
        CHECK_FALSE(g.adjacent(0, 1));
    }
    SUBCASE("sharpness graph") {
        const Graph h = G("sharpness_h:3,2,2,2");
        CHECK(h.order() == 15);
        // z_i = 5i + 2 lies on the z-cycle and sees x_i, y_i
        for (int i = 0; i < 3; ++i) {
            const Vertex z = 5 * i + 2;
            CHECK(h.degree(z) == 4);
            CHECK(h.adjacent(z, 5 * i));
            CHECK(h.adjacent(z, 5 * i + 1));
            CHECK(h.adjacent(z, 5 * ((i + 1) % 3) + 2));
        }
        CHECK(G("sharpness_h:3") == h);
        CHECK_THROWS_AS(G("sharpness_h:2"), Error);
        CHECK_THROWS_AS(G("sharpness_h:3,2,1,2"), Error);
    }
    SUBCASE("corona of P2 and two isolated vertices") {
        const Graph c = G("corona(path:2,empty:2)");
        CHECK(c.order() == 6);
        CHECK(c.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    }
    SUBCASE("complete families") {
        CHECK(G("complete:4").size() == 6);
        CHECK(G("kbipartite:3,7").size() == 21);
        CHECK(G("kpartite:1,2,3").size() == 11);
        CHECK(G("double_star:2,3").order() == 7);
        CHECK(degrees(G("double_star:2,3")) == std::vector<int>{3, 4, 1, 1, 1, 1, 1});
    }
    SUBCASE("h-family subcase validation") {
        CHECK(G("h1:a1,2").order() == 5);
        CHECK_THROWS_AS(G("h1:a1,1"), Error);
        CHECK_THROWS_AS(G("h3:1"), Error);
        CHECK_THROWS_AS(G("h2:z9,1"), Error);
        CHECK_THROWS_AS(G("g3:1"), Error);
    }
}

TEST_CASE("corona examples and counting identities") {
    const Graph s = corona(G("complete:1"), G("empty:2"));
    CHECK(degrees(s) == std::vector<int>{2, 1, 1});
    // P2 corona K1 has degree sequence of P4
    auto d = degrees(corona(G("path:2"), G("empty:1")));
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 1, 2, 2});
    CHECK(is_connected(corona(G("path:2"), G("empty:1"))));
    CHECK(corona(G("cycle:3"), G("empty:2")).order() == 9);

    for (int gn = 1; gn <= 4; ++gn)
        for (int hn = 1; hn <= 4; ++hn) {
            GraphStream gs = enumerate_all_graphs(gn);
            int seen = 0;
            while (auto g = gs.next()) {
                if (++seen > 5) break;
                GraphStream hs = enumerate_all_graphs(hn);
                int hseen = 0;
                while (auto h = hs.next()) {
                    if (++hseen > 5) break;
                    const Graph c = corona(*g, *h);
                    CHECK(c.order() == gn * (1 + hn));
                    CHECK(c.size() == g->size() + gn * (h->size() + hn));
                }
            }
        }
}

TEST_CASE("connected graph enumeration") {
    for (int n = 1; n <= 5; ++n) {
        GraphStream s = enumerate_connected_graphs(n);
        long long count = 0;
        std::uint64_t last = 0;
        bool ascending = true;
        while (auto g = s.next()) {
            ++count;
            CHECK(oracle::connected(adj(*g)));
            std::uint64_t mask = 0;
            const auto slots = edge_slots(n);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (g->adjacent(slots[i].first, slots[i].second)) mask |= std::uint64_t{1} << i;
            if (count > 1 && mask <= last) ascending = false;
            last = mask;
        }
        CHECK(ascending);
        CHECK(count == oracle::kConnectedLabeled[n - 1]);
        CHECK(count == labeled_connected_count(n));
    }
    CHECK(labeled_connected_count(7) == oracle::kConnectedLabeled[6]);
    {
        GraphStream s = enumerate_connected_graphs(2);
        CHECK(s.next()->size() == 1);
        CHECK_FALSE(s.next());
    }
    {
        GraphStream s = enumerate_all_graphs(4);
        int count = 0;
        while (s.next()) ++count;
        CHECK(count == 64);
    }
    CHECK_THROWS_AS(enumerate_connected_graphs(8), Error);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), Error);
}

TEST_CASE("tree enumeration") {
    for (int n = 1; n <= 8; ++n) {
        TreeStream s = enumerate_trees(n);
        long long count = 0;
        while (auto t = s.next()) {
            ++count;
            CHECK(t->size() == n - 1);
            CHECK(oracle::connected(adj(*t)));
        }
        const long long expected = n <= 2 ? 1 : std::llround(std::pow(n, n - 2));
        CHECK(count == expected);
    }
    TreeStream three = enumerate_trees(3);
    while (auto t = three.next()) CHECK(max_degree(*t) == 2);
    CHECK_THROWS_AS(enumerate_trees(11), Error);
}

TEST_CASE("random generators are reproducible") {
    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) {
        CHECK(random_tree(9, a) == random_tree(9, b));
        CHECK(random_connected_graph(6, a, 3) == random_connected_graph(6, b, 3));
    }
    Rng r(5);
    for (int i = 0; i < 100; ++i) CHECK(uniform_below(r, 7) < 7);
    for (int i = 0; i < 30; ++i) CHECK(max_degree(random_connected_graph(5, r, 3)) <= 3);
}

TEST_CASE("gadget degree structure") {
    const GadgetMap k1 = build_gadget(G("complete:1"));
    CHECK(degrees(k1.gadget) == std::vector<int>{1, 3, 1, 1});
    CHECK(build_gadget(G("path:2")).gadget.order() == 8);
    const GadgetMap c4 = build_gadget(G("cycle:4"));
    CHECK(c4.gadget.order() == 16);
    CHECK(max_degree(c4.gadget) == 3);
    for (int i = 0; i < 4; ++i) {
        CHECK(c4.gadget.degree(c4.u_index[i]) == 3);
        CHECK(c4.gadget.degree(c4.leaf_index[i][0]) == 1);
        CHECK(c4.gadget.degree(c4.leaf_index[i][1]) == 1);
        CHECK(c4.gadget.adjacent(i, c4.u_index[i]));
    }
    CHECK(G("gadget(cycle:4)") == c4.gadget);
}
