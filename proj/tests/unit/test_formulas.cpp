#include <doctest.h>

#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/formulas.hpp"
#include "support.hpp"

using namespace oidrd;

TEST_CASE("closed forms") {
    CHECK(formula_path(3) == 3);
    CHECK(formula_path(1) == 2);
    CHECK(formula_path(8) == 9);
    CHECK(formula_cycle(4) == 4);
    CHECK(formula_cycle(7) == 8);
    CHECK(formula_cycle(3) == 4);
    CHECK(formula_complete(1) == 2);
    CHECK(formula_complete(2) == 3);
    CHECK(formula_complete(6) == 7);
    CHECK(formula_complete_bipartite(1, 9) == 3);
    CHECK(formula_complete_bipartite(3, 3) == 6);
    CHECK(formula_complete_bipartite(5, 5) == 9);
    CHECK(formula_complete_bipartite(7, 4) == 8);
    CHECK(formula_complete_multipartite({1, 1, 1}) == 4);
    CHECK(formula_complete_multipartite({3, 1, 2}) == 5);
    CHECK(formula_complete_multipartite({2, 2, 2}) == 6);

    CHECK_THROWS_AS(formula_path(0), Error);
    CHECK_THROWS_AS(formula_cycle(2), Error);
    CHECK_THROWS_AS(formula_complete(0), Error);
    CHECK_THROWS_AS(formula_complete_bipartite(0, 3), Error);
    CHECK_THROWS_AS(formula_complete_multipartite({2, 3}), Error);
}

TEST_CASE("closed forms against the reference on small members") {
    for (int n = 1; n <= 7; ++n) CHECK(formula_path(n) == oracle::gamma_oidr(adj(G("path:" + std::to_string(n)))));
    for (int n = 3; n <= 7; ++n) CHECK(formula_cycle(n) == oracle::gamma_oidr(adj(G("cycle:" + std::to_string(n)))));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m + n <= 7; ++n)
            CHECK(formula_complete_bipartite(m, n) ==
                  oracle::gamma_oidr(adj(G("kbipartite:" + std::to_string(m) + "," + std::to_string(n)))));
}

TEST_CASE("corona coefficients and values") {
    const CoronaFormula a = corona_formula(G("path:2"), G("empty:2"));
    CHECK(a.coefficients == CoronaCoefficients{4, 5, 4, 3});
    CHECK(a.value == 6);
    CHECK(oracle::gamma_oidr(adj(G("corona(path:2,empty:2)"))) == 6);

    const CoronaFormula b = corona_formula(G("path:2"), G("path:4"));
    CHECK(b.coefficients == CoronaCoefficients{6, 6, 5, 5});
    CHECK(b.value == 10);
    CHECK(solve_oidrd(G("corona(path:2,path:4)")).value == 10);

    for (int n = 1; n <= 5; ++n) {
        const Graph g = G("cycle:" + std::to_string(std::max(n, 3)));
        for (int r = 2; r <= 3; ++r) {
            const Graph h = G("empty:" + std::to_string(r));
            const int v = corona_formula(g, h).value;
            CHECK(v == 3 * g.order());
            CHECK(v == 3 * solve_beta(corona(g, h)).value);
        }
    }
    CHECK_THROWS_AS(corona_formula(G("path:2"), G("path:2")), Error);
    CHECK_THROWS_AS(corona_formula(G("path:2"), G("complete:3")), Error);
}

TEST_CASE("reduced corona scan equals direct enumeration") {
    Rng rng(8);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + round % 8;
        const Graph g = graph_from_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        CoronaCoefficients c;
        c.c0 = 1 + static_cast<int>(uniform_below(rng, 9));
        c.c1 = 1 + static_cast<int>(uniform_below(rng, 9));
        c.c2 = 1 + static_cast<int>(uniform_below(rng, 9));
        c.c3 = 1 + static_cast<int>(uniform_below(rng, 9));
        CHECK(corona_minimum(g, c) == corona_minimum_direct(g, c));
    }
}

TEST_CASE("corona formula is invariant under relabeling of G") {
    const Graph h = G("path:4");
    const Graph a(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    const Graph b(4, std::vector<Edge>{{2, 0}, {0, 3}, {3, 1}});
    CHECK(corona_formula(a, h).value == corona_formula(b, h).value);
}
