#pragma once

#include <span>
#include <vector>

#include "core/graph.hpp"
#include "core/solver.hpp"

namespace oidrd {

// Closed forms for gamma_oidR on standard families. Each throws
// Error(precondition) outside its stated domain.

int formula_path(int n);                                // n >= 1
int formula_cycle(int n);                               // n >= 3
int formula_complete(int n);                            // n >= 1
int formula_complete_bipartite(int m, int n);           // m, n >= 1, any order
int formula_complete_multipartite(std::vector<int> parts);  // k >= 3 parts, each >= 1

/// Per-vertex costs of the corona minimum, read off an invariant bundle of H:
/// a vertex of G labeled i together with its copy of H costs c_i.
struct CoronaCoefficients {
    int c0 = 0;  // n(H) + gamma(H)
    int c1 = 0;  // gamma_oidR(H) + 1
    int c2 = 0;  // gamma_oiR(H) + 2
    int c3 = 0;  // beta(H) + 3

    friend bool operator==(const CoronaCoefficients&, const CoronaCoefficients&) = default;
};

CoronaCoefficients corona_coefficients(const InvariantBundle& h, int h_order);

/// Largest order of G accepted by the corona minimum.
inline constexpr int kCoronaBaseCap = 20;

/// min over labelings of V(G) with independent 0-class of
/// |V0| c0 + |V1| c1 + |V2| c2 + |V3| c3. Since c1..c3 do not depend on the
/// vertex, this scans independent sets S = V0 and prices every other vertex
/// at min(c1, c2, c3).
int corona_minimum(const Graph& g, const CoronaCoefficients& c);

/// The same minimum by enumerating all 4^n labelings of V(G); g.order() <= 8.
int corona_minimum_direct(const Graph& g, const CoronaCoefficients& c);

struct CoronaFormula {
    CoronaCoefficients coefficients;
    InvariantBundle h_bundle;
    int value = 0;
};

/// gamma_oidR(G o H) by the corona formula. Requires max degree of H at most
/// |V(H)| - 2 and g.order() <= 20; for g.order() <= 8 the reduced scan is
/// cross-checked against corona_minimum_direct.
CoronaFormula corona_formula(const Graph& g, const Graph& h);

/// Same, from a precomputed bundle of H. `h_max_degree` is checked against
/// the hypothesis.
int corona_formula(const Graph& g, const InvariantBundle& hb, int h_order, int h_max_degree);

}  // namespace oidrd
