#include "core/brute_force.hpp"

#include <string>

#include "core/errors.hpp"

namespace oidrd {

namespace {

int alphabet(Invariant inv) {
    switch (inv) {
        case Invariant::gamma_oidr:
        case Invariant::gamma_dr: return 4;
        case Invariant::gamma_oir:
        case Invariant::gamma_r: return 3;
        default: return 2;
    }
}

bool accepts(const Graph& g, Invariant inv, const Labeling& f) {
    switch (inv) {
        case Invariant::gamma_oidr: return is_oidrd(g, f);
        case Invariant::gamma_dr: return is_drd(g, f);
        case Invariant::gamma_oir: return is_oird(g, f);
        case Invariant::gamma_r: return is_rd(g, f);
        case Invariant::gamma: return is_dominating_set(g, f);
        case Invariant::alpha: return is_independent_set(g, f);
        case Invariant::beta: return is_vertex_cover(g, f);
    }
    return false;
}

void check_cap(const Graph& g) {
    if (g.order() < 1) fail(ErrorKind::precondition, "the graph must have at least one vertex");
    if (g.order() > kBruteForceCap)
        fail(ErrorKind::cap_exceeded, "exhaustive enumeration supports at most " +
                                          std::to_string(kBruteForceCap) + " vertices, got " +
                                          std::to_string(g.order()));
}

// Visits every labeling over {0..k-1}^n. Ascending lexicographic order unless
// `descending`.
template <class Visit>
void for_each_labeling(int n, int k, bool descending, Visit&& visit) {
    const int first = descending ? k - 1 : 0;
    Labeling f(n, first);
    while (true) {
        visit(f);
        int pos = n - 1;
        while (pos >= 0) {
            const int cur = f[pos];
            if (!descending && cur + 1 < k) {
                f.set(pos, cur + 1);
                break;
            }
            if (descending && cur > 0) {
                f.set(pos, cur - 1);
                break;
            }
            f.set(pos, first);
            --pos;
        }
        if (pos < 0) return;
    }
}

}  // namespace

SolveResult brute_force(const Graph& g, Invariant inv) {
    check_cap(g);
    const bool maximize = inv == Invariant::alpha;
    SolveResult best;
    bool any = false;
    std::int64_t count = 0, visited = 0;
    // For alpha the descending scan makes the first maximum the
    // lexicographically largest independent set, i.e. the complement of the
    // canonical vertex cover.
    for_each_labeling(g.order(), alphabet(inv), maximize, [&](const Labeling& f) {
        ++visited;
        if (!accepts(g, inv, f)) return;
        const int w = weight(f);
        if (!any || (maximize ? w > best.value : w < best.value)) {
            any = true;
            best.value = w;
            best.witness = f;
            count = 1;
        } else if (w == best.value) {
            ++count;
        }
    });
    best.optimal_count = count;
    best.node_count = visited;
    return best;
}

SolveResult brute_force_oidrd(const Graph& g) { return brute_force(g, Invariant::gamma_oidr); }

std::vector<Labeling> enumerate_optimal(const Graph& g, Invariant inv) {
    const int target = brute_force(g, inv).value;
    std::vector<Labeling> out;
    for_each_labeling(g.order(), alphabet(inv), false, [&](const Labeling& f) {
        if (weight(f) == target && accepts(g, inv, f)) out.push_back(f);
    });
    return out;
}

std::vector<Labeling> enumerate_optimal_oidrd(const Graph& g) {
    return enumerate_optimal(g, Invariant::gamma_oidr);
}

}  // namespace oidrd
