#include "core/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "core/errors.hpp"

namespace oidrd {

namespace {

constexpr std::array<std::pair<Invariant, std::string_view>, 7> kInvariantNames{{
    {Invariant::gamma_oidr, "gamma_oidr"},
    {Invariant::gamma_dr, "gamma_dr"},
    {Invariant::gamma_oir, "gamma_oir"},
    {Invariant::gamma_r, "gamma_r"},
    {Invariant::gamma, "gamma"},
    {Invariant::alpha, "alpha"},
    {Invariant::beta, "beta"},
}};

// What a labeled vertex needs from its neighbors.
enum class Rule {
    double_roman,  // 0: one 3 or two 2s; 1: one >= 2
    roman,         // 0: one 2
    domination,    // 0: one 1
    cover,         // nothing
};

struct Problem {
    Rule rule;
    int max_label;
    bool independent_zeros;
};

Problem problem_for(Invariant inv) {
    switch (inv) {
        case Invariant::gamma_oidr: return {Rule::double_roman, 3, true};
        case Invariant::gamma_dr: return {Rule::double_roman, 3, false};
        case Invariant::gamma_oir: return {Rule::roman, 2, true};
        case Invariant::gamma_r: return {Rule::roman, 2, false};
        case Invariant::gamma: return {Rule::domination, 1, false};
        case Invariant::alpha:
        case Invariant::beta: return {Rule::cover, 1, true};
    }
    throw std::logic_error("unhandled invariant");
}

constexpr int kInfeasible = std::numeric_limits<int>::max() / 4;
constexpr int kFree = -1;

inline int popcount(VertexMask m) { return std::popcount(m); }

template <class F>
inline void for_each_bit(VertexMask m, F&& f) {
    while (m) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

/// Depth-first search over labelings of the free vertices.
///
/// Finds completions whose weight does not exceed `cap`. In optimizing mode
/// each completion found lowers the cap to one below its weight; in
/// first-hit mode the search stops at the first completion.
class Search {
public:
    Search(const Graph& g, Problem p, std::span<const int> fixed)
        : n_(g.order()), p_(p), labels_(fixed.begin(), fixed.end()) {
        adj_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbor_mask(v);
        for (Vertex v = 0; v < n_; ++v) {
            if (labels_[v] == kFree) {
                free_ |= bit(v);
                order_.push_back(v);
            } else {
                label_mask_[labels_[v]] |= bit(v);
                partial_ += labels_[v];
            }
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    void set_shared_cap(std::atomic<int>* shared) { shared_cap_ = shared; }

    /// Returns true if a completion with weight <= cap was found; the best
    /// one is then in best().
    bool run(int cap, bool optimize, std::size_t start_depth = 0) {
        cap_ = cap;
        optimize_ = optimize;
        found_ = false;
        stop_ = false;
        if (zero_conflict()) return false;
        if (bound() <= current_cap()) dfs(start_depth);
        return found_;
    }

    /// Assigns the first vertices of the branch order (used to split work).
    bool preassign(std::span<const int> prefix_labels) {
        for (std::size_t i = 0; i < prefix_labels.size(); ++i) {
            const Vertex v = order_[i];
            const int l = prefix_labels[i];
            if (l == 0 && p_.independent_zeros && (adj_[v] & label_mask_[0])) return false;
            assign(v, l);
        }
        return true;
    }

    std::size_t free_count() const { return order_.size(); }
    const std::vector<int>& best() const { return best_; }
    int best_weight() const { return best_weight_; }
    std::int64_t nodes() const { return nodes_; }

private:
    static VertexMask bit(Vertex v) { return VertexMask{1} << v; }

    bool zero_conflict() const {
        if (!p_.independent_zeros) return false;
        bool clash = false;
        for_each_bit(label_mask_[0], [&](Vertex v) {
            if (adj_[v] & label_mask_[0]) clash = true;
        });
        return clash;
    }

    int current_cap() const {
        if (shared_cap_) return std::min(cap_, shared_cap_->load(std::memory_order_relaxed));
        return cap_;
    }

    void assign(Vertex v, int l) {
        labels_[v] = l;
        label_mask_[l] |= bit(v);
        free_ &= ~bit(v);
        partial_ += l;
    }

    void unassign(Vertex v) {
        const int l = labels_[v];
        label_mask_[l] &= ~bit(v);
        free_ |= bit(v);
        partial_ -= l;
        labels_[v] = kFree;
    }

    void record() {
        found_ = true;
        best_ = labels_;
        best_weight_ = partial_;
        if (!optimize_) {
            stop_ = true;
            return;
        }
        cap_ = partial_ - 1;
        if (shared_cap_) {
            int seen = shared_cap_->load(std::memory_order_relaxed);
            while (cap_ < seen && !shared_cap_->compare_exchange_weak(seen, cap_)) {
            }
        }
    }

    void dfs(std::size_t depth) {
        if (depth == order_.size()) {
            // bound() was checked by the caller and equals partial_ here
            record();
            return;
        }
        const Vertex v = order_[depth];
        for (int l = 0; l <= p_.max_label; ++l) {
            if (partial_ + l > current_cap()) break;
            if (l == 0 && p_.independent_zeros && (adj_[v] & label_mask_[0])) continue;
            assign(v, l);
            ++nodes_;
            if (bound() <= current_cap()) dfs(depth + 1);
            unassign(v);
            if (stop_) return;
        }
    }

    // Smallest label a free vertex could still take, given the labeled
    // vertices and assuming free neighbors take whatever helps.
    int min_label(Vertex x) const {
        const VertexMask nx = adj_[x];
        const bool zero_blocked = p_.independent_zeros && (nx & label_mask_[0]);
        const bool any_free = (nx & free_) != 0;
        switch (p_.rule) {
            case Rule::double_roman: {
                const int c2 = popcount(nx & label_mask_[2]);
                const bool has3 = (nx & label_mask_[3]) != 0;
                if (!zero_blocked && (has3 || c2 >= 2 || any_free)) return 0;
                if (has3 || c2 >= 1 || any_free) return 1;
                return 2;
            }
            case Rule::roman:
                if (!zero_blocked && ((nx & label_mask_[2]) || any_free)) return 0;
                return 1;
            case Rule::domination:
                if ((nx & label_mask_[1]) || any_free) return 0;
                return 1;
            case Rule::cover: return zero_blocked ? 1 : 0;
        }
        return 0;
    }

    // Extra weight the free neighbors of labeled vertex v must receive, on
    // top of their min_label, before v is satisfied. 0 if already satisfied,
    // kInfeasible if it can no longer be.
    int deficit(Vertex v, const std::array<int, kMaskCapacity>& m) const {
        const int l = labels_[v];
        const VertexMask nv = adj_[v];
        const VertexMask u = nv & free_;
        int raise_to_2 = kInfeasible, raise_to_3 = kInfeasible;
        int first = kInfeasible, second = kInfeasible;  // two smallest raise-to-2 costs
        auto scan = [&](int target_hi) {
            for_each_bit(u, [&](Vertex x) {
                const int c2 = std::max(0, 2 - m[x]);
                raise_to_2 = std::min(raise_to_2, c2);
                raise_to_3 = std::min(raise_to_3, std::max(0, target_hi - m[x]));
                if (c2 < first) {
                    second = first;
                    first = c2;
                } else if (c2 < second) {
                    second = c2;
                }
            });
        };
        switch (p_.rule) {
            case Rule::double_roman: {
                if (l >= 2) return 0;
                const bool has3 = (nv & label_mask_[3]) != 0;
                const int c2 = popcount(nv & label_mask_[2]);
                if (l == 1) {
                    if (has3 || c2 >= 1) return 0;
                    if (!u) return kInfeasible;
                    scan(3);
                    return raise_to_2;
                }
                if (has3 || c2 >= 2) return 0;
                if (!u) return kInfeasible;
                scan(3);
                const int by_pair = c2 == 1 ? first : (second >= kInfeasible ? kInfeasible : first + second);
                return std::min(raise_to_3, by_pair);
            }
            case Rule::roman:
                if (l != 0 || (nv & label_mask_[2])) return 0;
                if (!u) return kInfeasible;
                scan(2);
                return raise_to_2;
            case Rule::domination: {
                if (l != 0 || (nv & label_mask_[1])) return 0;
                if (!u) return kInfeasible;
                int best = kInfeasible;
                for_each_bit(u, [&](Vertex x) { best = std::min(best, std::max(0, 1 - m[x])); });
                return best;
            }
            case Rule::cover: return 0;
        }
        return 0;
    }

    // Admissible lower bound on the weight of any completion: the partial
    // weight, each free vertex's min_label, deficits of labeled vertices
    // whose free neighborhoods are pairwise disjoint, and one unit per edge
    // of a greedy matching between remaining zero-capable free vertices when
    // zeros must be independent.
    int bound() const {
        std::array<int, kMaskCapacity> m{};
        int lb = partial_;
        for_each_bit(free_, [&](Vertex x) {
            m[x] = min_label(x);
            lb += m[x];
        });
        if (p_.rule != Rule::cover) {
            VertexMask used = 0;
            const VertexMask all = n_ == kMaskCapacity ? ~VertexMask{0} : (bit(n_) - 1);
            const VertexMask labeled = all & ~free_;
            int extra = 0;
            bool dead = false;
            for_each_bit(labeled, [&](Vertex v) {
                if (dead) return;
                const int d = deficit(v, m);
                if (d >= kInfeasible) {
                    dead = true;
                    return;
                }
                if (d == 0) return;
                const VertexMask u = adj_[v] & free_;
                if (u & used) return;
                used |= u;
                extra += d;
            });
            if (dead) return kInfeasible;
            lb += extra;
            if (p_.independent_zeros) lb += matching(used, m);
        } else {
            lb += matching(0, m);
        }
        return lb;
    }

    int matching(VertexMask used, const std::array<int, kMaskCapacity>& m) const {
        VertexMask zero_capable = 0;
        for_each_bit(free_ & ~used, [&](Vertex x) {
            if (m[x] == 0) zero_capable |= bit(x);
        });
        int pairs = 0;
        VertexMask left = zero_capable;
        while (left) {
            const Vertex x = std::countr_zero(left);
            left &= left - 1;
            const VertexMask partners = adj_[x] & left;
            if (!partners) continue;
            left &= ~bit(std::countr_zero(partners));
            ++pairs;
        }
        return pairs;
    }

    int n_;
    Problem p_;
    std::vector<VertexMask> adj_;
    std::vector<int> labels_;
    std::vector<Vertex> order_;
    std::array<VertexMask, 4> label_mask_{};
    VertexMask free_ = 0;
    int partial_ = 0;

    int cap_ = 0;
    std::atomic<int>* shared_cap_ = nullptr;
    bool optimize_ = true;
    bool found_ = false;
    bool stop_ = false;
    std::vector<int> best_;
    int best_weight_ = kInfeasible;
    std::int64_t nodes_ = 0;
};

// A feasible labeling from a greedy maximal independent set I: members of I
// take the low role, the rest the high role.
std::vector<int> greedy_labeling(const Graph& g, Problem p) {
    const int n = g.order();
    std::vector<char> in_set(n, 0);
    VertexMask taken = 0, blocked = 0;
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (Vertex v : order) {
        if ((blocked >> v) & 1U) continue;
        in_set[v] = 1;
        taken |= VertexMask{1} << v;
        blocked |= g.neighbor_mask(v) | (VertexMask{1} << v);
    }
    std::vector<int> f(n);
    for (Vertex v = 0; v < n; ++v) {
        const bool isolated = g.degree(v) == 0;
        switch (p.rule) {
            case Rule::double_roman: f[v] = in_set[v] ? (isolated ? 2 : 0) : 3; break;
            case Rule::roman: f[v] = in_set[v] ? (isolated ? 1 : 0) : 2; break;
            case Rule::domination: f[v] = in_set[v] ? 1 : 0; break;
            case Rule::cover: f[v] = in_set[v] ? 0 : 1; break;
        }
    }
    return f;
}

int sum(const std::vector<int>& f) {
    int s = 0;
    for (int x : f) s += x;
    return s;
}

struct Optimum {
    int value;
    std::vector<int> labeling;
    std::int64_t nodes;
};

Optimum find_optimum(const Graph& g, Problem p, unsigned workers) {
    const int n = g.order();
    std::vector<int> incumbent = greedy_labeling(g, p);
    const int upper = sum(incumbent);
    const std::vector<int> all_free(n, kFree);

    Search probe(g, p, all_free);
    const std::size_t split = std::min<std::size_t>(2, probe.free_count());
    if (workers <= 1 || split == 0) {
        if (probe.run(upper - 1, true)) return {probe.best_weight(), probe.best(), probe.nodes()};
        return {upper, incumbent, probe.nodes()};
    }

    // Fan out over the labels of the first `split` vertices in branch order.
    std::vector<std::vector<int>> tasks;
    std::vector<int> prefix(split, 0);
    const int base = p.max_label + 1;
    int total = 1;
    for (std::size_t i = 0; i < split; ++i) total *= base;
    for (int code = 0; code < total; ++code) {
        int c = code;
        for (std::size_t i = split; i-- > 0;) {
            prefix[i] = c % base;
            c /= base;
        }
        tasks.push_back(prefix);
    }
    std::atomic<int> shared_cap{upper - 1};
    std::atomic<std::size_t> next{0};
    std::vector<Optimum> found(tasks.size(), Optimum{kInfeasible, {}, 0});
    auto worker = [&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
            Search s(g, p, all_free);
            s.set_shared_cap(&shared_cap);
            if (!s.preassign(tasks[t])) continue;
            if (s.run(shared_cap.load(), true, split)) found[t] = {s.best_weight(), s.best(), s.nodes()};
            else found[t].nodes = s.nodes();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    Optimum best{upper, incumbent, 0};
    for (const auto& o : found) {
        best.nodes += o.nodes;
        if (o.value < best.value) {
            best.value = o.value;
            best.labeling = o.labeling;
        }
    }
    return best;
}

// Lexicographically smallest labeling of weight exactly `value`, found by
// fixing vertices 0, 1, ... to the smallest label that still admits a
// completion within `value`.
std::vector<int> canonical_descent(const Graph& g, Problem p, int value, std::vector<int> known,
                                   std::int64_t& nodes) {
    const int n = g.order();
    std::vector<int> fixed(n, kFree);
    for (Vertex v = 0; v < n; ++v) {
        for (int l = 0; l <= p.max_label; ++l) {
            if (l == known[v]) {
                fixed[v] = l;
                break;
            }
            fixed[v] = l;
            Search s(g, p, fixed);
            const bool ok = s.run(value, false);
            nodes += s.nodes();
            if (ok) {
                known = s.best();
                break;
            }
        }
    }
    return fixed;
}

void check_solvable(const Graph& g) {
    if (g.order() < 1) fail(ErrorKind::precondition, "the graph must have at least one vertex");
    if (g.order() > kSearchCapacity)
        fail(ErrorKind::cap_exceeded, "exact search supports at most " +
                                          std::to_string(kSearchCapacity) + " vertices, got " +
                                          std::to_string(g.order()));
}

}  // namespace

std::string_view invariant_name(Invariant inv) {
    for (auto [i, name] : kInvariantNames)
        if (i == inv) return name;
    return "?";
}

std::optional<Invariant> invariant_from_name(std::string_view name) {
    for (auto [i, n] : kInvariantNames)
        if (n == name) return i;
    return std::nullopt;
}

SolveResult solve(const Graph& g, Invariant inv, const SolveOptions& opts) {
    check_solvable(g);
    if (inv == Invariant::alpha) {
        SolveResult cover = solve(g, Invariant::beta, opts);
        std::vector<int> flipped(g.order());
        for (Vertex v = 0; v < g.order(); ++v) flipped[v] = 1 - cover.witness[v];
        return {g.order() - cover.value, Labeling(std::move(flipped)), std::nullopt, cover.node_count};
    }
    const Problem p = problem_for(inv);
    Optimum opt = find_optimum(g, p, std::max(1U, opts.workers));
    std::int64_t nodes = opt.nodes;
    std::vector<int> canon = canonical_descent(g, p, opt.value, std::move(opt.labeling), nodes);
    SolveResult r{opt.value, Labeling(std::move(canon)), std::nullopt, nodes};
    if (weight(r.witness) != r.value || !witness_valid(g, inv, r.witness))
        throw std::logic_error("search produced an invalid witness for " +
                               std::string(invariant_name(inv)));
    return r;
}

SolveResult solve_oidrd(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::gamma_oidr, o); }
SolveResult solve_gamma_dr(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::gamma_dr, o); }
SolveResult solve_gamma_oir(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::gamma_oir, o); }
SolveResult solve_gamma_r(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::gamma_r, o); }
SolveResult solve_gamma(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::gamma, o); }
SolveResult solve_alpha(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::alpha, o); }
SolveResult solve_beta(const Graph& g, const SolveOptions& o) { return solve(g, Invariant::beta, o); }

bool witness_valid(const Graph& g, Invariant inv, const Labeling& f) {
    switch (inv) {
        case Invariant::gamma_oidr: return is_oidrd(g, f);
        case Invariant::gamma_dr: return is_drd(g, f);
        case Invariant::gamma_oir:
        case Invariant::gamma_r:
            for (int v = 0; v < f.size(); ++v)
                if (f[v] == 3) return false;
            return inv == Invariant::gamma_oir ? is_oird(g, f) : is_rd(g, f);
        case Invariant::gamma:
        case Invariant::alpha:
        case Invariant::beta:
            for (int v = 0; v < f.size(); ++v)
                if (f[v] > 1) return false;
            if (inv == Invariant::gamma) return is_dominating_set(g, f);
            return inv == Invariant::alpha ? is_independent_set(g, f) : is_vertex_cover(g, f);
    }
    return false;
}

InvariantBundle bundle(const Graph& g, const SolveOptions& opts) {
    InvariantBundle b;
    b.gamma = solve_gamma(g, opts).value;
    b.beta = solve_beta(g, opts).value;
    b.alpha = g.order() - b.beta;
    b.gamma_r = solve_gamma_r(g, opts).value;
    b.gamma_oir = solve_gamma_oir(g, opts).value;
    b.gamma_dr = solve_gamma_dr(g, opts).value;
    b.gamma_oidr = solve_oidrd(g, opts).value;
    if (b.alpha + b.beta != g.order()) throw std::logic_error("alpha + beta != n");
    if (b.gamma_dr > b.gamma_oidr) throw std::logic_error("gamma_dR exceeds gamma_oidR");
    if (b.gamma_oir >= b.gamma_oidr) throw std::logic_error("gamma_oiR is not below gamma_oidR");
    return b;
}

int value_of(const InvariantBundle& b, Invariant inv) {
    switch (inv) {
        case Invariant::gamma_oidr: return b.gamma_oidr;
        case Invariant::gamma_dr: return b.gamma_dr;
        case Invariant::gamma_oir: return b.gamma_oir;
        case Invariant::gamma_r: return b.gamma_r;
        case Invariant::gamma: return b.gamma;
        case Invariant::alpha: return b.alpha;
        case Invariant::beta: return b.beta;
    }
    return 0;
}

}  // namespace oidrd
