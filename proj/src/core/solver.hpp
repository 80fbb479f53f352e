#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "core/graph.hpp"
#include "core/labeling.hpp"

namespace oidrd {

enum class Invariant {
    gamma_oidr,  // outer independent double Roman domination number
    gamma_dr,    // double Roman domination number
    gamma_oir,   // outer independent Roman domination number
    gamma_r,     // Roman domination number
    gamma,       // domination number
    alpha,       // independence number
    beta,        // vertex cover number
};

std::string_view invariant_name(Invariant inv);
std::optional<Invariant> invariant_from_name(std::string_view name);

/// Optimal value plus the lexicographically smallest optimal witness.
///
/// For the weighted invariants the witness is the labeling itself. For
/// gamma and beta it is the 0/1 indicator of a dominating set / vertex cover,
/// for alpha the indicator of an independent set (the complement of the
/// canonical beta witness).
struct SolveResult {
    int value = 0;
    Labeling witness;
    /// Number of optimal labelings; filled by the exhaustive routines only.
    std::optional<std::int64_t> optimal_count;
    std::int64_t node_count = 0;
};

struct SolveOptions {
    /// Threads used for the bound-finding phase. The result does not depend
    /// on this value.
    unsigned workers = 1;
};

/// Largest order the bitmask search accepts.
inline constexpr int kSearchCapacity = kMaskCapacity;

/// Exact branch and bound. Requires 1 <= g.order() <= 64; throws
/// Error(cap_exceeded) above that.
SolveResult solve(const Graph& g, Invariant inv, const SolveOptions& opts = {});

SolveResult solve_oidrd(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_gamma_dr(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_gamma_oir(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_gamma_r(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_gamma(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_alpha(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_beta(const Graph& g, const SolveOptions& opts = {});

/// Whether `witness` certifies `inv` on `g` (predicate only, not optimality).
bool witness_valid(const Graph& g, Invariant inv, const Labeling& witness);

struct InvariantBundle {
    int gamma = 0;
    int alpha = 0;
    int beta = 0;
    int gamma_r = 0;
    int gamma_oir = 0;
    int gamma_dr = 0;
    int gamma_oidr = 0;

    friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

/// All seven parameters. Throws std::logic_error if Gallai (alpha + beta = n),
/// gamma_dr <= gamma_oidr or gamma_oir < gamma_oidr fails.
InvariantBundle bundle(const Graph& g, const SolveOptions& opts = {});

int value_of(const InvariantBundle& b, Invariant inv);

}  // namespace oidrd
