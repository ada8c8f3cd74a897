#pragma once

#include "scoreseq/model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>

namespace scoreseq {

/// True iff the sorted copy of `scores` satisfies Condition I (integer fast path).
bool satisfies_condition_I(std::span<const std::int64_t> scores);

/// Tournament whose vertex i has out-degree d[i]. Throws NonIntegral or ConditionViolation.
Tournament landau_realize(const ScoreSequence& d);

/*
 * Same, for labeled scores in any order.
 *
 * Peels vertices one at a time: the vertex with the largest residual score s
 * among the k remaining loses to the k-1-s remaining vertices of largest
 * residual score and beats the rest. Ties go to the lowest label. Condition I
 * is re-checked on the residual after every step.
 */
Tournament landau_realize(std::span<const std::int64_t> labeled);

inline constexpr std::size_t kDefaultSymmetricCap = 24;

struct SymmetricSearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    bool solved_by_pairing = false;
};

enum class SymmetricMethod {
    pairing_then_search,  ///< try the pair-peeling construction, search only if it stalls
    search,               ///< exhaustive orbit search only
};

/*
 * Tournament T with out-degree c[v] at every v and T(u,v) = 1 - T(rho(u), rho(v)),
 * i.e. rho is an isomorphism from T to its converse.
 *
 * Requirements (ConditionViolation otherwise): rho is an involution with at
 * most one fixed point, c[v] + c[rho(v)] = N - 1, a fixed point has score
 * (N - 1) / 2, and sorted c satisfies Condition I. ResourceLimit when N > cap.
 *
 * The unordered edges split into orbits {u,v} ~ {rho(v), rho(u)}; orienting
 * u -> v forces rho(v) -> rho(u), while the edges {u, rho(u)} are free.
 * Depth-first search over orbits with degree propagation: a vertex whose
 * residual need is 0 (or equals its number of undecided edges) forces all its
 * undecided edges. Branching picks the most constrained vertex.
 *
 * Pair peeling runs first by default: take the lowest-score vertex u that is
 * not fixed, let it beat the lowest-score remaining vertices, mirror every arc
 * through rho onto rho(u), and drop both. A step is kept only if the residual
 * still satisfies Condition I; if no step works the search takes over. The cap
 * applies to both methods.
 */
Tournament symmetric_realize(std::span<const std::int64_t> c, const VertexBijection& rho,
                             std::size_t cap = kDefaultSymmetricCap,
                             SymmetricSearchStats* stats = nullptr,
                             SymmetricMethod method = SymmetricMethod::pairing_then_search);

}  // namespace scoreseq
