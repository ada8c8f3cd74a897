#pragma once

#include "scoreseq/blowup.hpp"
#include "scoreseq/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace scoreseq {

struct OpenInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

struct ApproximationTrace {
    /// 1-based index of the last score below (n-1)/2 in the lower half; empty when all
    /// scores equal (n-1)/2.
    std::optional<std::size_t> n_prime;
    std::uint64_t m = 1;
    /// intervals[k] and picks[k] belong to index k+1, for k < n_prime.
    std::vector<OpenInterval> intervals;
    std::vector<Rational> picks;
};

struct Approximation {
    ScoreSequence sequence;
    ApproximationTrace trace;
};

/// Simplest rational strictly inside (lo, hi): least denominator, then least numerator.
/// Throws EmptyInterval unless lo < hi.
Rational choose_rational_in_interval(const Rational& lo, const Rational& hi);

/*
 * Perturbs a sequence satisfying Conditions I and II into one that still does,
 * with every entry moved by less than 1/m.
 *
 * n' is the largest k <= floor(n/2) with d_k < (n-1)/2. Picks run downward
 * from n': index n' draws from (d_n', min{(n-1)/2, d_n' + 1/m}), index k-1
 * from (d_{k-1}, min{pick_k, d_{k-1} + 1/m}). Indices n'+1..ceil(n/2) keep
 * (n-1)/2 and the upper half mirrors as n-1-pick. Without an n' the input is
 * returned unchanged.
 */
Approximation approximate(const ScoreSequence& d, std::uint64_t m);

struct RealRealization {
    GeneralisedTournament tournament;
    VertexBijection witness;
    ScoreSequence approximated;
};

/// realize_self_converse_rational(approximate(d, m)). Scores are within 1/m of d.
RealRealization realize_real(const ScoreSequence& d, std::uint64_t m,
                             const RealizeOptions& options = {});

}  // namespace scoreseq
