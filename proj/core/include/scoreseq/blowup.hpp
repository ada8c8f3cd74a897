#pragma once

#include "scoreseq/integer_realizer.hpp"
#include "scoreseq/model.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace scoreseq {

/*
 * Integer out-degree targets for the blow-up of an n-vertex score sequence by
 * a factor m: vertex i becomes the cluster v_{i,0..m-1}, flattened as i*m + l.
 */
class BlowUpPlan {
public:
    BlowUpPlan(std::size_t n, std::size_t m, std::vector<std::int64_t> targets);

    std::size_t clusters() const { return n_; }
    std::size_t factor() const { return m_; }
    std::size_t vertex_count() const { return n_ * m_; }
    std::size_t vertex(std::size_t cluster, std::size_t copy) const { return cluster * m_ + copy; }
    std::int64_t target(std::size_t cluster, std::size_t copy) const {
        return targets_[vertex(cluster, copy)];
    }
    /// Targets in flattened (cluster, copy) order; not necessarily sorted.
    const std::vector<std::int64_t>& targets() const { return targets_; }

    /// Sum of all targets equals C(mn, 2).
    bool has_total_sum_identity() const;
    /// c(i,l) + c(n-1-i, m-1-l) = mn - 1 everywhere.
    bool has_pairing_identity() const;

    friend bool operator==(const BlowUpPlan&, const BlowUpPlan&) = default;

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<std::int64_t> targets_;
};

/// Least m >= 1 with m * d_i integral for all i. ResourceLimit if it exceeds 64 bits.
std::uint64_t lcm_denominator(const ScoreSequence& d);

/*
 * c(i,l) = m d_i + (m-1)/2 for odd m. For even m the second term is m/2 - 1
 * on the first half of each cluster and m/2 on the second half, which keeps
 * both the total-sum identity and the pairing identity.
 *
 * Throws NonIntegral if some m d_i is fractional, ConditionViolation if d
 * fails Condition I, InternalError if the resulting plan breaks an identity.
 */
BlowUpPlan blowup_scores(const ScoreSequence& d, std::uint64_t m);

/// v_{i,l} -> v_{n-1-i, m-1-l} on the flattened blow-up labels.
VertexBijection blowup_involution(std::size_t n, std::size_t m);

/// Averages the m*m arcs between clusters: w(i,j) = (1/m^2) sum_{l,k} H(v_{i,l}, v_{j,k}).
GeneralisedTournament shrink_down(const Tournament& h, const BlowUpPlan& plan);

struct RealizeOptions {
    /// Largest blow-up handed to symmetric_realize.
    std::size_t symmetric_cap = kDefaultSymmetricCap;
    /// Largest blow-up handed to landau_realize by moon_realize.
    std::size_t moon_cap = 4096;
};

struct SelfConverseRealization {
    GeneralisedTournament tournament;
    VertexBijection witness;
};

/*
 * Exact self-converse realization of a rational sequence satisfying
 * Conditions I and II: blow up by the lcm of the denominators, realize the
 * blow-up with the clusterwise involution, shrink back down. The returned
 * witness is i -> n-1-i and vertex i has score d[i].
 */
SelfConverseRealization realize_self_converse_rational(const ScoreSequence& d,
                                                       const RealizeOptions& options = {});

/// Generalised tournament with labeled scores d (Condition I only): blow-up, Landau, shrink.
GeneralisedTournament moon_realize(const ScoreSequence& d, const RealizeOptions& options = {});

/*
 * b(i,j) = (w(i,j) + 1 - w(n-1-i, n-1-j)) / 2 off the diagonal. Keeps the
 * labeled scores and makes i -> n-1-i a witness. Requires labeled scores that
 * are non-decreasing and satisfy Condition II (ConditionViolation otherwise).
 */
GeneralisedTournament symmetrize(const GeneralisedTournament& g);

}  // namespace scoreseq
