#include "scoreseq/blowup.hpp"

#include "scoreseq/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>
#include <numeric>
#include <string>

namespace scoreseq {

BlowUpPlan::BlowUpPlan(std::size_t n, std::size_t m, std::vector<std::int64_t> targets)
    : n_(n), m_(m), targets_(std::move(targets)) {
    if (n_ == 0 || m_ == 0) throw InvalidArgument("blow-up plan needs n >= 1 and m >= 1");
    if (targets_.size() != n_ * m_) throw DimensionMismatch("blow-up targets must be n x m");
    for (auto c : targets_) {
        if (c < 0) throw InvalidArgument("blow-up targets must be non-negative");
    }
}

bool BlowUpPlan::has_total_sum_identity() const {
    const auto big_n = static_cast<std::int64_t>(vertex_count());
    const std::int64_t total = std::accumulate(targets_.begin(), targets_.end(), std::int64_t{0});
    return total == big_n * (big_n - 1) / 2;
}

bool BlowUpPlan::has_pairing_identity() const {
    const auto top = static_cast<std::int64_t>(vertex_count()) - 1;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t l = 0; l < m_; ++l) {
            if (target(i, l) + target(n_ - 1 - i, m_ - 1 - l) != top) return false;
        }
    }
    return true;
}

std::uint64_t lcm_denominator(const ScoreSequence& d) {
    BigInt m = 1;
    for (const auto& r : d) m = boost::multiprecision::lcm(m, r.denominator());
    if (m > std::numeric_limits<std::uint64_t>::max()) {
        throw ResourceLimit("common denominator " + m.str() + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(m);
}

BlowUpPlan blowup_scores(const ScoreSequence& d, std::uint64_t m) {
    if (m == 0) throw InvalidArgument("blow-up factor must be positive");
    if (!check_condition_I(d).condition_I) {
        throw ConditionViolation("scores do not satisfy Condition I");
    }
    const std::size_t n = d.size();
    const auto factor = static_cast<std::int64_t>(m);

    std::vector<std::int64_t> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = d[i] * Rational(factor);
        if (!s.is_integer()) {
            throw NonIntegral(std::to_string(m) + " * " + d[i].to_string() + " is not an integer");
        }
        scaled[i] = s.to_int64();
    }

    std::vector<std::int64_t> targets(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            std::int64_t within;
            if (m % 2 == 1) {
                within = (factor - 1) / 2;
            } else {
                within = l < m / 2 ? factor / 2 - 1 : factor / 2;
            }
            targets[i * m + l] = scaled[i] + within;
        }
    }

    BlowUpPlan plan(n, m, std::move(targets));
    if (!plan.has_total_sum_identity() || !satisfies_condition_I(plan.targets())) {
        throw InternalError("blow-up targets violate Condition I");
    }
    if (check_condition_II(d) && !plan.has_pairing_identity()) {
        throw InternalError("blow-up targets violate the pairing identity");
    }
    return plan;
}

VertexBijection blowup_involution(std::size_t n, std::size_t m) {
    std::vector<std::size_t> image(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) image[i * m + l] = (n - 1 - i) * m + (m - 1 - l);
    }
    return VertexBijection(std::move(image));
}

GeneralisedTournament shrink_down(const Tournament& h, const BlowUpPlan& plan) {
    if (h.size() != plan.vertex_count()) {
        throw DimensionMismatch("blow-up tournament has " + std::to_string(h.size()) +
                                " vertices, plan expects " + std::to_string(plan.vertex_count()));
    }
    const std::size_t n = plan.clusters();
    const std::size_t m = plan.factor();
    const BigInt denom = BigInt(m) * m;

    std::vector<Rational> weights(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::int64_t arcs = 0;
            for (std::size_t l = 0; l < m; ++l) {
                for (std::size_t k = 0; k < m; ++k) arcs += h.weight(plan.vertex(i, l), plan.vertex(j, k));
            }
            weights[i * n + j] = Rational(BigInt(arcs), denom);
        }
    }
    return GeneralisedTournament(n, std::move(weights));
}

SelfConverseRealization realize_self_converse_rational(const ScoreSequence& d,
                                                       const RealizeOptions& options) {
    const auto report = check_condition_I(d);
    if (!report.condition_I) throw ConditionViolation("scores do not satisfy Condition I");
    if (!report.condition_II) throw ConditionViolation("scores do not satisfy Condition II");

    const std::size_t n = d.size();
    const std::uint64_t m = lcm_denominator(d);
    if (m > options.symmetric_cap || n * m > options.symmetric_cap) {
        throw ResourceLimit("blow-up needs " + std::to_string(n) + " x " + std::to_string(m) +
                            " vertices, above the cap of " + std::to_string(options.symmetric_cap));
    }

    const BlowUpPlan plan = blowup_scores(d, m);
    const Tournament h = symmetric_realize(plan.targets(), blowup_involution(n, m),
                                           options.symmetric_cap);
    GeneralisedTournament g = shrink_down(h, plan);

    auto witness = VertexBijection::reversal(n);
    if (scores_of(g).labeled != d.entries() || !is_self_converse_witness(g, witness)) {
        throw InternalError("shrunk tournament misses its scores or its witness");
    }
    return {std::move(g), std::move(witness)};
}

GeneralisedTournament moon_realize(const ScoreSequence& d, const RealizeOptions& options) {
    if (!check_condition_I(d).condition_I) {
        throw ConditionViolation("scores do not satisfy Condition I");
    }
    const std::size_t n = d.size();
    const std::uint64_t m = lcm_denominator(d);
    if (m > options.moon_cap || n * m > options.moon_cap) {
        throw ResourceLimit("blow-up needs " + std::to_string(n) + " x " + std::to_string(m) +
                            " vertices, above the cap of " + std::to_string(options.moon_cap));
    }

    const BlowUpPlan plan = blowup_scores(d, m);
    const Tournament h = landau_realize(plan.targets());
    GeneralisedTournament g = shrink_down(h, plan);
    if (scores_of(g).labeled != d.entries()) {
        throw InternalError("shrunk tournament misses its scores");
    }
    return g;
}

GeneralisedTournament symmetrize(const GeneralisedTournament& g) {
    const auto scores = scores_of(g);
    if (scores.labeled != scores.sorted.entries()) {
        throw ConditionViolation("labeled scores are not non-decreasing");
    }
    if (!check_condition_II(scores.sorted)) {
        throw ConditionViolation("scores do not satisfy Condition II");
    }

    const std::size_t n = g.size();
    const Rational one(1);
    const Rational half = Rational(1) / Rational(2);
    std::vector<Rational> weights(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            weights[i * n + j] = (g.weight(i, j) + one - g.weight(n - 1 - i, n - 1 - j)) * half;
        }
    }
    return GeneralisedTournament(n, std::move(weights));
}

}  // namespace scoreseq
