#include "scoreseq/blowup.hpp"
#include "scoreseq/errors.hpp"
#include "support/oracles.hpp"

#include "doctest.h"

#include <random>

using namespace scoreseq;
using testing::int_seq;
using testing::q;
using testing::seq;

namespace {

std::vector<std::int64_t> flat(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace

TEST_CASE("lcm_denominator examples") {
    CHECK(lcm_denominator(seq({q(1, 2), q(1, 2)})) == 2);
    CHECK(lcm_denominator(int_seq({1, 1, 1})) == 1);
    CHECK(lcm_denominator(seq({q(1, 2), q(1), q(3, 2)})) == 2);
    CHECK(lcm_denominator(seq({q(1, 3), q(1, 2), q(5, 2), q(8, 3)})) == 6);
    CHECK_THROWS_AS(lcm_denominator(ScoreSequence({Rational::parse("0.00000000000000000000001")})),
                    ResourceLimit);
}

TEST_CASE("blowup_scores examples") {
    SUBCASE("odd m") {
        const auto plan = blowup_scores(int_seq({0, 1, 2}), 3);
        CHECK(plan.targets() == flat({1, 1, 1, 4, 4, 4, 7, 7, 7}));
        CHECK(plan.has_total_sum_identity());
        CHECK(plan.has_pairing_identity());
    }
    SUBCASE("even m") {
        const auto plan = blowup_scores(seq({q(1, 2), q(1, 2)}), 2);
        CHECK(plan.targets() == flat({1, 2, 1, 2}));
        CHECK(plan.has_total_sum_identity());
        CHECK(plan.has_pairing_identity());
    }
    SUBCASE("m = 1 is the identity") {
        const auto d = int_seq({0, 2, 2, 2, 4});
        const auto plan = blowup_scores(d, 1);
        CHECK(plan.targets() == d.to_integers());
    }
    SUBCASE("(1/2, 1, 3/2)") {
        const auto plan = blowup_scores(seq({q(1, 2), q(1), q(3, 2)}), 2);
        CHECK(plan.targets() == flat({1, 2, 2, 3, 3, 4}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(blowup_scores(seq({q(1, 2), q(1, 2)}), 3), NonIntegral);
        CHECK_THROWS_AS(blowup_scores(int_seq({0, 0, 3}), 1), ConditionViolation);
        CHECK_THROWS_AS(blowup_scores(int_seq({0, 1, 2}), 0), InvalidArgument);
    }
}

TEST_CASE("blow-up identities hold for odd and even m") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const auto d = testing::mirrored_random_scores(n, rng, 4);
        const ScoreSequence sd(d);
        const std::uint64_t base = lcm_denominator(sd);
        for (std::uint64_t mult : {1U, 2U, 3U}) {
            const auto plan = blowup_scores(sd, base * mult);
            CHECK(plan.has_total_sum_identity());
            CHECK(plan.has_pairing_identity());
            CHECK(satisfies_condition_I(plan.targets()));
        }
    }
}

TEST_CASE("even-m offsets of m/2 and m/2 + 1 break the total-sum identity") {
    // m/2 on the first half and m/2 + 1 on the second: each cluster sums to
    // m d_i + m(m+1)/2 instead of m d_i + m(m-1)/2.
    const auto d = seq({q(1, 2), q(1, 2)});
    const std::int64_t m = 2;
    std::int64_t total = 0;
    for (const auto& di : d) {
        const auto scaled = (di * Rational(m)).to_int64();
        total += (scaled + m / 2) * (m / 2) + (scaled + m / 2 + 1) * (m / 2);
    }
    CHECK(total != 6);
    CHECK(blowup_scores(d, 2).has_total_sum_identity());
}

TEST_CASE("blowup_involution pairs v(i,l) with v(n-1-i, m-1-l)") {
    const auto rho = blowup_involution(3, 2);
    CHECK(rho.image() == std::vector<std::size_t>{5, 4, 3, 2, 1, 0});
    CHECK(blowup_involution(3, 3).fixed_point_count() == 1);
    CHECK(blowup_involution(2, 2).fixed_point_count() == 0);
}

TEST_CASE("shrink_down examples") {
    SUBCASE("m = 1 returns the tournament itself") {
        Tournament h(3);
        h.orient(0, 2);
        const BlowUpPlan plan(3, 1, h.out_degrees());
        CHECK(shrink_down(h, plan) == h.to_generalised());
    }
    SUBCASE("hand-computed 4-vertex blow-up of (1/2, 1/2)") {
        // a, b, c, d = 0..3; clusters {a, b} and {c, d}.
        Tournament h(4);
        h.orient(0, 3);
        h.orient(1, 0);
        h.orient(1, 2);
        h.orient(2, 0);
        h.orient(3, 1);
        h.orient(3, 2);
        const auto plan = blowup_scores(seq({q(1, 2), q(1, 2)}), 2);
        CHECK(h.out_degrees() == plan.targets());
        CHECK(is_self_converse_witness(h, blowup_involution(2, 2)));
        const auto g = shrink_down(h, plan);
        CHECK(g.weight(0, 1) == q(1, 2));
        CHECK(g.weight(1, 0) == q(1, 2));
    }
    SUBCASE("(0,1,2), m = 3, from symmetric_realize") {
        const auto d = int_seq({0, 1, 2});
        const auto plan = blowup_scores(d, 3);
        const auto h = symmetric_realize(plan.targets(), blowup_involution(3, 3));
        const auto g = shrink_down(h, plan);
        CHECK(scores_of(g).labeled == d.entries());
        for (const auto& w : g.weights()) CHECK((Rational(9) * w).is_integer());
    }
    SUBCASE("dimension mismatch") {
        const auto plan = blowup_scores(seq({q(1, 2), q(1, 2)}), 2);
        CHECK_THROWS_AS(shrink_down(Tournament(3), plan), DimensionMismatch);
    }
}

TEST_CASE("realize_self_converse_rational examples") {
    SUBCASE("(1/2, 1/2)") {
        const auto r = realize_self_converse_rational(seq({q(1, 2), q(1, 2)}));
        CHECK(r.tournament.weight(0, 1) == q(1, 2));
        CHECK(r.witness == VertexBijection::reversal(2));
    }
    SUBCASE("(0, 1, 2) is the transitive tournament") {
        const auto r = realize_self_converse_rational(int_seq({0, 1, 2}));
        CHECK(r.tournament == Tournament(3).to_generalised());
        CHECK(is_self_converse_witness(r.tournament, r.witness));
    }
    SUBCASE("(1/2, 1, 3/2)") {
        const auto d = seq({q(1, 2), q(1), q(3, 2)});
        const auto r = realize_self_converse_rational(d, {.symmetric_cap = 6});
        CHECK(scores_of(r.tournament).labeled == d.entries());
        CHECK(is_self_converse_witness(r.tournament, r.witness));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(realize_self_converse_rational(int_seq({0, 0, 3})), ConditionViolation);
        CHECK_THROWS_AS(realize_self_converse_rational(seq({q(0), q(3, 2), q(3, 2)})),
                        ConditionViolation);
        CHECK_THROWS_AS(realize_self_converse_rational(seq({q(1, 2), q(1), q(3, 2)}),
                                                       {.symmetric_cap = 5}),
                        ResourceLimit);
    }
}

TEST_CASE("moon_realize examples") {
    CHECK(moon_realize(seq({q(1, 2), q(1, 2)})).weight(0, 1) == q(1, 2));

    const auto d = seq({q(0), q(3, 2), q(3, 2)});
    CHECK(scores_of(moon_realize(d)).labeled == d.entries());

    const auto regular = moon_realize(int_seq({1, 1, 1}));
    CHECK(scores_of(regular).labeled == std::vector<Rational>{q(1), q(1), q(1)});

    CHECK_THROWS_AS(moon_realize(int_seq({0, 0, 3})), ConditionViolation);
    CHECK_THROWS_AS(moon_realize(seq({q(1, 7), q(13, 14), q(27, 14)}), {.moon_cap = 20}),
                    ResourceLimit);
}

TEST_CASE("symmetrize examples") {
    SUBCASE("already symmetric") {
        const auto g = Tournament(3).to_generalised();
        CHECK(symmetrize(g) == g);
    }
    SUBCASE("3-cycle") {
        Tournament t(3);
        t.orient(0, 1);
        t.orient(1, 2);
        t.orient(2, 0);
        CHECK(symmetrize(t.to_generalised()) == t.to_generalised());
    }
    SUBCASE("4-vertex tournament that is not witness-symmetric") {
        Tournament t(4);
        for (auto [w, l] : {std::pair{1, 2}, {3, 1}, {4, 1}, {3, 2}, {2, 4}, {4, 3}}) {
            t.orient(static_cast<std::size_t>(w - 1), static_cast<std::size_t>(l - 1));
        }
        const auto g = t.to_generalised();
        CHECK_FALSE(is_self_converse_witness(g, VertexBijection::reversal(4)));
        const auto b = symmetrize(g);
        CHECK(b.weight(0, 1) == q(1, 2));
        CHECK(b.weight(2, 3) == q(1, 2));
        CHECK(b.weight(0, 2) == q(1, 2));
        CHECK(b.weight(1, 3) == q(1, 2));
        CHECK(b.weight(0, 3) == q(0));
        CHECK(b.weight(1, 2) == q(0));
        CHECK(scores_of(b).labeled == scores_of(g).labeled);
        CHECK(is_self_converse_witness(b, VertexBijection::reversal(4)));
    }
    SUBCASE("preconditions") {
        Tournament t(3);  // labeled scores (0, 1, 2)
        t.orient(0, 1);   // now (1, 0, 2): unsorted
        CHECK_THROWS_AS(symmetrize(t.to_generalised()), ConditionViolation);
        CHECK_THROWS_AS(symmetrize(moon_realize(seq({q(0), q(3, 2), q(3, 2)}))), ConditionViolation);
    }
}

TEST_CASE("symmetrize is idempotent and keeps scores on random inputs") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto d = ScoreSequence(testing::mirrored_random_scores(n, rng, 3));
        if (lcm_denominator(d) * n > 200) continue;
        const auto g = moon_realize(d);
        const auto b = symmetrize(g);
        CHECK(scores_of(b).labeled == d.entries());
        CHECK(is_self_converse_witness(b, VertexBijection::reversal(n)));
        CHECK(symmetrize(b) == b);
    }
}
