#include "scoreseq/approximation.hpp"
#include "scoreseq/errors.hpp"
#include "support/oracles.hpp"

#include "doctest.h"

#include <random>

using namespace scoreseq;
using testing::int_seq;
using testing::q;
using testing::seq;

TEST_CASE("choose_rational_in_interval examples") {
    CHECK(choose_rational_in_interval(q(0), q(1, 10)) == q(1, 11));
    CHECK(choose_rational_in_interval(q(1, 3), q(2, 3)) == q(1, 2));
    CHECK(choose_rational_in_interval(Rational::parse("0.7071"), Rational::parse("0.7171")) == q(5, 7));
    CHECK(choose_rational_in_interval(q(1, 2), q(7, 2)) == q(1));
    CHECK(choose_rational_in_interval(q(-5, 2), q(-1, 3)) == q(-2));
    CHECK_THROWS_AS(choose_rational_in_interval(q(1, 2), q(1, 2)), EmptyInterval);
    CHECK_THROWS_AS(choose_rational_in_interval(q(1), q(0)), EmptyInterval);
}

TEST_CASE("choose_rational_in_interval matches a denominator sweep") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(-300, 300);
    std::uniform_int_distribution<std::int64_t> den(1, 60);
    for (int trial = 0; trial < 2000; ++trial) {
        Rational a(BigInt(num(rng)), BigInt(den(rng)));
        Rational b(BigInt(num(rng)), BigInt(den(rng)));
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        CAPTURE(a);
        CAPTURE(b);
        const Rational got = choose_rational_in_interval(a, b);
        CHECK(got == testing::simplest_by_sweep(a, b));
        CHECK(a < got);
        CHECK(got < b);
    }
}

TEST_CASE("approximate examples") {
    SUBCASE("all scores at the midpoint need no approximation") {
        for (std::uint64_t m : {1U, 5U, 100U}) {
            const auto out = approximate(int_seq({1, 1, 1}), m);
            CHECK(out.sequence == int_seq({1, 1, 1}));
            CHECK_FALSE(out.trace.n_prime);
            CHECK(out.trace.picks.empty());
        }
        CHECK(approximate(int_seq({0}), 3).sequence == int_seq({0}));
        CHECK(approximate(seq({q(1, 2), q(1, 2)}), 7).sequence == seq({q(1, 2), q(1, 2)}));
    }
    SUBCASE("(0, 1, 2), m = 10") {
        const auto out = approximate(int_seq({0, 1, 2}), 10);
        CHECK(out.sequence == seq({q(1, 11), q(1), q(21, 11)}));
        REQUIRE(out.trace.n_prime);
        CHECK(*out.trace.n_prime == 1);
        REQUIRE(out.trace.intervals.size() == 1);
        CHECK(out.trace.intervals[0] == OpenInterval{q(0), q(1, 10)});
        CHECK(out.trace.picks == std::vector<Rational>{q(1, 11)});
    }
    SUBCASE("decimal input, m = 100") {
        const auto d = ScoreSequence({Rational::parse("0.7071"), q(1), Rational::parse("1.2929")});
        CHECK(approximate(d, 100).sequence == seq({q(5, 7), q(1), q(9, 7)}));
    }
    SUBCASE("picks run downward and nest") {
        // (1, 1, 2, 2) has n' = 2; index 2 is picked first, then index 1 below it.
        const auto out = approximate(seq({q(1), q(1), q(2), q(2)}), 2);
        REQUIRE(out.trace.n_prime);
        CHECK(*out.trace.n_prime == 2);
        CHECK(out.trace.intervals[1] == OpenInterval{q(1), q(3, 2)});
        CHECK(out.trace.picks[1] == q(4, 3));
        CHECK(out.trace.intervals[0] == OpenInterval{q(1), q(4, 3)});
        CHECK(out.trace.picks[0] == q(5, 4));
        CHECK(out.sequence == seq({q(5, 4), q(4, 3), q(5, 3), q(7, 4)}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(approximate(int_seq({0, 0, 3}), 5), ConditionViolation);
        CHECK_THROWS_AS(approximate(seq({q(0), q(3, 2), q(3, 2)}), 5), ConditionViolation);
        CHECK_THROWS_AS(approximate(int_seq({0, 1, 2}), 0), InvalidArgument);
    }
}

TEST_CASE("approximate properties on generated sequences") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const ScoreSequence d(testing::mirrored_random_scores(n, rng, 9));
        for (std::uint64_t m : {1U, 2U, 10U, 100U}) {
            const auto out = approximate(d, m);
            const auto report = check_condition_I(out.sequence);
            CHECK(report.condition_I);
            CHECK(report.condition_II);
            const Rational bound = Rational(1) / Rational(static_cast<std::int64_t>(m));
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(abs(out.sequence[i] - d[i]) < bound);
                if (i < (n + 1) / 2) CHECK(out.sequence[i] >= d[i]);
            }
            const auto& tr = out.trace;
            CHECK(tr.picks.size() == tr.intervals.size());
            for (std::size_t k = 0; k < tr.picks.size(); ++k) {
                CHECK(tr.intervals[k].contains(tr.picks[k]));
                if (k + 1 < tr.picks.size()) CHECK(tr.picks[k] < tr.picks[k + 1]);
            }
            CHECK(approximate(d, m).sequence == out.sequence);
        }
    }
}

TEST_CASE("realize_real examples") {
    SUBCASE("(1/2, 1/2)") {
        const auto r = realize_real(seq({q(1, 2), q(1, 2)}), 4);
        CHECK(r.tournament.weight(0, 1) == q(1, 2));
        CHECK(r.approximated == seq({q(1, 2), q(1, 2)}));
    }
    SUBCASE("(0, 1, 2), m = 10 needs a 33-vertex blow-up") {
        CHECK_THROWS_AS(realize_real(int_seq({0, 1, 2}), 10), ResourceLimit);
        const auto r = realize_real(int_seq({0, 1, 2}), 10, {.symmetric_cap = 33});
        CHECK(r.approximated == seq({q(1, 11), q(1), q(21, 11)}));
        CHECK(scores_of(r.tournament).labeled == r.approximated.entries());
        CHECK(is_self_converse_witness(r.tournament, r.witness));
    }
    SUBCASE("invalid input") {
        CHECK_THROWS_AS(realize_real(int_seq({0, 0, 3}), 10), ConditionViolation);
    }
}
