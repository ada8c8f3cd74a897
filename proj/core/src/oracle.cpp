#include "scoreseq/oracle.hpp"

#include "scoreseq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scoreseq {

TournamentRange::TournamentRange(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("tournaments need at least one vertex");
    if (n > kMaxEnumerationVertices) {
        throw ResourceLimit("enumerating tournaments on " + std::to_string(n) +
                            " vertices exceeds the cap of " +
                            std::to_string(kMaxEnumerationVertices));
    }
    count_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

Tournament TournamentRange::at(std::uint64_t index) const {
    Tournament t(n_);
    std::size_t edge = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j, ++edge) {
            if ((index >> edge) & 1U) {
                t.orient(i, j);
            } else {
                t.orient(j, i);
            }
        }
    }
    return t;
}

Tournament TournamentRange::iterator::operator*() const { return TournamentRange(n_).at(index_); }

TournamentRange enumerate_tournaments(std::size_t n) { return TournamentRange(n); }

namespace {

// Non-decreasing sequences of length n over 0..n-1 with sum C(n,2).
template <typename Visit>
void for_each_candidate(std::size_t n, Visit visit) {
    const auto top = static_cast<std::int64_t>(n) - 1;
    const auto total = static_cast<std::int64_t>(n * (n - 1) / 2);
    std::vector<std::int64_t> seq(n);
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t low, std::int64_t sum) -> void {
        if (pos == n) {
            if (sum == total) visit(seq);
            return;
        }
        const auto left = static_cast<std::int64_t>(n - pos);
        for (std::int64_t v = low; v <= top; ++v) {
            if (sum + v * left > total) break;
            seq[pos] = v;
            self(self, pos + 1, v, sum + v);
        }
    };
    rec(rec, 0, 0, 0);
}

ScoreSequence to_sequence(const std::vector<std::int64_t>& values) {
    std::vector<Rational> entries;
    entries.reserve(values.size());
    for (auto v : values) entries.emplace_back(v);
    return ScoreSequence(std::move(entries));
}

// Plain n!-permutation check used when pruning is disabled.
bool has_witness_unpruned(const Tournament& t) {
    std::vector<std::size_t> image(t.size());
    std::iota(image.begin(), image.end(), std::size_t{0});
    do {
        if (is_self_converse_witness(t, VertexBijection(image))) return true;
    } while (std::next_permutation(image.begin(), image.end()));
    return false;
}

}  // namespace

SequenceSet integer_sequences_satisfying_I_II(std::size_t n) {
    SequenceSet out;
    for_each_candidate(n, [&](const std::vector<std::int64_t>& seq) {
        auto d = to_sequence(seq);
        const auto report = check_condition_I(d);
        if (report.condition_I && report.condition_II) out.insert(std::move(d));
    });
    return out;
}

SequenceSet integer_sequences_satisfying_I(std::size_t n) {
    SequenceSet out;
    for_each_candidate(n, [&](const std::vector<std::int64_t>& seq) {
        auto d = to_sequence(seq);
        if (check_condition_I(d).condition_I) out.insert(std::move(d));
    });
    return out;
}

SequenceSet bruteforce_self_converse_sequences(std::size_t n, bool prune_by_score) {
    SequenceSet out;
    for (const Tournament& t : enumerate_tournaments(n)) {
        auto sorted = scores_of(t).sorted;
        if (out.contains(sorted)) continue;
        const bool self_converse =
            prune_by_score ? find_self_converse_witness(t, n).has_value() : has_witness_unpruned(t);
        if (self_converse) out.insert(std::move(sorted));
    }
    return out;
}

EplettReport verify_eplett(std::size_t n) {
    EplettReport report;
    report.n = n;
    report.from_bruteforce = bruteforce_self_converse_sequences(n);
    report.from_conditions = integer_sequences_satisfying_I_II(n);
    std::set_difference(report.from_conditions.begin(), report.from_conditions.end(),
                        report.from_bruteforce.begin(), report.from_bruteforce.end(),
                        std::back_inserter(report.only_in_conditions));
    std::set_difference(report.from_bruteforce.begin(), report.from_bruteforce.end(),
                        report.from_conditions.begin(), report.from_conditions.end(),
                        std::back_inserter(report.only_in_bruteforce));
    report.equal = report.only_in_conditions.empty() && report.only_in_bruteforce.empty();
    return report;
}

}  // namespace scoreseq
