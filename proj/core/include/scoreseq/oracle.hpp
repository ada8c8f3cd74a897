#pragma once

#include "scoreseq/model.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

namespace scoreseq {

inline constexpr std::size_t kMaxEnumerationVertices = 6;

/*
 * Every labeled tournament on n vertices, once each. Tournament number b
 * orients the e-th edge of the list (0,1), (0,2), ..., (n-2,n-1) as i -> j
 * when bit e of b is set and j -> i otherwise.
 *
 *     for (const Tournament& t : enumerate_tournaments(4)) { ... }
 */
class TournamentRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Tournament;
        using difference_type = std::ptrdiff_t;
        using pointer = const Tournament*;
        using reference = Tournament;

        iterator() = default;
        Tournament operator*() const;
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++index_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        friend class TournamentRange;
        iterator(std::size_t n, std::uint64_t index) : n_(n), index_(index) {}
        std::size_t n_ = 0;
        std::uint64_t index_ = 0;
    };

    explicit TournamentRange(std::size_t n);

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count_}; }
    std::uint64_t size() const { return count_; }

    /// The tournament with orientation vector `index`.
    Tournament at(std::uint64_t index) const;

private:
    std::size_t n_;
    std::uint64_t count_;
};

/// Throws ResourceLimit for n > 6 and InvalidArgument for n == 0.
TournamentRange enumerate_tournaments(std::size_t n);

using SequenceSet = std::set<ScoreSequence>;

/// All non-decreasing integer sequences of length n passing Conditions I and II.
SequenceSet integer_sequences_satisfying_I_II(std::size_t n);

/// Same enumeration with Condition I only (the domain of landau_realize).
SequenceSet integer_sequences_satisfying_I(std::size_t n);

/*
 * Sorted score sequences of the n-vertex tournaments that are isomorphic to
 * their converse, found by enumerating every tournament and searching for a
 * witness. `prune_by_score` restricts candidate images to vertices of
 * complementary score; without it all n! bijections are tried.
 */
SequenceSet bruteforce_self_converse_sequences(std::size_t n, bool prune_by_score = true);

struct EplettReport {
    std::size_t n = 0;
    bool equal = false;
    SequenceSet from_conditions;
    SequenceSet from_bruteforce;
    std::vector<ScoreSequence> only_in_conditions;
    std::vector<ScoreSequence> only_in_bruteforce;
};

EplettReport verify_eplett(std::size_t n);

}  // namespace scoreseq
