#pragma once

#include "scoreseq/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Vertex labels are 0-based everywhere in the C++ API. The JSON formats use
// 1-based labels; the conversion happens in json_io.

namespace scoreseq {

/// Non-decreasing list of non-negative rationals, n >= 1.
class ScoreSequence {
public:
    /// Strict constructor: throws InvalidArgument unless the input is non-empty and sorted with a non-negative head.
    explicit ScoreSequence(std::vector<Rational> entries);

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_integral() const;
    /// Entries as integers; throws NonIntegral if any entry is fractional.
    std::vector<std::int64_t> to_integers() const;

    friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;
    friend auto operator<=>(const ScoreSequence& a, const ScoreSequence& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<Rational> entries_;
};

/// Result of sorting an arbitrary list: order[k] is the input position of sorted entry k.
struct NormalizedSequence {
    ScoreSequence sequence;
    std::vector<std::size_t> order;
};

/// Stable sort into a ScoreSequence, keeping the applied permutation.
NormalizedSequence normalize_scores(std::vector<Rational> entries);

class VertexBijection {
public:
    /// Throws InvalidArgument unless image is a permutation of 0..n-1.
    explicit VertexBijection(std::vector<std::size_t> image);

    static VertexBijection identity(std::size_t n);
    /// i -> n-1-i, the pairing of sorted labels used for self-converse witnesses.
    static VertexBijection reversal(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t v) const { return image_[v]; }
    const std::vector<std::size_t>& image() const { return image_; }

    bool is_involution() const;
    std::size_t fixed_point_count() const;
    VertexBijection inverse() const;

    friend bool operator==(const VertexBijection&, const VertexBijection&) = default;

private:
    std::vector<std::size_t> image_;
};

/// n x n exact weight matrix with zero diagonal and w(i,j) + w(j,i) = 1 off the diagonal.
class GeneralisedTournament {
public:
    /// Row-major weights; throws InvalidArgument if any invariant fails.
    GeneralisedTournament(std::size_t n, std::vector<Rational> weights);

    std::size_t size() const { return n_; }
    const Rational& weight(std::size_t i, std::size_t j) const { return weights_[i * n_ + j]; }
    const std::vector<Rational>& weights() const { return weights_; }

    /// True when every off-diagonal weight is 0 or 1.
    bool is_integral() const;

    friend bool operator==(const GeneralisedTournament&, const GeneralisedTournament&) = default;

private:
    std::size_t n_;
    std::vector<Rational> weights_;
};

/// Orientation of the complete graph; a generalised tournament with 0/1 weights.
class Tournament {
public:
    /// The transitive tournament in which vertex i beats exactly the vertices below it,
    /// so its labeled scores are 0, 1, ..., n-1.
    explicit Tournament(std::size_t n);

    /// Throws InvalidArgument if g has a fractional weight.
    static Tournament from_generalised(const GeneralisedTournament& g);

    std::size_t size() const { return n_; }
    bool beats(std::size_t i, std::size_t j) const { return arcs_[i * n_ + j] != 0; }
    int weight(std::size_t i, std::size_t j) const { return arcs_[i * n_ + j]; }

    /// Orients the edge {winner, loser} as winner -> loser.
    void orient(std::size_t winner, std::size_t loser);

    std::vector<std::int64_t> out_degrees() const;
    GeneralisedTournament to_generalised() const;

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> arcs_;
};

struct ConditionReport {
    std::vector<Rational> prefix_slacks;  ///< s_k = d_1 + ... + d_k - C(k,2)
    bool condition_I = false;
    bool condition_II = false;
    std::optional<std::size_t> first_violation;  ///< 1-based k of the first failing prefix
};

/// Prefix test of Condition I (sorted input makes prefixes sufficient); also fills condition_II.
ConditionReport check_condition_I(const ScoreSequence& d);

/// d_i + d_{n+1-i} = n - 1 for every i.
bool check_condition_II(const ScoreSequence& d);

struct Scores {
    std::vector<Rational> labeled;
    ScoreSequence sorted;
};

Scores scores_of(const GeneralisedTournament& g);
Scores scores_of(const Tournament& t);

GeneralisedTournament converse(const GeneralisedTournament& g);
Tournament converse(const Tournament& t);

/// Relabels so that new vertex k is old vertex order[k].
GeneralisedTournament relabel(const GeneralisedTournament& g, std::span<const std::size_t> order);

/// w(i,j) == 1 - w(rho(i), rho(j)) for every ordered pair i != j.
bool is_self_converse_witness(const GeneralisedTournament& g, const VertexBijection& rho);
bool is_self_converse_witness(const Tournament& t, const VertexBijection& rho);

inline constexpr std::size_t kDefaultWitnessSearchCap = 10;

/*
 * Backtracking search for an isomorphism between g and its converse.
 *
 * Vertices are assigned in label order; the candidates for rho(v) are the
 * unused vertices whose score is n-1-score(v), tried lowest label first. The
 * first witness in that lexicographic order is returned. Throws ResourceLimit
 * when g has more than `cap` vertices.
 */
std::optional<VertexBijection> find_self_converse_witness(
    const GeneralisedTournament& g, std::size_t cap = kDefaultWitnessSearchCap);
std::optional<VertexBijection> find_self_converse_witness(
    const Tournament& t, std::size_t cap = kDefaultWitnessSearchCap);

}  // namespace scoreseq
