#include "scoreseq/model.hpp"

#include "scoreseq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scoreseq {

ScoreSequence::ScoreSequence(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("score sequence must have at least one entry");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].sign() < 0) {
            throw InvalidArgument("score " + entries_[i].to_string() + " at position " +
                                  std::to_string(i + 1) + " is negative");
        }
        if (i > 0 && entries_[i] < entries_[i - 1]) {
            throw InvalidArgument("score sequence is not non-decreasing at position " +
                                  std::to_string(i + 1));
        }
    }
}

bool ScoreSequence::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

std::vector<std::int64_t> ScoreSequence::to_integers() const {
    std::vector<std::int64_t> out;
    out.reserve(entries_.size());
    for (const auto& r : entries_) out.push_back(r.to_int64());
    return out;
}

NormalizedSequence normalize_scores(std::vector<Rational> entries) {
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return entries[a] < entries[b]; });
    std::vector<Rational> sorted;
    sorted.reserve(entries.size());
    for (std::size_t k : order) sorted.push_back(entries[k]);
    return {ScoreSequence(std::move(sorted)), std::move(order)};
}

VertexBijection::VertexBijection(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v]) {
            throw InvalidArgument("vertex bijection is not a permutation");
        }
        seen[v] = true;
    }
}

VertexBijection VertexBijection::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return VertexBijection(std::move(image));
}

VertexBijection VertexBijection::reversal(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = n - 1 - i;
    return VertexBijection(std::move(image));
}

bool VertexBijection::is_involution() const {
    for (std::size_t v = 0; v < image_.size(); ++v) {
        if (image_[image_[v]] != v) return false;
    }
    return true;
}

std::size_t VertexBijection::fixed_point_count() const {
    std::size_t count = 0;
    for (std::size_t v = 0; v < image_.size(); ++v) count += image_[v] == v;
    return count;
}

VertexBijection VertexBijection::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
    return VertexBijection(std::move(inv));
}

GeneralisedTournament::GeneralisedTournament(std::size_t n, std::vector<Rational> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n_ == 0) throw InvalidArgument("tournament must have at least one vertex");
    if (weights_.size() != n_ * n_) {
        throw InvalidArgument("weight matrix has " + std::to_string(weights_.size()) +
                              " entries, expected " + std::to_string(n_ * n_));
    }
    const Rational one(1);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!weight(i, i).is_zero()) {
            throw InvalidArgument("diagonal weight at vertex " + std::to_string(i + 1) +
                                  " is not zero");
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            const Rational& a = weight(i, j);
            const Rational& b = weight(j, i);
            if (a.sign() < 0 || a > one || b.sign() < 0 || b > one) {
                throw InvalidArgument("weight outside [0,1] between vertices " +
                                      std::to_string(i + 1) + " and " + std::to_string(j + 1));
            }
            if (a + b != one) {
                throw InvalidArgument("weights between vertices " + std::to_string(i + 1) +
                                      " and " + std::to_string(j + 1) + " do not sum to 1");
            }
        }
    }
}

bool GeneralisedTournament::is_integral() const {
    return std::all_of(weights_.begin(), weights_.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

Tournament::Tournament(std::size_t n) : n_(n), arcs_(n * n, 0) {
    if (n_ == 0) throw InvalidArgument("tournament must have at least one vertex");
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < i; ++j) arcs_[i * n_ + j] = 1;
    }
}

Tournament Tournament::from_generalised(const GeneralisedTournament& g) {
    if (!g.is_integral()) throw InvalidArgument("tournament weights must be 0 or 1");
    Tournament t(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            t.arcs_[i * t.n_ + j] = g.weight(i, j).is_zero() ? 0 : 1;
        }
    }
    return t;
}

void Tournament::orient(std::size_t winner, std::size_t loser) {
    if (winner == loser || winner >= n_ || loser >= n_) {
        throw InvalidArgument("cannot orient a loop or an out-of-range edge");
    }
    arcs_[winner * n_ + loser] = 1;
    arcs_[loser * n_ + winner] = 0;
}

std::vector<std::int64_t> Tournament::out_degrees() const {
    std::vector<std::int64_t> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out[i] += arcs_[i * n_ + j];
    }
    return out;
}

GeneralisedTournament Tournament::to_generalised() const {
    std::vector<Rational> weights;
    weights.reserve(arcs_.size());
    for (auto a : arcs_) weights.emplace_back(std::int64_t{a});
    return GeneralisedTournament(n_, std::move(weights));
}

ConditionReport check_condition_I(const ScoreSequence& d) {
    ConditionReport report;
    const std::size_t n = d.size();
    report.prefix_slacks.reserve(n);
    Rational prefix;
    bool ok = true;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        Rational slack = prefix - choose2(static_cast<std::int64_t>(k));
        const bool violated = slack.sign() < 0 || (k == n && !slack.is_zero());
        if (violated && ok) {
            ok = false;
            report.first_violation = k;
        }
        report.prefix_slacks.push_back(std::move(slack));
    }
    report.condition_I = ok;
    report.condition_II = check_condition_II(d);
    return report;
}

bool check_condition_II(const ScoreSequence& d) {
    const std::size_t n = d.size();
    const Rational target(static_cast<std::int64_t>(n) - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] + d[n - 1 - i] != target) return false;
    }
    return true;
}

namespace {

std::vector<Rational> row_sums(const GeneralisedTournament& g) {
    std::vector<Rational> labeled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) labeled[i] += g.weight(i, j);
    }
    return labeled;
}

Scores make_scores(std::vector<Rational> labeled) {
    std::vector<Rational> sorted = labeled;
    std::sort(sorted.begin(), sorted.end());
    return {std::move(labeled), ScoreSequence(std::move(sorted))};
}

}  // namespace

Scores scores_of(const GeneralisedTournament& g) { return make_scores(row_sums(g)); }

Scores scores_of(const Tournament& t) {
    std::vector<Rational> labeled;
    for (auto d : t.out_degrees()) labeled.emplace_back(d);
    return make_scores(std::move(labeled));
}

GeneralisedTournament converse(const GeneralisedTournament& g) {
    const std::size_t n = g.size();
    std::vector<Rational> weights(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) weights[i * n + j] = Rational(1) - g.weight(i, j);
        }
    }
    return GeneralisedTournament(n, std::move(weights));
}

Tournament converse(const Tournament& t) {
    Tournament out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t.beats(i, j)) {
                out.orient(j, i);
            } else {
                out.orient(i, j);
            }
        }
    }
    return out;
}

GeneralisedTournament relabel(const GeneralisedTournament& g, std::span<const std::size_t> order) {
    const std::size_t n = g.size();
    if (order.size() != n) throw DimensionMismatch("relabeling has the wrong length");
    std::vector<Rational> weights(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) weights[a * n + b] = g.weight(order[a], order[b]);
    }
    return GeneralisedTournament(n, std::move(weights));
}

namespace {

// Shared by the exact and the 0/1 representation. `complement_equal(i, j, k, l)`
// answers w(i,j) == 1 - w(k,l).
template <typename ComplementEqual>
bool witness_holds(std::size_t n, const VertexBijection& rho, ComplementEqual complement_equal) {
    if (rho.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && !complement_equal(i, j, rho(i), rho(j))) return false;
        }
    }
    return true;
}

template <typename ComplementEqual>
std::optional<VertexBijection> search_witness(std::size_t n, std::span<const Rational> labeled,
                                              ComplementEqual complement_equal) {
    const Rational top(static_cast<std::int64_t>(n) - 1);
    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (labeled[u] == top - labeled[v]) candidates[v].push_back(u);
        }
        if (candidates[v].empty()) return std::nullopt;
    }

    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> cursor(n, 0);
    std::size_t v = 0;
    while (true) {
        if (v == n) return VertexBijection(image);
        bool placed = false;
        while (cursor[v] < candidates[v].size()) {
            std::size_t u = candidates[v][cursor[v]++];
            if (used[u]) continue;
            bool consistent = true;
            for (std::size_t w = 0; w < v && consistent; ++w) {
                consistent = complement_equal(v, w, u, image[w]) &&
                             complement_equal(w, v, image[w], u);
            }
            if (!consistent) continue;
            image[v] = u;
            used[u] = true;
            placed = true;
            break;
        }
        if (placed) {
            ++v;
            continue;
        }
        cursor[v] = 0;
        if (v == 0) return std::nullopt;
        --v;
        used[image[v]] = false;
    }
}

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw ResourceLimit("witness search on " + std::to_string(n) +
                            " vertices exceeds the cap of " + std::to_string(cap));
    }
}

}  // namespace

bool is_self_converse_witness(const GeneralisedTournament& g, const VertexBijection& rho) {
    const Rational one(1);
    return witness_holds(g.size(), rho, [&](auto i, auto j, auto k, auto l) {
        return g.weight(i, j) == one - g.weight(k, l);
    });
}

bool is_self_converse_witness(const Tournament& t, const VertexBijection& rho) {
    return witness_holds(t.size(), rho, [&](auto i, auto j, auto k, auto l) {
        return t.weight(i, j) == 1 - t.weight(k, l);
    });
}

std::optional<VertexBijection> find_self_converse_witness(const GeneralisedTournament& g,
                                                          std::size_t cap) {
    check_cap(g.size(), cap);
    const Rational one(1);
    auto labeled = scores_of(g).labeled;
    return search_witness(g.size(), labeled, [&](auto i, auto j, auto k, auto l) {
        return g.weight(i, j) == one - g.weight(k, l);
    });
}

std::optional<VertexBijection> find_self_converse_witness(const Tournament& t, std::size_t cap) {
    check_cap(t.size(), cap);
    auto labeled = scores_of(t).labeled;
    return search_witness(t.size(), labeled, [&](auto i, auto j, auto k, auto l) {
        return t.weight(i, j) == 1 - t.weight(k, l);
    });
}

}  // namespace scoreseq
