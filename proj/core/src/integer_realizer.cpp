#include "scoreseq/integer_realizer.hpp"

#include "scoreseq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace scoreseq {

bool satisfies_condition_I(std::span<const std::int64_t> scores) {
    std::vector<std::int64_t> sorted(scores.begin(), scores.end());
    std::sort(sorted.begin(), sorted.end());
    std::int64_t prefix = 0;
    const auto n = static_cast<std::int64_t>(sorted.size());
    for (std::int64_t k = 1; k <= n; ++k) {
        prefix += sorted[k - 1];
        const std::int64_t need = k * (k - 1) / 2;
        if (prefix < need) return false;
        if (k == n && prefix != need) return false;
    }
    return true;
}

Tournament landau_realize(const ScoreSequence& d) {
    for (const auto& r : d) {
        if (!r.is_integer()) throw NonIntegral("score " + r.to_string() + " is not an integer");
    }
    const auto scores = d.to_integers();
    return landau_realize(std::span<const std::int64_t>(scores));
}

Tournament landau_realize(std::span<const std::int64_t> labeled) {
    const std::size_t n = labeled.size();
    if (n == 0) throw InvalidArgument("score sequence must have at least one entry");
    if (std::any_of(labeled.begin(), labeled.end(), [](auto s) { return s < 0; }) ||
        !satisfies_condition_I(labeled)) {
        throw ConditionViolation("scores do not satisfy Condition I");
    }

    Tournament t(n);
    std::vector<std::int64_t> residual(labeled.begin(), labeled.end());
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});

    while (remaining.size() > 1) {
        // Largest residual first, lowest label among ties.
        std::stable_sort(remaining.begin(), remaining.end(), [&](std::size_t a, std::size_t b) {
            return residual[a] > residual[b];
        });
        const std::size_t v = remaining.front();
        remaining.erase(remaining.begin());

        const auto k = static_cast<std::int64_t>(remaining.size()) + 1;
        const std::int64_t losses = k - 1 - residual[v];
        if (losses < 0) throw InternalError("greedy tournament construction lost feasibility");
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            const std::size_t u = remaining[idx];
            if (static_cast<std::int64_t>(idx) < losses) {
                t.orient(u, v);
                --residual[u];
            } else {
                t.orient(v, u);
            }
        }

        std::vector<std::int64_t> rest;
        rest.reserve(remaining.size());
        for (auto u : remaining) rest.push_back(residual[u]);
        if (std::any_of(rest.begin(), rest.end(), [](auto s) { return s < 0; }) ||
            !satisfies_condition_I(rest)) {
            throw InternalError("greedy tournament construction lost feasibility");
        }
    }

    const auto degrees = t.out_degrees();
    if (!std::equal(degrees.begin(), degrees.end(), labeled.begin())) {
        throw InternalError("constructed tournament misses its target scores");
    }
    return t;
}

namespace {

class OrbitSearch {
public:
    OrbitSearch(std::span<const std::int64_t> target, const VertexBijection& rho,
                SymmetricSearchStats& stats)
        : n_(target.size()),
          target_(target.begin(), target.end()),
          rho_(rho),
          stats_(stats),
          dir_(n_ * n_, kUnknown),
          out_(n_, 0),
          free_(n_, n_ - 1) {
        for (std::size_t v = 0; v < n_; ++v) dir_[v * n_ + v] = 0;
    }

    bool run() {
        std::vector<std::size_t> all(n_);
        std::iota(all.begin(), all.end(), std::size_t{0});
        queue_ = all;
        if (!propagate()) return false;
        return search();
    }

    Tournament result() const {
        Tournament t(n_);
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = u + 1; v < n_; ++v) {
                if (dir_[u * n_ + v] == 1) {
                    t.orient(u, v);
                } else {
                    t.orient(v, u);
                }
            }
        }
        return t;
    }

private:
    static constexpr std::int8_t kUnknown = -1;

    std::int64_t need(std::size_t v) const { return target_[v] - out_[v]; }

    // Orients u -> v together with its orbit partner rho(v) -> rho(u).
    bool assign(std::size_t u, std::size_t v) {
        if (!set_arc(u, v)) return false;
        return set_arc(rho_(v), rho_(u));
    }

    bool set_arc(std::size_t u, std::size_t v) {
        const std::int8_t current = dir_[u * n_ + v];
        if (current == 1) return true;
        if (current == 0) return false;
        dir_[u * n_ + v] = 1;
        dir_[v * n_ + u] = 0;
        ++out_[u];
        --free_[u];
        --free_[v];
        trail_.push_back({u, v});
        queue_.push_back(u);
        queue_.push_back(v);
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [u, v] = trail_.back();
            trail_.pop_back();
            dir_[u * n_ + v] = kUnknown;
            dir_[v * n_ + u] = kUnknown;
            --out_[u];
            ++free_[u];
            ++free_[v];
        }
    }

    bool propagate() {
        while (!queue_.empty()) {
            const std::size_t x = queue_.back();
            queue_.pop_back();
            const std::int64_t r = need(x);
            const auto f = static_cast<std::int64_t>(free_[x]);
            if (r < 0 || r > f) {
                queue_.clear();
                return false;
            }
            if (f == 0 || (r != 0 && r != f)) continue;
            const bool win_all = r == f;
            for (std::size_t y = 0; y < n_; ++y) {
                if (dir_[x * n_ + y] != kUnknown) continue;
                const bool ok = win_all ? assign(x, y) : assign(y, x);
                if (!ok) {
                    queue_.clear();
                    return false;
                }
            }
        }
        return true;
    }

    bool search() {
        ++stats_.nodes;
        std::size_t best = n_;
        std::int64_t best_slack = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (free_[v] == 0) continue;
            const std::int64_t r = need(v);
            const std::int64_t slack = std::min(r, static_cast<std::int64_t>(free_[v]) - r);
            if (best == n_ || slack < best_slack) {
                best = v;
                best_slack = slack;
            }
        }
        if (best == n_) return true;

        const std::size_t x = best;
        std::size_t y = 0;
        while (dir_[x * n_ + y] != kUnknown) ++y;

        // Give the arc first to the endpoint with the larger fraction of its
        // undecided edges still needed.
        const bool x_first = need(x) * static_cast<std::int64_t>(free_[y]) >=
                             need(y) * static_cast<std::int64_t>(free_[x]);
        for (int attempt = 0; attempt < 2; ++attempt) {
            const bool x_wins = (attempt == 0) == x_first;
            const std::size_t mark = trail_.size();
            const bool ok = x_wins ? assign(x, y) : assign(y, x);
            if (ok && propagate() && search()) return true;
            queue_.clear();
            undo_to(mark);
            ++stats_.backtracks;
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::int64_t> target_;
    const VertexBijection& rho_;
    SymmetricSearchStats& stats_;
    std::vector<std::int8_t> dir_;
    std::vector<std::int64_t> out_;
    std::vector<std::size_t> free_;
    std::vector<std::pair<std::size_t, std::size_t>> trail_;
    std::vector<std::size_t> queue_;
};

// Returns nothing when a peeling step finds no residual satisfying Condition I.
std::optional<Tournament> pair_peel(std::span<const std::int64_t> c, const VertexBijection& rho) {
    const std::size_t n = c.size();
    Tournament t(n);
    std::vector<std::int64_t> residual(c.begin(), c.end());
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});

    auto by_residual = [&](std::size_t a, std::size_t b) {
        return residual[a] != residual[b] ? residual[a] < residual[b] : a < b;
    };

    while (true) {
        std::sort(remaining.begin(), remaining.end(), by_residual);
        const auto it = std::find_if(remaining.begin(), remaining.end(),
                                     [&](std::size_t v) { return rho(v) != v; });
        if (it == remaining.end()) break;
        const std::size_t u = *it;
        const std::size_t w = rho(u);

        std::vector<std::size_t> rest;
        for (auto v : remaining) {
            if (v != u && v != w) rest.push_back(v);
        }

        std::vector<char> wins(n, 0);
        std::vector<std::int64_t> next;
        bool u_beats_w = false;
        bool found = false;
        for (bool beats : {false, true}) {
            const std::int64_t k = residual[u] - (beats ? 1 : 0);
            if (k < 0 || k > static_cast<std::int64_t>(rest.size())) continue;
            std::fill(wins.begin(), wins.end(), 0);
            for (std::int64_t i = 0; i < k; ++i) wins[rest[static_cast<std::size_t>(i)]] = 1;
            next.clear();
            bool nonnegative = true;
            for (auto v : rest) {
                // v keeps the arc against u unless u beats it, and gains one
                // against w when u beats rho(v).
                const std::int64_t r = residual[v] - (wins[v] ? 0 : 1) - (wins[rho(v)] ? 1 : 0);
                nonnegative = nonnegative && r >= 0;
                next.push_back(r);
            }
            if (nonnegative && satisfies_condition_I(next)) {
                u_beats_w = beats;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;

        for (std::size_t i = 0; i < rest.size(); ++i) {
            const std::size_t v = rest[i];
            if (wins[v]) {
                t.orient(u, v);
                t.orient(rho(v), w);
            } else {
                t.orient(v, u);
                t.orient(w, rho(v));
            }
            residual[v] = next[i];
        }
        if (u_beats_w) {
            t.orient(u, w);
        } else {
            t.orient(w, u);
        }
        remaining = std::move(rest);
    }
    return t;
}

void check_symmetric_preconditions(std::span<const std::int64_t> c, const VertexBijection& rho) {
    const std::size_t n = c.size();
    if (n == 0) throw InvalidArgument("score sequence must have at least one entry");
    if (rho.size() != n) throw ConditionViolation("witness and score list differ in length");
    if (!rho.is_involution()) throw ConditionViolation("witness is not an involution");
    if (rho.fixed_point_count() > 1) throw ConditionViolation("witness has more than one fixed point");
    const auto top = static_cast<std::int64_t>(n) - 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (c[v] < 0 || c[v] + c[rho(v)] != top) {
            throw ConditionViolation("score of vertex " + std::to_string(v + 1) +
                                     " and its witness image do not sum to N-1");
        }
    }
    if (!satisfies_condition_I(c)) throw ConditionViolation("scores do not satisfy Condition I");
}

}  // namespace

Tournament symmetric_realize(std::span<const std::int64_t> c, const VertexBijection& rho,
                             std::size_t cap, SymmetricSearchStats* stats, SymmetricMethod method) {
    check_symmetric_preconditions(c, rho);
    if (c.size() > cap) {
        throw ResourceLimit("symmetric realization on " + std::to_string(c.size()) +
                            " vertices exceeds the cap of " + std::to_string(cap));
    }

    SymmetricSearchStats local;
    SymmetricSearchStats& st = stats ? *stats : local;
    std::optional<Tournament> peeled;
    if (method == SymmetricMethod::pairing_then_search) peeled = pair_peel(c, rho);
    st.solved_by_pairing = peeled.has_value();
    if (!peeled) {
        OrbitSearch search(c, rho, st);
        if (!search.run()) {
            throw SearchExhausted("no self-converse tournament found for the given scores and witness");
        }
        peeled = search.result();
    }
    Tournament t = std::move(*peeled);

    const auto degrees = t.out_degrees();
    if (!std::equal(degrees.begin(), degrees.end(), c.begin()) ||
        !is_self_converse_witness(t, rho)) {
        throw InternalError("symmetric realization violates its postcondition");
    }
    return t;
}

}  // namespace scoreseq
