#include "scoreseq/approximation.hpp"

#include "scoreseq/errors.hpp"

#include <algorithm>
#include <string>

namespace scoreseq {

namespace {

// Simplest rational in (lo, hi), hi possibly infinite. Continued-fraction
// descent of the Stern-Brocot tree.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
    const BigInt whole = lo.floor() + 1;
    if (!hi || Rational(whole, 1) < *hi) return Rational(whole, 1);

    // No integer strictly inside, so both ends lie in [f, f+1] with f = floor(lo).
    const Rational f(lo.floor(), 1);
    const Rational lo_frac = lo - f;
    const Rational hi_frac = *hi - f;
    // x in (lo_frac, hi_frac) iff 1/x in (1/hi_frac, 1/lo_frac).
    std::optional<Rational> upper;
    if (!lo_frac.is_zero()) upper = Rational(1) / lo_frac;
    const Rational inner = simplest_between(Rational(1) / hi_frac, upper);
    return f + Rational(1) / inner;
}

}  // namespace

Rational choose_rational_in_interval(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) {
        throw EmptyInterval("interval (" + lo.to_string() + ", " + hi.to_string() + ") is empty");
    }
    return simplest_between(lo, hi);
}

Approximation approximate(const ScoreSequence& d, std::uint64_t m) {
    if (m == 0) throw InvalidArgument("approximation parameter m must be positive");
    const auto report = check_condition_I(d);
    if (!report.condition_I) throw ConditionViolation("scores do not satisfy Condition I");
    if (!report.condition_II) throw ConditionViolation("scores do not satisfy Condition II");

    const std::size_t n = d.size();
    const Rational mid = Rational(static_cast<std::int64_t>(n) - 1) / Rational(2);
    const Rational step = Rational(1) / Rational(static_cast<std::int64_t>(m));

    ApproximationTrace trace;
    trace.m = m;
    for (std::size_t k = n / 2; k >= 1; --k) {
        if (d[k - 1] < mid) {
            trace.n_prime = k;
            break;
        }
    }
    if (!trace.n_prime) return {d, std::move(trace)};

    const std::size_t np = *trace.n_prime;
    std::vector<Rational> out = d.entries();
    trace.intervals.resize(np);
    trace.picks.resize(np);
    Rational ceiling = mid;
    for (std::size_t k = np; k >= 1; --k) {
        OpenInterval interval{d[k - 1], std::min(ceiling, d[k - 1] + step)};
        Rational pick = choose_rational_in_interval(interval.lo, interval.hi);
        out[k - 1] = pick;
        ceiling = pick;
        trace.intervals[k - 1] = std::move(interval);
        trace.picks[k - 1] = std::move(pick);
    }
    for (std::size_t k = np + 1; k <= (n + 1) / 2; ++k) out[k - 1] = mid;
    for (std::size_t i = (n + 1) / 2 + 1; i <= n; ++i) {
        out[i - 1] = Rational(static_cast<std::int64_t>(n) - 1) - out[n - i];
    }

    ScoreSequence approximated(std::move(out));
    const auto check = check_condition_I(approximated);
    if (!check.condition_I || !check.condition_II) {
        throw InternalError("approximation broke Condition I or II");
    }
    return {std::move(approximated), std::move(trace)};
}

RealRealization realize_real(const ScoreSequence& d, std::uint64_t m,
                             const RealizeOptions& options) {
    auto approx = approximate(d, m);
    auto realization = realize_self_converse_rational(approx.sequence, options);
    return {std::move(realization.tournament), std::move(realization.witness),
            std::move(approx.sequence)};
}

}  // namespace scoreseq
