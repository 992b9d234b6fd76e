#pragma once

#include <utility>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// A pair of states together with the thermal reference they live under.
struct StatePair {
    ProbVector p;
    ProbVector q;
    GibbsContext context;
};

/// Two-level pair with no least upper bound for ground occupation
/// gamma0 in (1/2, 1).  p concentrates weight on the cold level, q on the
/// hot one; their minimal upper bounds sit in different ordering cells.
/// The pair is incomparable precisely when gamma0 exceeds 2 - sqrt(2), so
/// smaller parameters produce a comparable pair whose join trivially exists;
/// construction is still performed verbatim.
inline StatePair two_level_no_join(const Rational& gamma0) {
    require(gamma0 > Rational(1, 2) && gamma0 < 1, "parameter-range",
            "ground occupation must lie in (1/2, 1)");
    GibbsContext ctx = GibbsContext::from_gamma(ProbVector::validated({gamma0, 1 - gamma0}));
    ProbVector p = ProbVector::validated({(1 + gamma0) / 2, (1 - gamma0) / 2});
    ProbVector q = ProbVector::validated({(2 * gamma0 - 1) / gamma0, (1 - gamma0) / gamma0});
    return StatePair{std::move(p), std::move(q), std::move(ctx)};
}

/// Two-level pair with no greatest lower bound, same parameter range.  The
/// two cell-wise greatest lower bounds straddle the crossing of the curves
/// and are incomparable.
inline StatePair two_level_no_meet(const Rational& gamma0) {
    require(gamma0 > Rational(1, 2) && gamma0 < 1, "parameter-range",
            "ground occupation must lie in (1/2, 1)");
    GibbsContext ctx = GibbsContext::from_gamma(ProbVector::validated({gamma0, 1 - gamma0}));
    ProbVector p = ProbVector::validated({(3 + gamma0) / 4, (1 - gamma0) / 4});
    Rational q0 = (gamma0 * gamma0 + 2 * gamma0 - 1) / (4 * gamma0);
    ProbVector q = ProbVector::validated({q0, 1 - q0});
    return StatePair{std::move(p), std::move(q), std::move(ctx)};
}

/// Join gap embedded in a d-level spectrum, d >= 3: both states live on the
/// two hottest levels.  Writing A, B, C for the last three reference weights,
/// p puts (1 + max(B/A, B/(B+C)))/2 on level d-2 and q is chosen from the
/// open interval that makes the pair incomparable with crossing curves.  The
/// interval is nonempty iff A > B; B > C is required so the two hot levels
/// are distinguishable.
inline StatePair top_levels_no_join(const GibbsContext& ctx) {
    const std::size_t d = ctx.dimension();
    require(d >= 3, "parameter-range", "construction needs at least three levels");
    const Rational& a = ctx.gamma()[d - 3];
    const Rational& b = ctx.gamma()[d - 2];
    const Rational& c = ctx.gamma()[d - 1];
    require(b > c, "construction-inapplicable",
            "the two hottest levels must have distinct weights");

    Rational ratio = std::max(Rational(b / a), Rational(b / (b + c)));
    Rational p_top = (1 + ratio) / 2;
    Rational lo = (c / b) * p_top;
    Rational hi = std::min(Rational(c / b), Rational(1 - (b / c) * (1 - p_top)));
    require(lo < hi, "construction-inapplicable",
            "spectrum admits no incomparable pair on the two hottest levels");
    Rational q_bottom = (lo + hi) / 2;  // this is 1 - q_top

    std::vector<Rational> pe(d, Rational(0)), qe(d, Rational(0));
    pe[d - 2] = p_top;
    pe[d - 1] = 1 - p_top;
    qe[d - 2] = 1 - q_bottom;
    qe[d - 1] = q_bottom;
    return StatePair{ProbVector::validated(std::move(pe)), ProbVector::validated(std::move(qe)),
                     ctx};
}

}  // namespace tlat
