#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/majorization.hpp"
#include "tlat/pl_curve.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// Entry-wise ratios p_i / gamma_i.  Sorting these non-increasingly is what
/// generalizes "sort the distribution" from the uniform fixed point to an
/// arbitrary one.
inline std::vector<Rational> gibbs_rescale(const ProbVector& p, const GibbsContext& ctx) {
    require(p.size() == ctx.dimension(), "dimension-mismatch",
            "state and stationary distribution have different dimensions");
    std::vector<Rational> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / ctx.gamma()[i];
    return out;
}

/// order[k] = original index occupying position k when the rescaled entries
/// are sorted non-increasingly.  Ties resolve by ascending original index, so
/// the ordering is a deterministic function of the state.
struct BetaOrdering {
    std::vector<std::size_t> order;

    bool operator==(const BetaOrdering& o) const { return order == o.order; }
    bool operator!=(const BetaOrdering& o) const { return order != o.order; }
};

inline BetaOrdering beta_order(const ProbVector& p, const GibbsContext& ctx) {
    std::vector<Rational> r = gibbs_rescale(p, ctx);
    std::vector<std::size_t> idx(p.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return r[a] > r[b]; });
    return BetaOrdering{std::move(idx)};
}

/// True when walking `values` along `order` never goes uphill.
inline bool sorts_nonincreasing(const std::vector<Rational>& values,
                                const BetaOrdering& ordering) {
    for (std::size_t k = 1; k < ordering.order.size(); ++k)
        if (values[ordering.order[k]] > values[ordering.order[k - 1]]) return false;
    return true;
}

/// An ordering that sorts both states' rescaled entries, if one exists.
/// Preference is p's own ordering, then q's; with ties this finds a common
/// ordering whenever the states' orderings are compatible at all.
inline std::optional<BetaOrdering> shared_beta_order(const ProbVector& p, const ProbVector& q,
                                                     const GibbsContext& ctx) {
    BetaOrdering op = beta_order(p, ctx);
    if (sorts_nonincreasing(gibbs_rescale(q, ctx), op)) return op;
    BetaOrdering oq = beta_order(q, ctx);
    if (sorts_nonincreasing(gibbs_rescale(p, ctx), oq)) return oq;
    return std::nullopt;
}

/// Concave envelope of the state relative to the thermal reference: piecewise
/// linear through (sum of gamma, sum of p) accumulated along the ordering.
/// At the uniform fixed point this is the majorization curve with the x axis
/// rescaled by 1/d.
inline PLCurve thermo_curve(const ProbVector& p, const GibbsContext& ctx) {
    BetaOrdering ord = beta_order(p, ctx);
    std::vector<CurvePoint> pts;
    pts.reserve(p.size() + 1);
    pts.push_back({Rational(0), Rational(0)});
    Rational x = 0, y = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        x += ctx.gamma()[ord.order[k]];
        y += p[ord.order[k]];
        pts.push_back({x, y});
    }
    return PLCurve::from_points(std::move(pts));
}

/// p can be carried to q by some stochastic map fixing gamma iff p's curve
/// nowhere dips below q's.
inline bool thermo_majorizes(const ProbVector& p, const ProbVector& q, const GibbsContext& ctx) {
    require(p.size() == q.size(), "dimension-mismatch", "states have different dimensions");
    return thermo_curve(p, ctx).dominates(thermo_curve(q, ctx));
}

/// Mutual convertibility: the two states share one curve (and hence differ at
/// most within degenerate ratio classes).
inline bool thermo_equivalent(const ProbVector& p, const ProbVector& q, const GibbsContext& ctx) {
    return thermo_majorizes(p, q, ctx) && thermo_majorizes(q, p, ctx);
}

/// Greatest lower bound among states sharing the common ordering: sample the
/// pointwise minimum of the two curves on the shared grid and difference it.
/// The minimum of two concave curves on one grid is concave, so the result is
/// ordered by the same ordering and the construction is closed.  Caution:
/// this is extremal only within the shared-ordering family.  When the curves
/// cross inside a grid segment, lower bounds living on other grids can be
/// incomparable to this one and the unrestricted order has no meet at all;
/// meet_candidates decides that question exhaustively.
inline ProbVector same_beta_meet(const ProbVector& p, const ProbVector& q,
                                 const GibbsContext& ctx) {
    require(p.size() == q.size(), "dimension-mismatch", "states have different dimensions");
    std::optional<BetaOrdering> shared = shared_beta_order(p, q, ctx);
    require(shared.has_value(), "different-beta-orderings",
            "states do not admit a common ordering; use the candidate search instead");
    const std::vector<std::size_t>& ord = shared->order;
    std::vector<Rational> out(p.size());
    Rational cp = 0, cq = 0, prev = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        cp += p[ord[k]];
        cq += q[ord[k]];
        Rational cur = std::min(cp, cq);
        out[ord[k]] = cur - prev;
        prev = cur;
    }
    return ProbVector::validated(std::move(out));
}

struct SameBetaJoinResult {
    ProbVector value;
    std::size_t iterations;  // flattening passes; always <= d - 1
};

/// Least upper bound for two states sharing a common ordering.  Seed with the
/// increments of the pointwise maximum of the curves, then repair concavity:
/// locate the first uphill step of the rescaled increments and average the
/// shortest window ending there whose left neighbour remains at least the
/// window's rescaled level.  Each pass removes at least one breakpoint.
/// Unlike the meet, this bound is least in the unrestricted order: the result
/// realizes the least concave majorant of the upper envelope, whose kinks
/// always lie on the shared grid, and every upper bound's curve dominates
/// that majorant.
inline SameBetaJoinResult same_beta_join_with_stats(const ProbVector& p, const ProbVector& q,
                                                    const GibbsContext& ctx) {
    require(p.size() == q.size(), "dimension-mismatch", "states have different dimensions");
    std::optional<BetaOrdering> shared = shared_beta_order(p, q, ctx);
    require(shared.has_value(), "different-beta-orderings",
            "states do not admit a common ordering; use the candidate search instead");
    const std::vector<std::size_t>& ord = shared->order;
    const std::size_t d = p.size();

    std::vector<Rational> g(d), w(d);  // increments and their gamma weights
    {
        Rational cp = 0, cq = 0, prev = 0;
        for (std::size_t k = 0; k < d; ++k) {
            cp += p[ord[k]];
            cq += q[ord[k]];
            Rational cur = std::max(cp, cq);
            g[k] = cur - prev;
            w[k] = ctx.gamma()[ord[k]];
            prev = cur;
        }
    }

    std::size_t iterations = 0;
    for (;;) {
        // First uphill step of the rescaled sequence g_k / w_k, 1-based index n.
        std::size_t n = 0;
        for (std::size_t k = 1; k < d; ++k) {
            if (g[k] * w[k - 1] > g[k - 1] * w[k]) {
                n = k + 1;
                break;
            }
        }
        if (n == 0) break;
        require(iterations < d, "internal-error", "flattening failed to terminate");
        ++iterations;

        // Largest window start m <= n-1 whose left neighbour stays above the
        // window level b = (sum g) / (sum w); m = 1 never needs a neighbour.
        Rational sg = g[n - 1], sw = w[n - 1];
        std::size_t m = 0;
        Rational bg, bw;
        for (std::size_t cand = n - 1; cand >= 1; --cand) {
            sg += g[cand - 1];
            sw += w[cand - 1];
            if (cand == 1 || g[cand - 2] * sw >= sg * w[cand - 2]) {
                m = cand;
                bg = sg;
                bw = sw;
                break;
            }
        }
        Rational b = bg / bw;
        for (std::size_t i = m - 1; i < n; ++i) g[i] = b * w[i];
    }

    std::vector<Rational> out(d);
    for (std::size_t k = 0; k < d; ++k) out[ord[k]] = g[k];
    return SameBetaJoinResult{ProbVector::validated(std::move(out)), iterations};
}

inline ProbVector same_beta_join(const ProbVector& p, const ProbVector& q,
                                 const GibbsContext& ctx) {
    return same_beta_join_with_stats(p, q, ctx).value;
}

}  // namespace tlat
