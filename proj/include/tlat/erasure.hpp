#pragma once

#include <utility>
#include <vector>

#include "tlat/candidates.hpp"
#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/majorization.hpp"
#include "tlat/monotones.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/qubit.hpp"
#include "tlat/thermo.hpp"

namespace tlat {

/// History erasure: evolve two possible pasts p and q to one common state,
/// optimally the greatest one (the meet).  Future creation is the dual
/// problem under order reversal: evolve one state so that either of p, q
/// remains reachable, optimally from the least such state (the join).

/// One monotone evaluated at both inputs and at every reported optimum;
/// `at_optima` is parallel to the report's `optima`.
struct MonotoneCost {
    Monotone monotone;
    double at_p;
    double at_q;
    std::vector<double> at_optima;
};

/// The monotone set reported by default: the entropy gap (a monotone at
/// infinite temperature only, informational otherwise) and the divergences.
inline std::vector<Monotone> default_monotones() {
    return {Monotone::entropy_gap(), Monotone::relative_entropy(), Monotone::renyi(0.5),
            Monotone::renyi(2.0)};
}

struct ClassicalErasureReport {
    // unique: `optima` holds the meet (resp. join).  none: the extremal
    // candidates, each an optimal erasure (resp. creation) state in its own
    // right, with no single best one ("multiple-candidates").
    LatticeVerdict verdict;
    std::vector<ProbVector> optima;
    std::vector<std::vector<std::size_t>> orderings;  // grid ordering per optimum
    std::vector<MonotoneCost> costs;
};

struct QubitErasureReport {
    QubitState optimal;
    std::vector<MonotoneCost> costs;  // at_optima has one entry
};

namespace detail {

inline std::vector<MonotoneCost> classical_costs(const ProbVector& p, const ProbVector& q,
                                                 const GibbsContext& ctx,
                                                 const std::vector<ProbVector>& optima) {
    std::vector<MonotoneCost> out;
    for (const Monotone& m : default_monotones()) {
        MonotoneCost row{m, evaluate_monotone(m, p, ctx), evaluate_monotone(m, q, ctx), {}};
        for (const ProbVector& s : optima) row.at_optima.push_back(evaluate_monotone(m, s, ctx));
        out.push_back(std::move(row));
    }
    return out;
}

inline ClassicalErasureReport package_erasure(const ProbVector& p, const ProbVector& q,
                                              const GibbsContext& ctx, LatticeVerdict verdict,
                                              std::vector<ProbVector> optima,
                                              std::vector<std::vector<std::size_t>> orderings) {
    auto costs = classical_costs(p, q, ctx, optima);
    return ClassicalErasureReport{verdict, std::move(optima), std::move(orderings),
                                  std::move(costs)};
}

inline std::vector<std::size_t> order_of(const ProbVector& s, const GibbsContext& ctx) {
    return beta_order(s, ctx).order;
}

}  // namespace detail

/// Optimal states for erasing which of p, q the system came from.  Comparable
/// inputs need no evolution at all: the dominated one is already a common
/// future, at zero cost.  At infinite temperature the classical meet is the
/// unique optimum in any dimension.  At finite temperature the candidate
/// search decides; a shared beta-ordering does NOT settle the verdict, since
/// the family meet can fail to be a global lower-bound optimum, so the
/// exhaustive search runs whenever the inputs are incomparable.
inline ClassicalErasureReport erase_history(const ProbVector& p, const ProbVector& q,
                                            const GibbsContext& ctx) {
    require(p.size() == q.size() && p.size() == ctx.dimension(),
            "dimension-mismatch", "states and context must share a dimension");
    if (thermo_majorizes(p, q, ctx))
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {q},
                                       {detail::order_of(q, ctx)});
    if (thermo_majorizes(q, p, ctx))
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {p},
                                       {detail::order_of(p, ctx)});
    if (ctx.is_uniform()) {
        ProbVector m = meet(p, q);
        auto ord = detail::order_of(m, ctx);
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {m}, {std::move(ord)});
    }
    LatticeAnalysis analysis = meet_candidates(p, q, ctx);
    return detail::package_erasure(p, q, ctx, analysis.verdict, std::move(analysis.candidates),
                                   std::move(analysis.orderings));
}

/// Optimal states from which both p and q can still be created, dual to
/// erase_history with the order reversed.  Here a shared beta-ordering does
/// settle the question: the family join is least among all upper bounds, so
/// it is returned directly in any dimension.
inline ClassicalErasureReport create_futures(const ProbVector& p, const ProbVector& q,
                                             const GibbsContext& ctx) {
    require(p.size() == q.size() && p.size() == ctx.dimension(),
            "dimension-mismatch", "states and context must share a dimension");
    if (thermo_majorizes(p, q, ctx))
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {p},
                                       {detail::order_of(p, ctx)});
    if (thermo_majorizes(q, p, ctx))
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {q},
                                       {detail::order_of(q, ctx)});
    if (ctx.is_uniform()) {
        ProbVector j = join(p, q);
        auto ord = detail::order_of(j, ctx);
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {j}, {std::move(ord)});
    }
    if (auto shared = shared_beta_order(p, q, ctx)) {
        ProbVector j = same_beta_join(p, q, ctx);
        return detail::package_erasure(p, q, ctx, LatticeVerdict::unique, {j}, {shared->order});
    }
    LatticeAnalysis analysis = join_candidates(p, q, ctx);
    return detail::package_erasure(p, q, ctx, analysis.verdict, std::move(analysis.candidates),
                                   std::move(analysis.orderings));
}

namespace detail {

inline std::vector<MonotoneCost> qubit_costs(const QubitState& a, const QubitState& b,
                                             const QubitGibbs& g, const QubitState& optimal) {
    std::vector<MonotoneCost> out;
    for (const Monotone& m : default_monotones()) {
        out.push_back(MonotoneCost{m, evaluate_monotone(m, a, g), evaluate_monotone(m, b, g),
                                   {evaluate_monotone(m, optimal, g)}});
    }
    return out;
}

}  // namespace detail

/// Qubit history erasure: the meet always exists and may carry coherence
/// (x > 0) even when both inputs are incoherent, lowering the cost below
/// every classical candidate.  Whether that advantage persists beyond d = 2
/// is open; nothing here speaks to higher dimensions.  Requires zeta < 1 so
/// the divergence costs stay finite.
inline QubitErasureReport erase_history(const QubitState& a, const QubitState& b,
                                        const QubitGibbs& g) {
    require(!g.ground(), "unsupported-context", "erasure reports require zeta < 1");
    QubitState m = qubit_meet(a, b, g);
    return QubitErasureReport{m, detail::qubit_costs(a, b, g, m)};
}

inline QubitErasureReport create_futures(const QubitState& a, const QubitState& b,
                                         const QubitGibbs& g) {
    require(!g.ground(), "unsupported-context", "erasure reports require zeta < 1");
    QubitState j = qubit_join(a, b, g);
    return QubitErasureReport{j, detail::qubit_costs(a, b, g, j)};
}

/// Both sides of the entropy supermodularity inequality at infinite
/// temperature: lhs = H(p ∧ q) - (H(p)+H(q))/2, the average entropy paid to
/// erase the history, and rhs = (H(p)+H(q))/2 - H(p ∨ q), the average
/// entropy gained by creating the futures.  Supermodularity says lhs >= rhs:
/// erasing history is never cheaper than creating futures.
struct AsymmetryGap {
    double lhs;
    double rhs;
};

inline AsymmetryGap asymmetry_gap(const ProbVector& p, const ProbVector& q) {
    require(p.size() == q.size(), "dimension-mismatch",
            "states must share a dimension");
    double avg = (shannon_entropy(p) + shannon_entropy(q)) / 2.0;
    return AsymmetryGap{shannon_entropy(meet(p, q)) - avg, avg - shannon_entropy(join(p, q))};
}

}  // namespace tlat
