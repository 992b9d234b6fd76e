#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"
#include "tlat/simplex.hpp"

namespace tlat {

/// Outcome of the direct search for a stochastic matrix carrying p to q while
/// fixing the reference distribution.  When feasible, `matrix` holds an exact
/// column-stochastic witness L with L p = q and L gamma = gamma.
struct TransitionWitness {
    bool feasible;
    std::vector<std::vector<Rational>> matrix;  // row-major, empty when infeasible
};

/// Decides existence of the transition by linear programming over the d^2
/// matrix entries.  This is the brute-force counterpart of the curve test:
/// O(d^2) variables against O(d) curve comparisons, used to cross-validate.
/// Guarded to d <= 8 to keep exact pivoting quick.
inline TransitionWitness gp_transition(const ProbVector& p, const ProbVector& q,
                                       const GibbsContext& ctx) {
    const std::size_t d = p.size();
    require(q.size() == d && ctx.dimension() == d, "dimension-mismatch",
            "states and context must share one dimension");
    require(d <= 8, "dimension-guard", "matrix search is limited to dimension 8");

    // Variable v(i,j) is the probability of jumping from level j to level i.
    auto v = [d](std::size_t i, std::size_t j) { return i * d + j; };
    lp::LinearProgram program(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(d * d, Rational(0));
        for (std::size_t i = 0; i < d; ++i) row[v(i, j)] = 1;
        program.add_eq(std::move(row), Rational(1));
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> row(d * d, Rational(0));
        for (std::size_t j = 0; j < d; ++j) row[v(i, j)] = p[j];
        program.add_eq(std::move(row), q[i]);
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> row(d * d, Rational(0));
        for (std::size_t j = 0; j < d; ++j) row[v(i, j)] = ctx.gamma()[j];
        program.add_eq(std::move(row), ctx.gamma()[i]);
    }

    lp::Solution sol = program.feasible();
    if (sol.status != lp::Status::optimal) return TransitionWitness{false, {}};
    std::vector<std::vector<Rational>> matrix(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) matrix[i][j] = sol.x[v(i, j)];
    return TransitionWitness{true, std::move(matrix)};
}

/// Uniform fixed point: the witness is doubly stochastic and existence is
/// exactly classical majorization.
inline TransitionWitness bistochastic_transition(const ProbVector& p, const ProbVector& q) {
    return gp_transition(p, q, GibbsContext::infinite_temperature(p.size()));
}

}  // namespace tlat
