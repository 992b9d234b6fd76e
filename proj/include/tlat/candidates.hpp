#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/pl_curve.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"
#include "tlat/simplex.hpp"
#include "tlat/thermo.hpp"

namespace tlat {

enum class LatticeVerdict { unique, none };

/// Result of the exhaustive bound search.  `candidates` are pairwise
/// incomparable extremal bounds (least upper bounds per ordering cell for the
/// join side, greatest lower bounds for the meet side), deduplicated up to
/// mutual convertibility and sorted lexicographically.  Verdict `unique`
/// means the single candidate is provably the join (resp. meet); `none`
/// means the candidates themselves witness that no join (resp. meet) exists.
struct LatticeAnalysis {
    std::vector<ProbVector> candidates;
    std::vector<std::vector<std::size_t>> orderings;  // grid ordering per candidate
    LatticeVerdict verdict;
};

namespace detail {

/// Affine form a.y + c over the interior heights y_1..y_{d-1} of a curve on
/// a fixed grid; y_0 = 0 and y_d = 1 are substituted away.
struct AffineRow {
    std::vector<Rational> coeffs;  // size d-1
    Rational constant;

    explicit AffineRow(std::size_t d) : coeffs(d - 1, Rational(0)), constant(0) {}

    void add(std::size_t k, const Rational& c, std::size_t d) {
        if (k == 0) return;          // y_0 = 0
        if (k == d) {                // y_d = 1
            constant += c;
            return;
        }
        coeffs[k - 1] += c;
    }
};

/// Chord of the grid curve at abscissa u: picks the segment containing u and
/// interpolates linearly.  Exact; u must lie in (0, 1).
inline AffineRow chord_at(const std::vector<Rational>& grid, const Rational& u, std::size_t d) {
    AffineRow row(d);
    std::size_t k = 1;
    while (grid[k] < u) ++k;  // grid[d] == 1 >= u terminates the scan
    if (grid[k] == u) {
        row.add(k, Rational(1), d);
        return row;
    }
    Rational t = (u - grid[k - 1]) / (grid[k] - grid[k - 1]);
    row.add(k - 1, 1 - t, d);
    row.add(k, t, d);
    return row;
}

/// Feasible polytope of one ordering cell for the join search: curves on the
/// cell's grid that are monotone, concave and nowhere below the hull.
inline lp::LinearProgram cell_program(const std::vector<Rational>& grid,
                                      const std::vector<CurvePoint>& hull, std::size_t d) {
    lp::LinearProgram prog(d - 1);
    // monotone: y_k - y_{k-1} >= 0
    for (std::size_t k = 1; k <= d; ++k) {
        AffineRow row(d);
        row.add(k, Rational(1), d);
        row.add(k - 1, Rational(-1), d);
        prog.add_ge(std::move(row.coeffs), -row.constant);
    }
    // concave: slope_k >= slope_{k+1}
    for (std::size_t k = 1; k + 1 <= d; ++k) {
        Rational dk = grid[k] - grid[k - 1];
        Rational dk1 = grid[k + 1] - grid[k];
        AffineRow row(d);
        row.add(k, dk + dk1, d);
        row.add(k - 1, -dk1, d);
        row.add(k + 1, -dk, d);
        prog.add_ge(std::move(row.coeffs), -row.constant);
    }
    // dominate the hull at its interior kinks
    for (const CurvePoint& pt : hull) {
        if (pt.x == 0 || pt.x == 1) continue;
        AffineRow row = chord_at(grid, pt.x, d);
        prog.add_ge(std::move(row.coeffs), pt.y - row.constant);
    }
    return prog;
}

/// Lexicographically smallest point of the program's feasible region, found
/// by minimizing one coordinate at a time and pinning it.  Empty when the
/// region is empty.
inline std::optional<std::vector<Rational>> lex_min(lp::LinearProgram prog) {
    const std::size_t n = prog.variables();
    std::vector<Rational> point;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> obj(n, Rational(0));
        obj[k] = 1;
        lp::Solution sol = prog.minimize(obj);
        if (sol.status == lp::Status::infeasible) return std::nullopt;
        require(sol.status == lp::Status::optimal, "internal-error",
                "bounded cell program reported unbounded");
        std::vector<Rational> pin(n, Rational(0));
        pin[k] = 1;
        prog.add_eq(std::move(pin), sol.objective);
        point = std::move(sol.x);
    }
    return point;
}

inline ProbVector scatter(const std::vector<Rational>& heights,
                          const std::vector<std::size_t>& order, std::size_t d) {
    std::vector<Rational> entries(d);
    Rational prev = 0;
    for (std::size_t k = 1; k <= d; ++k) {
        Rational cur = (k == d) ? Rational(1) : heights[k - 1];
        entries[order[k - 1]] = cur - prev;
        prev = cur;
    }
    return ProbVector::validated(std::move(entries));
}

struct Candidate {
    ProbVector state;
    std::vector<std::size_t> ordering;
};

/// Collapse mutually convertible candidates to their lexicographically
/// greatest member (at the uniform fixed point this picks the classically
/// sorted representative), then keep only the extremal ones: minimal for the
/// join side, maximal for the meet side.
inline std::vector<Candidate> extremal(std::vector<Candidate> all, const GibbsContext& ctx,
                                       bool keep_minimal) {
    std::vector<Candidate> reps;
    for (Candidate& c : all) {
        bool merged = false;
        for (Candidate& r : reps) {
            if (thermo_equivalent(c.state, r.state, ctx)) {
                if (r.state < c.state) r = std::move(c);
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back(std::move(c));
    }
    std::vector<Candidate> out;
    for (const Candidate& r : reps) {
        bool extreme = true;
        for (const Candidate& other : reps) {
            if (&other == &r) continue;
            bool discard = keep_minimal ? thermo_majorizes(r.state, other.state, ctx)
                                        : thermo_majorizes(other.state, r.state, ctx);
            if (discard) {
                extreme = false;
                break;
            }
        }
        if (extreme) out.push_back(r);
    }
    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.state < b.state; });
    return out;
}

inline LatticeAnalysis package(std::vector<Candidate> survivors) {
    LatticeAnalysis res;
    res.verdict = survivors.size() == 1 ? LatticeVerdict::unique : LatticeVerdict::none;
    for (Candidate& c : survivors) {
        res.candidates.push_back(std::move(c.state));
        res.orderings.push_back(std::move(c.ordering));
    }
    return res;
}

}  // namespace detail

/// Least upper bounds of {p, q} across every ordering cell.  Within a cell
/// the candidate is the lexicographically smallest monotone concave grid
/// curve dominating the least concave majorant of both states' curves; such
/// a curve lies below every other member of its cell.  After reduction the
/// survivors decide the join question:
///
///  * two or more survivors: a join would be least within its own cell and
///    hence appear among the candidates, below every survivor; incomparable
///    survivors rule that out, so no join exists and the survivors witness
///    the gap.
///  * one survivor s: each cell is checked by minimizing, over the cell's
///    polytope, the curve value at every kink of s's curve.  If all minima
///    stay above s's curve, every upper bound dominates s and s is the join.
///    A failed check yields an upper bound incomparable to s (lex-minimality
///    forbids it sitting below s), which joins the candidate list and turns
///    the verdict to none.
///
/// Exact throughout; dimension is guarded to 6 (factorial cell count).
inline LatticeAnalysis join_candidates(const ProbVector& p, const ProbVector& q,
                                       const GibbsContext& ctx) {
    const std::size_t d = p.size();
    require(q.size() == d && ctx.dimension() == d, "dimension-mismatch",
            "states and context must share one dimension");
    require(d <= 6, "dimension-guard", "candidate search is limited to dimension 6");
    if (d == 1) return LatticeAnalysis{{p}, {{0}}, LatticeVerdict::unique};

    PLCurve fp = thermo_curve(p, ctx);
    PLCurve fq = thermo_curve(q, ctx);
    std::vector<CurvePoint> hull =
        curves::concave_majorant(curves::envelope_points(fp, fq, /*take_max=*/true));

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<detail::Candidate> found;
    do {
        std::vector<Rational> grid(d + 1, Rational(0));
        for (std::size_t k = 1; k <= d; ++k) grid[k] = grid[k - 1] + ctx.gamma()[order[k - 1]];
        auto heights = detail::lex_min(detail::cell_program(grid, hull, d));
        if (!heights) continue;
        found.push_back({detail::scatter(*heights, order, d), order});
    } while (std::next_permutation(order.begin(), order.end()));
    require(!found.empty(), "internal-error", "no ordering cell admitted an upper bound");

    std::vector<detail::Candidate> survivors =
        detail::extremal(std::move(found), ctx, /*keep_minimal=*/true);
    if (survivors.size() != 1) return detail::package(std::move(survivors));

    // Confirmation pass for the single survivor.
    const detail::Candidate& s = survivors.front();
    PLCurve fs = thermo_curve(s.state, ctx);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        std::vector<Rational> grid(d + 1, Rational(0));
        for (std::size_t k = 1; k <= d; ++k) grid[k] = grid[k - 1] + ctx.gamma()[order[k - 1]];
        lp::LinearProgram cell = detail::cell_program(grid, hull, d);
        for (const CurvePoint& kink : fs.points()) {
            if (kink.x == 0 || kink.x == 1) continue;
            detail::AffineRow row = detail::chord_at(grid, kink.x, d);
            lp::Solution sol = cell.minimize(row.coeffs);
            if (sol.status == lp::Status::infeasible) break;  // empty cell
            require(sol.status == lp::Status::optimal, "internal-error",
                    "bounded cell program reported unbounded");
            if (sol.objective + row.constant >= kink.y) continue;

            // Upper bound provably not above s: pin the gap and take the
            // cell's lexicographic minimum as the second witness.
            lp::LinearProgram pinned = cell;
            pinned.add_eq(row.coeffs, sol.objective);
            auto heights = detail::lex_min(std::move(pinned));
            require(heights.has_value(), "internal-error", "witness pin lost feasibility");
            survivors.push_back({detail::scatter(*heights, order, d), order});
            return detail::package(detail::extremal(std::move(survivors), ctx, true));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return detail::package(std::move(survivors));
}

/// Greatest lower bounds of {p, q} across every ordering cell.  The cell
/// optimum is closed-form: sample the lower envelope of the two curves at the
/// cell's grid.  The sampled curve is concave (minimum of concave curves) and
/// dominates every lower bound ordered by the cell, so the reduction argument
/// is self-contained: one survivor is the meet, several incomparable
/// survivors exclude a meet without further search.
inline LatticeAnalysis meet_candidates(const ProbVector& p, const ProbVector& q,
                                       const GibbsContext& ctx) {
    const std::size_t d = p.size();
    require(q.size() == d && ctx.dimension() == d, "dimension-mismatch",
            "states and context must share one dimension");
    require(d <= 6, "dimension-guard", "candidate search is limited to dimension 6");
    if (d == 1) return LatticeAnalysis{{p}, {{0}}, LatticeVerdict::unique};

    PLCurve envelope = curves::lower_envelope(thermo_curve(p, ctx), thermo_curve(q, ctx));

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<detail::Candidate> found;
    do {
        std::vector<Rational> heights(d - 1);
        Rational x = 0;
        for (std::size_t k = 1; k < d; ++k) {
            x += ctx.gamma()[order[k - 1]];
            heights[k - 1] = envelope.eval(x);
        }
        found.push_back({detail::scatter(heights, order, d), order});
    } while (std::next_permutation(order.begin(), order.end()));

    return detail::package(detail::extremal(std::move(found), ctx, /*keep_minimal=*/false));
}

}  // namespace tlat
