#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/rational.hpp"

namespace tlat::lp {

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status;
    std::vector<Rational> x;  // variable values; empty when infeasible
    Rational objective;       // c.x when optimal
};

/// Two-phase primal simplex over exact rationals in standard form:
/// minimize c.x subject to A x = b, x >= 0.  Bland's rule on both the
/// entering and leaving choice guarantees termination; all pivots are exact,
/// so answers are decisions, not approximations.  Intended for the small
/// systems that arise here (tens of variables); no sparsity, no scaling.
class StandardForm {
public:
    StandardForm(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : a_(std::move(a)), b_(std::move(b)) {
        require(a_.size() == b_.size(), "internal-error", "row count mismatch");
        n_ = a_.empty() ? 0 : a_[0].size();
        for (const auto& row : a_)
            require(row.size() == n_, "internal-error", "ragged constraint matrix");
    }

    /// Pure feasibility: phase one only.
    Solution feasible() const { return run(nullptr); }

    Solution minimize(const std::vector<Rational>& c) const {
        require(c.size() == n_, "internal-error", "objective size mismatch");
        return run(&c);
    }

private:
    // Tableau rows have width ncols+1 with the right-hand side last.  The
    // cost row holds reduced costs and, in the last slot, minus the current
    // objective.
    struct Tableau {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> cost;
        std::vector<std::size_t> basis;
        std::size_t ncols;

        void pivot(std::size_t r, std::size_t s) {
            Rational inv = 1 / rows[r][s];
            for (auto& v : rows[r]) v *= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][s] == 0) continue;
                Rational f = rows[i][s];
                for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
            }
            if (cost[s] != 0) {
                Rational f = cost[s];
                for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= f * rows[r][j];
            }
            basis[r] = s;
        }

        // Bland: smallest eligible entering column below `limit`, then the
        // leaving row with the minimal ratio, ties by smallest basic index.
        // Returns optimal / unbounded.
        Status iterate(std::size_t limit) {
            for (;;) {
                std::size_t s = limit;
                for (std::size_t j = 0; j < limit; ++j) {
                    if (cost[j] < 0) {
                        s = j;
                        break;
                    }
                }
                if (s == limit) return Status::optimal;

                std::size_t r = rows.size();
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (rows[i][s] <= 0) continue;
                    if (r == rows.size()) {
                        r = i;
                        continue;
                    }
                    Rational lhs = rows[i][ncols] * rows[r][s];
                    Rational rhs = rows[r][ncols] * rows[i][s];
                    if (lhs < rhs || (lhs == rhs && basis[i] < basis[r])) r = i;
                }
                if (r == rows.size()) return Status::unbounded;
                pivot(r, s);
            }
        }
    };

    Solution run(const std::vector<Rational>* c) const {
        const std::size_t m = a_.size();
        Tableau t;
        t.ncols = n_ + m;  // artificials occupy columns n_..n_+m-1
        t.rows.assign(m, std::vector<Rational>(t.ncols + 1, Rational(0)));
        t.basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            bool flip = b_[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t.rows[i][j] = flip ? -a_[i][j] : a_[i][j];
            t.rows[i][n_ + i] = 1;
            t.rows[i][t.ncols] = flip ? -b_[i] : b_[i];
            t.basis[i] = n_ + i;
        }

        // Phase one: minimize the sum of artificials.
        t.cost.assign(t.ncols + 1, Rational(0));
        for (std::size_t j = n_; j < t.ncols; ++j) t.cost[j] = 1;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j <= t.ncols; ++j) t.cost[j] -= t.rows[i][j];
        Status st = t.iterate(t.ncols);
        require(st == Status::optimal, "internal-error", "phase one cannot be unbounded");
        if (-t.cost[t.ncols] > 0) return Solution{Status::infeasible, {}, Rational(0)};

        // Drive artificials out of the basis; rows that cannot pivot on an
        // original column are redundant and dropped.
        for (std::size_t i = t.rows.size(); i-- > 0;) {
            if (t.basis[i] < n_) continue;
            std::size_t s = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (t.rows[i][j] != 0) {
                    s = j;
                    break;
                }
            }
            if (s < n_) {
                t.pivot(i, s);
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }

        if (c != nullptr) {
            // Phase two over the original columns only.
            t.cost.assign(t.ncols + 1, Rational(0));
            for (std::size_t j = 0; j < n_; ++j) t.cost[j] = (*c)[j];
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                if (t.cost[t.basis[i]] == 0) continue;
                Rational f = t.cost[t.basis[i]];
                for (std::size_t j = 0; j <= t.ncols; ++j) t.cost[j] -= f * t.rows[i][j];
            }
            st = t.iterate(n_);
            if (st == Status::unbounded) return Solution{Status::unbounded, {}, Rational(0)};
        }

        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (t.basis[i] < n_) x[t.basis[i]] = t.rows[i][t.ncols];
        Rational obj = 0;
        if (c != nullptr)
            for (std::size_t j = 0; j < n_; ++j) obj += (*c)[j] * x[j];
        return Solution{Status::optimal, std::move(x), std::move(obj)};
    }

    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::size_t n_;
};

/// Constraint-list front end: n decision variables (implicitly >= 0),
/// equality and inequality rows.  Inequalities get one slack each at build
/// time; solutions are reported over the decision variables only.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t n) : n_(n) {}

    void add_eq(std::vector<Rational> coeffs, Rational rhs) { add(std::move(coeffs), std::move(rhs), 0); }
    void add_ge(std::vector<Rational> coeffs, Rational rhs) { add(std::move(coeffs), std::move(rhs), -1); }
    void add_le(std::vector<Rational> coeffs, Rational rhs) { add(std::move(coeffs), std::move(rhs), 1); }

    Solution feasible() const { return assemble().feasible(); }

    Solution minimize(const std::vector<Rational>& objective) const {
        require(objective.size() == n_, "internal-error", "objective size mismatch");
        std::vector<Rational> c(n_ + slacks_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) c[j] = objective[j];
        Solution s = assemble().minimize(c);
        if (s.status == Status::optimal) s.x.resize(n_);
        return s;
    }

    std::size_t variables() const { return n_; }

private:
    struct Row {
        std::vector<Rational> coeffs;
        Rational rhs;
        int slack;  // 0 equality, -1 surplus (>=), +1 slack (<=)
    };

    void add(std::vector<Rational> coeffs, Rational rhs, int slack) {
        require(coeffs.size() == n_, "internal-error", "constraint size mismatch");
        rows_.push_back(Row{std::move(coeffs), std::move(rhs), slack});
        if (slack != 0) ++slacks_;
    }

    StandardForm assemble() const {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        a.reserve(rows_.size());
        std::size_t next_slack = n_;
        for (const Row& row : rows_) {
            std::vector<Rational> full(n_ + slacks_, Rational(0));
            for (std::size_t j = 0; j < n_; ++j) full[j] = row.coeffs[j];
            if (row.slack != 0) full[next_slack++] = Rational(row.slack);
            a.push_back(std::move(full));
            b.push_back(row.rhs);
        }
        return StandardForm(std::move(a), std::move(b));
    }

    std::size_t n_;
    std::size_t slacks_ = 0;
    std::vector<Row> rows_;
};

}  // namespace tlat::lp
