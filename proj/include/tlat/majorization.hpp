#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/pl_curve.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// A distribution together with the permutation that sorts it.  All
/// infinite-temperature lattice operations act on these representatives:
/// reordering is free there, so each orbit is identified with its
/// non-increasing member.
struct CanonicalClass {
    ProbVector representative;
    /// representative[k] == original[permutation[k]]; ties keep ascending
    /// original index, so the witness is unique.
    std::vector<std::size_t> permutation;
};

inline CanonicalClass canonicalize(const ProbVector& p) {
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
    std::vector<Rational> sorted(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) sorted[k] = p[perm[k]];
    return CanonicalClass{ProbVector::validated(std::move(sorted)), std::move(perm)};
}

namespace detail {

inline std::vector<Rational> sorted_desc(const ProbVector& p) {
    std::vector<Rational> v = p.entries();
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

inline void require_same_dimension(const ProbVector& p, const ProbVector& q) {
    require(p.size() == q.size(), "dimension-mismatch",
            "distributions have dimensions " + std::to_string(p.size()) + " and " +
                std::to_string(q.size()));
}

}  // namespace detail

/// p majorizes q iff every partial sum of p's sorted entries weakly exceeds
/// q's.  Exact; dimension must match.
inline bool majorizes(const ProbVector& p, const ProbVector& q) {
    detail::require_same_dimension(p, q);
    std::vector<Rational> ps = detail::sorted_desc(p);
    std::vector<Rational> qs = detail::sorted_desc(q);
    Rational cp = 0, cq = 0;
    for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
        cp += ps[k];
        cq += qs[k];
        if (cp < cq) return false;
    }
    return true;  // full sums are both 1
}

/// Concave curve through (k, sum of the k largest entries), k = 0..d.
inline PLCurve majorization_curve(const ProbVector& p) {
    std::vector<Rational> s = detail::sorted_desc(p);
    std::vector<CurvePoint> pts;
    pts.reserve(s.size() + 1);
    Rational cum = 0;
    pts.push_back({0, 0});
    for (std::size_t k = 0; k < s.size(); ++k) {
        cum += s[k];
        pts.push_back({Rational(k + 1), cum});
    }
    return PLCurve::from_points(std::move(pts));
}

/// Greatest lower bound of the majorization lattice: entry k is the
/// increment of min(P_k, Q_k) over the sorted prefix sums.  The minimum of
/// two concave curves is concave, so the result is already non-increasing.
inline ProbVector meet(const ProbVector& p, const ProbVector& q) {
    detail::require_same_dimension(p, q);
    std::vector<Rational> cp = prefix_sums(detail::sorted_desc(p));
    std::vector<Rational> cq = prefix_sums(detail::sorted_desc(q));
    std::vector<Rational> l(p.size());
    for (std::size_t k = 1; k <= p.size(); ++k)
        l[k - 1] = std::min(cp[k], cq[k]) - std::min(cp[k - 1], cq[k - 1]);
    return ProbVector::validated(std::move(l));
}

struct JoinResult {
    ProbVector value;
    /// Number of flattening passes applied to the seed vector; at most d-1.
    std::size_t iterations;
};

/// Least upper bound of the majorization lattice.  Seed with increments of
/// max(P_k, Q_k); the seed can fail to be sorted, so repeatedly average the
/// shortest offending window [m..n] whose left neighbour can absorb it:
///   n: first index with g_n > g_{n-1};
///   m: greatest index <= n-1 with g_{m-1} >= avg(g_m..g_n), m=1 always valid.
/// Each pass flattens the window to its average.  A sorted seed is returned
/// unchanged with zero iterations.
inline JoinResult join_with_stats(const ProbVector& p, const ProbVector& q) {
    detail::require_same_dimension(p, q);
    std::vector<Rational> cp = prefix_sums(detail::sorted_desc(p));
    std::vector<Rational> cq = prefix_sums(detail::sorted_desc(q));
    const std::size_t d = p.size();
    std::vector<Rational> g(d);
    for (std::size_t k = 1; k <= d; ++k)
        g[k - 1] = std::max(cp[k], cq[k]) - std::max(cp[k - 1], cq[k - 1]);

    std::size_t iterations = 0;
    for (;;) {
        std::size_t n = 0;  // 1-based index of first ascent, 0 if sorted
        for (std::size_t i = 1; i < d; ++i) {
            if (g[i] > g[i - 1]) {
                n = i + 1;
                break;
            }
        }
        if (n == 0) break;
        require(iterations < d, "internal-error", "join flattening failed to terminate");

        // Scan m = n-1 down to 1; g_0 is treated as +infinity so m=1 always
        // satisfies the test.
        std::size_t m = 1;
        Rational window;  // sum g_m..g_n for the accepted m
        Rational sum = g[n - 1];
        for (std::size_t cand = n - 1; cand >= 1; --cand) {
            sum += g[cand - 1];
            Rational avg = sum / Rational(n - cand + 1);
            if (cand == 1 || g[cand - 2] >= avg) {
                m = cand;
                window = sum;
                break;
            }
        }
        Rational avg = window / Rational(n - m + 1);
        for (std::size_t i = m; i <= n; ++i) g[i - 1] = avg;
        ++iterations;
    }
    return JoinResult{ProbVector::validated(std::move(g)), iterations};
}

inline ProbVector join(const ProbVector& p, const ProbVector& q) {
    return join_with_stats(p, q).value;
}

/// Order on density-operator spectra: identical to majorization of the
/// eigenvalue distributions (a unital channel between the states exists iff
/// this holds).
inline bool spectrum_majorizes(const ProbVector& spectrum_rho, const ProbVector& spectrum_sigma) {
    return majorizes(spectrum_rho, spectrum_sigma);
}

}  // namespace tlat
