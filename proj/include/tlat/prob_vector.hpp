#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// Finite classical probability distribution with exact rational entries.
/// Invariants: d >= 1, every entry >= 0, entries sum to exactly 1.
class ProbVector {
public:
    static ProbVector validated(std::vector<Rational> entries) {
        require(!entries.empty(), "invalid-distribution", "distribution must have dimension >= 1");
        Rational sum = 0;
        for (const Rational& e : entries) {
            require(e >= 0, "invalid-distribution", "negative probability entry " + to_string(e));
            sum += e;
        }
        require(sum == 1, "invalid-distribution",
                "probabilities sum to " + to_string(sum) + ", expected 1");
        return ProbVector(std::move(entries));
    }

    /// Rescales a nonnegative, not-all-zero weight vector to total mass 1.
    static ProbVector normalized(std::vector<Rational> weights) {
        require(!weights.empty(), "invalid-distribution", "distribution must have dimension >= 1");
        Rational sum = 0;
        for (const Rational& w : weights) {
            require(w >= 0, "invalid-distribution", "negative weight " + to_string(w));
            sum += w;
        }
        require(sum > 0, "invalid-distribution", "weights sum to zero");
        for (Rational& w : weights) w /= sum;
        return ProbVector(std::move(weights));
    }

    static ProbVector uniform(std::size_t d) {
        require(d >= 1, "invalid-distribution", "distribution must have dimension >= 1");
        return ProbVector(std::vector<Rational>(d, Rational(1, d)));
    }

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const ProbVector& other) const { return entries_ == other.entries_; }
    bool operator!=(const ProbVector& other) const { return !(*this == other); }

    /// Lexicographic order on entries; used only to report candidate sets
    /// deterministically, it has no thermodynamic meaning.
    bool operator<(const ProbVector& other) const {
        return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                            other.entries_.begin(), other.entries_.end());
    }

private:
    explicit ProbVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::vector<Rational> entries_;
};

inline std::string to_string(const ProbVector& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

/// Prefix sums s_k = sum_{i<k} v_i for k = 0..d; s_0 = 0, s_d = total mass.
inline std::vector<Rational> prefix_sums(const std::vector<Rational>& v) {
    std::vector<Rational> sums(v.size() + 1, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) sums[i + 1] = sums[i] + v[i];
    return sums;
}

}  // namespace tlat
