#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// Thermal reference for a d-level system: the stationary distribution every
/// allowed stochastic process must preserve.  Invariants: entries strictly
/// positive and non-increasing (energy levels are listed coldest first).
/// beta/energies are optional metadata; all algorithms consume gamma only.
class GibbsContext {
public:
    /// Primary constructor: the stationary distribution itself, exact.
    static GibbsContext from_gamma(ProbVector gamma) {
        validate(gamma);
        return GibbsContext(std::move(gamma), std::nullopt, std::nullopt);
    }

    /// Convenience constructor from inverse temperature and an energy ladder.
    /// beta = 0 yields the exact uniform distribution.  For beta > 0 the
    /// Boltzmann weights exp(-beta * E_i) are evaluated in binary64 and then
    /// embedded exactly as dyadic rationals before normalization: downstream
    /// arithmetic is exact with respect to the embedded spectrum.
    static GibbsContext from_beta_energies(const Rational& beta, std::vector<Rational> energies) {
        require(!energies.empty(), "invalid-context", "energy ladder must be non-empty");
        require(beta >= 0, "invalid-context", "inverse temperature must be >= 0");
        for (std::size_t i = 1; i < energies.size(); ++i)
            require(energies[i] >= energies[i - 1], "invalid-context",
                    "energies must be non-decreasing");
        ProbVector gamma = [&] {
            if (beta == 0) return ProbVector::uniform(energies.size());
            std::vector<Rational> w(energies.size());
            for (std::size_t i = 0; i < energies.size(); ++i) {
                double weight = std::exp(-to_double(beta) * to_double(energies[i]));
                require(weight > 0, "invalid-context",
                        "Boltzmann weight underflowed to zero for level " + std::to_string(i));
                w[i] = Rational(weight);  // exact dyadic value of the double
            }
            return ProbVector::normalized(std::move(w));
        }();
        validate(gamma);
        return GibbsContext(std::move(gamma), beta, std::move(energies));
    }

    static GibbsContext infinite_temperature(std::size_t d) {
        return GibbsContext(ProbVector::uniform(d), Rational(0), std::nullopt);
    }

    const ProbVector& gamma() const { return gamma_; }
    std::size_t dimension() const { return gamma_.size(); }
    const std::optional<Rational>& beta() const { return beta_; }
    const std::optional<std::vector<Rational>>& energies() const { return energies_; }

    bool is_uniform() const {
        for (std::size_t i = 1; i < gamma_.size(); ++i)
            if (gamma_[i] != gamma_[0]) return false;
        return true;
    }

    bool operator==(const GibbsContext& o) const { return gamma_ == o.gamma_; }

private:
    GibbsContext(ProbVector gamma, std::optional<Rational> beta,
                 std::optional<std::vector<Rational>> energies)
        : gamma_(std::move(gamma)), beta_(std::move(beta)), energies_(std::move(energies)) {}

    static void validate(const ProbVector& gamma) {
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            require(gamma[i] > 0, "invalid-context", "stationary distribution must be strictly positive");
            if (i > 0)
                require(gamma[i] <= gamma[i - 1], "invalid-context",
                        "stationary distribution must be non-increasing");
        }
    }

    ProbVector gamma_;
    std::optional<Rational> beta_;
    std::optional<std::vector<Rational>> energies_;
};

}  // namespace tlat
