#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// Deterministic source for randomized sweeps: a fixed seed fixes every
/// sampled state, so sweep outputs are reproducible byte for byte.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform_index(std::uint64_t bound) {  // in [0, bound)
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    double uniform_real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    /// Random distribution with strictly positive entries: integer weights
    /// in [1, resolution] normalized exactly.
    ProbVector distribution(std::size_t d, std::uint64_t resolution = 60) {
        std::vector<Rational> w(d);
        for (auto& x : w) x = Rational(1 + uniform_index(resolution));
        return ProbVector::normalized(std::move(w));
    }

    /// Random distribution allowing zero entries (at least one positive).
    ProbVector distribution_with_zeros(std::size_t d, std::uint64_t resolution = 60) {
        std::vector<Rational> w(d);
        bool any = false;
        for (auto& x : w) {
            std::uint64_t k = uniform_index(resolution + 1);
            any = any || k > 0;
            x = Rational(k);
        }
        if (!any) w[uniform_index(d)] = 1;
        return ProbVector::normalized(std::move(w));
    }

    /// Random thermal spectrum: strictly positive, non-increasing.
    ProbVector thermal_spectrum(std::size_t d, std::uint64_t resolution = 60) {
        std::vector<Rational> w(d);
        for (auto& x : w) x = Rational(1 + uniform_index(resolution));
        std::sort(w.begin(), w.end(), std::greater<>());
        return ProbVector::normalized(std::move(w));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tlat
