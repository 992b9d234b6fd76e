#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "tlat/error.hpp"
#include "tlat/gibbs_context.hpp"
#include "tlat/prob_vector.hpp"
#include "tlat/qubit.hpp"
#include "tlat/rational.hpp"

namespace tlat {

/// All entropic quantities are in nats, with the convention 0 ln 0 = 0.

inline double shannon_entropy(const ProbVector& p) {
    double h = 0.0;
    for (const Rational& r : p.entries()) {
        double v = to_double(r);
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

/// ln d - H(p): entropy recast so it shrinks toward the bottom of the order.
/// Contractive under doubly stochastic maps only, i.e. at infinite
/// temperature; at finite temperature it is not a monotone.
inline double entropy_gap(const ProbVector& p) {
    return std::log(static_cast<double>(p.size())) - shannon_entropy(p);
}

/// KL divergence from the thermal state, the nonequilibrium free energy up
/// to the kT factor (which is deliberately not applied: values are in nats).
inline double relative_entropy(const ProbVector& p, const GibbsContext& ctx) {
    require(p.size() == ctx.dimension(), "dimension-mismatch",
            "state and context dimensions differ");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double v = to_double(p.entries()[i]);
        if (v > 0.0) d += v * std::log(v / to_double(ctx.gamma().entries()[i]));
    }
    return d;
}

/// Renyi divergence from the thermal state of order alpha > 0, alpha != 1:
/// log(sum_i p_i^alpha gamma_i^(1-alpha)) / (alpha - 1).
inline double renyi_divergence(const ProbVector& p, const GibbsContext& ctx, double alpha) {
    require(p.size() == ctx.dimension(), "dimension-mismatch",
            "state and context dimensions differ");
    require(std::isfinite(alpha) && alpha > 0.0 && alpha != 1.0, "parameter-range",
            "Renyi order must be positive and distinct from 1");
    double trace = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double v = to_double(p.entries()[i]);
        if (v > 0.0) trace += std::pow(v, alpha) * std::pow(to_double(ctx.gamma().entries()[i]), 1.0 - alpha);
    }
    return std::log(trace) / (alpha - 1.0);
}

/// Von Neumann entropy from the Bloch eigenvalues (1 +- |r|) / 2.
inline double qubit_entropy(const QubitState& s) {
    double r = std::min(s.norm(), 1.0);
    double h = 0.0;
    for (double mu : {(1.0 + r) / 2.0, (1.0 - r) / 2.0}) {
        if (mu > 0.0) h -= mu * std::log(mu);
    }
    return h;
}

inline double qubit_entropy_gap(const QubitState& s) {
    return std::log(2.0) - qubit_entropy(s);
}

/// S(rho || gamma) = tr(rho ln rho) - tr(rho ln gamma).  The second trace is
/// diagonal: (1+z)/2 ln((1+zeta)/2) + (1-z)/2 ln((1-zeta)/2).  Infinite at
/// zero temperature unless the state is the ground state itself.
inline double qubit_relative_entropy(const QubitState& s, const QubitGibbs& g) {
    double zz = g.zeta();
    if (g.ground()) {
        if (s.z >= 1.0 - 1e-15) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    double tr_ln_gamma = (1.0 + s.z) / 2.0 * std::log((1.0 + zz) / 2.0) +
                         (1.0 - s.z) / 2.0 * std::log((1.0 - zz) / 2.0);
    return -qubit_entropy(s) - tr_ln_gamma;
}

/// Petz-type Renyi divergence log(tr(rho^alpha gamma^(1-alpha))) / (alpha-1).
/// With rho's eigenbasis tilted by angle theta from the reference axis,
/// tr(P_s^rho P_t^gamma) = (1 + s t cos theta) / 2, so the trace is a
/// four-term sum over the sign pairs.
inline double qubit_renyi_divergence(const QubitState& s, const QubitGibbs& g, double alpha) {
    require(std::isfinite(alpha) && alpha > 0.0 && alpha != 1.0, "parameter-range",
            "Renyi order must be positive and distinct from 1");
    double r = std::min(s.norm(), 1.0);
    double cos_theta = r > 0.0 ? s.z / s.norm() : 0.0;
    double mu[2] = {(1.0 + r) / 2.0, (1.0 - r) / 2.0};
    double gam[2] = {(1.0 + g.zeta()) / 2.0, (1.0 - g.zeta()) / 2.0};
    double sign[2] = {1.0, -1.0};
    double trace = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            double overlap = (1.0 + sign[a] * sign[b] * cos_theta) / 2.0;
            double w = overlap * std::pow(mu[a], alpha);
            if (w == 0.0) continue;
            if (gam[b] == 0.0) {
                // 0^(1-alpha): vanishes for alpha < 1, diverges for alpha > 1
                if (alpha < 1.0) continue;
                return std::numeric_limits<double>::infinity();
            }
            trace += w * std::pow(gam[b], 1.0 - alpha);
        }
    }
    return std::log(trace) / (alpha - 1.0);
}

/// A named monotone: a function of (state, context) that never increases
/// along the thermodynamic order.  The entropy gap qualifies only at
/// infinite temperature; the divergences are monotone at every temperature.
enum class MonotoneKind { entropy_gap, relative_entropy, renyi_divergence };

struct Monotone {
    MonotoneKind kind;
    double alpha;  // Renyi order; meaningful only for renyi_divergence

    static Monotone entropy_gap() { return {MonotoneKind::entropy_gap, 0.0}; }
    static Monotone relative_entropy() { return {MonotoneKind::relative_entropy, 0.0}; }
    static Monotone renyi(double alpha) {
        require(std::isfinite(alpha) && alpha > 0.0 && alpha != 1.0, "parameter-range",
                "Renyi order must be positive and distinct from 1");
        return {MonotoneKind::renyi_divergence, alpha};
    }

    std::string name() const {
        switch (kind) {
            case MonotoneKind::entropy_gap: return "entropy-gap";
            case MonotoneKind::relative_entropy: return "relative-entropy";
            case MonotoneKind::renyi_divergence: {
                std::string a = std::to_string(alpha);
                a.erase(a.find_last_not_of('0') + 1);
                if (!a.empty() && a.back() == '.') a.pop_back();
                return "renyi-" + a;
            }
        }
        return "";
    }
};

inline double evaluate_monotone(const Monotone& m, const ProbVector& p, const GibbsContext& ctx) {
    switch (m.kind) {
        case MonotoneKind::entropy_gap: return entropy_gap(p);
        case MonotoneKind::relative_entropy: return relative_entropy(p, ctx);
        case MonotoneKind::renyi_divergence: return renyi_divergence(p, ctx, m.alpha);
    }
    throw DomainError("internal-error", "unknown monotone kind");
}

inline double evaluate_monotone(const Monotone& m, const QubitState& s, const QubitGibbs& g) {
    switch (m.kind) {
        case MonotoneKind::entropy_gap: return qubit_entropy_gap(s);
        case MonotoneKind::relative_entropy: return qubit_relative_entropy(s, g);
        case MonotoneKind::renyi_divergence: return qubit_renyi_divergence(s, g, m.alpha);
    }
    throw DomainError("internal-error", "unknown monotone kind");
}

}  // namespace tlat
