#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "tlat/error.hpp"

namespace tlat {

inline constexpr double kQubitTol = 1e-9;

/// Qubit state as a Bloch vector; |r| <= 1 up to a small validation slack so
/// states assembled from floating arithmetic round-trip.
struct QubitState {
    double x, y, z;

    static QubitState from_bloch(double x, double y, double z) {
        double n2 = x * x + y * y + z * z;
        require(std::isfinite(n2), "invalid-state", "Bloch components must be finite");
        require(n2 <= 1.0 + 1e-12, "invalid-state",
                "Bloch vector lies outside the unit ball: |r|^2 = " + std::to_string(n2));
        return QubitState{x, y, z};
    }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Thermal reference for a qubit, parametrized by its Bloch z-component
/// zeta in [0, 1]: zeta = 0 is infinite temperature, zeta = 1 the ground
/// state (zero temperature).
class QubitGibbs {
public:
    static QubitGibbs from_zeta(double zeta) {
        require(std::isfinite(zeta) && zeta >= 0.0 && zeta <= 1.0, "invalid-context",
                "reference polarization must lie in [0, 1]");
        return QubitGibbs(zeta);
    }

    /// From inverse temperature and level splitting: zeta = 2/Z - 1 with
    /// Z = 1 + exp(-beta * gap).  beta may be infinite (zero temperature).
    static QubitGibbs from_beta_energy(double beta, double gap) {
        require(beta >= 0.0 && !std::isnan(beta), "invalid-context",
                "inverse temperature must be >= 0");
        require(std::isfinite(gap) && gap >= 0.0, "invalid-context",
                "level splitting must be >= 0");
        if (gap == 0.0) return QubitGibbs(0.0);
        if (std::isinf(beta)) return QubitGibbs(1.0);
        double zz = 2.0 / (1.0 + std::exp(-beta * gap)) - 1.0;
        return QubitGibbs(zz);
    }

    double zeta() const { return zeta_; }
    bool ground() const { return zeta_ == 1.0; }

private:
    explicit QubitGibbs(double zeta) : zeta_(zeta) {}
    double zeta_;
};

/// States equivalent under rotation about the reference axis share one
/// representative in the xz half-plane with x >= 0.
inline QubitState canonical_rep(const QubitState& s) {
    return QubitState{std::hypot(s.x, s.y), 0.0, s.z};
}

/// delta = sqrt((z - zeta)^2 + (x^2 + y^2)(1 - zeta^2)): the anisotropic
/// distance from the reference whose level sets bound the reachable sets.
inline double thermal_distance(const QubitState& s, const QubitGibbs& g) {
    double zz = g.zeta();
    double planar = s.x * s.x + s.y * s.y;
    return std::sqrt((s.z - zz) * (s.z - zz) + planar * (1.0 - zz * zz));
}

/// The two monotone radii R+- = delta +- zeta z.  Both shrink under any
/// process fixing the reference, and for zeta < 1 their joint decrease is
/// also sufficient for a process to exist.
struct RadiusPair {
    double plus;
    double minus;
};

inline RadiusPair monotone_radii(const QubitState& s, const QubitGibbs& g) {
    double d = thermal_distance(s, g);
    return RadiusPair{d + g.zeta() * s.z, d - g.zeta() * s.z};
}

/// Zero-temperature monotone: radius of the circle through s centered on the
/// z axis and passing through the ground state pole (0,0,1).  Defined as 0 at
/// the pole itself.
inline double ground_radius(const QubitState& s) {
    double planar = s.x * s.x + s.y * s.y;
    double gap = 1.0 - s.z;
    if (gap <= 0.0) return 0.0;
    return (planar + gap * gap) / (2.0 * gap);
}

/// Existence of a reference-fixing process from `from` to `to`.  For
/// zeta < 1 this is the pair of radius inequalities; at zeta = 1 the
/// conditions are monotone approach to the pole and shrinking ground radius.
inline bool gp_exists(const QubitState& from, const QubitState& to, const QubitGibbs& g,
                      double tol = kQubitTol) {
    if (g.ground()) {
        return to.z >= from.z - tol && ground_radius(from) >= ground_radius(to) - tol;
    }
    RadiusPair a = monotone_radii(from, g);
    RadiusPair b = monotone_radii(to, g);
    return a.plus >= b.plus - tol && a.minus >= b.minus - tol;
}

/// Reachable set of a state: for zeta < 1 the intersection of two balls
/// centered on the reference axis; at zeta = 1 one ball intersected with the
/// half-space z >= z(state).
struct QubitCone {
    bool ground;
    double radius_a, center_a;  // R- ball, or the ground-radius ball
    double radius_b, center_b;  // R+ ball; unused when ground
    double min_z;               // only when ground
};

inline QubitCone future_cone(const QubitState& s, const QubitGibbs& g) {
    if (g.ground()) {
        double r3 = ground_radius(s);
        return QubitCone{true, r3, 1.0 - r3, 0.0, 0.0, s.z};
    }
    double zz = g.zeta();
    RadiusPair r = monotone_radii(s, g);
    double denom = 1.0 - zz * zz;
    double r1 = (r.minus + zz * zz) / denom;
    double r2 = (r.plus - zz * zz) / denom;
    return QubitCone{false, r1, zz * (1.0 + r1), r2, zz * (1.0 - r2), 0.0};
}

inline bool cone_contains(const QubitCone& cone, const QubitState& s, double tol = kQubitTol) {
    double planar = s.x * s.x + s.y * s.y;
    auto inside = [&](double radius, double center) {
        double dz = s.z - center;
        return std::sqrt(planar + dz * dz) <= radius + tol;
    };
    if (cone.ground) return s.z >= cone.min_z - tol && inside(cone.radius_a, cone.center_a);
    return inside(cone.radius_a, cone.center_a) && inside(cone.radius_b, cone.center_b);
}

/// Coefficients of the interpolation profile
///   A(lambda) = (|lambda r - (1-lambda) r_ref|^2 + (2 lambda - 1)^2) / 2
/// and of c(lambda) = A(lambda) - (2 lambda - 1)^2, whose sign says which of
/// the two terms of the contraction distance dominates.
struct AUProfile {
    double a2, a1, a0;
    double c2, c1, c0;
};

inline AUProfile au_profile(const QubitState& s, const QubitGibbs& g) {
    double zz = g.zeta();
    double planar = s.x * s.x + s.y * s.y;
    double w = s.z + zz;
    double a2 = 2.0 + (planar + w * w) / 2.0;
    double a1 = -(2.0 + zz * w);
    double a0 = (1.0 + zz * zz) / 2.0;
    return AUProfile{a2, a1, a0, a2 - 4.0, a1 + 4.0, a0 - 1.0};
}

/// Crossover parameters 0 <= lambda1 <= 1/2 <= lambda2 <= 1 where the two
/// terms of the contraction distance exchange dominance; requires zeta < 1.
struct LambdaRoots {
    double lambda1;
    double lambda2;
};

inline LambdaRoots lambda_roots(const QubitState& s, const QubitGibbs& g) {
    require(!g.ground(), "unsupported-context",
            "crossover parameters are defined for zeta < 1 only");
    double zz = g.zeta();
    double planar = s.x * s.x + s.y * s.y;
    double w = s.z + zz;
    double denom = 4.0 - w * w - planar;
    double d = thermal_distance(s, g);
    double base = 2.0 - zz * w;
    return LambdaRoots{(base - d) / denom, (base + d) / denom};
}

/// Contraction distance of the pair (state, reference) mixed with weights
/// (lambda, 1-lambda): the larger of the classical term |2 lambda - 1| and
/// the Bloch-space term.
inline double au_distance(const QubitState& s, const QubitGibbs& g, double lambda) {
    double vx = lambda * s.x;
    double vy = lambda * s.y;
    double vz = lambda * s.z - (1.0 - lambda) * g.zeta();
    double ball = std::sqrt(vx * vx + vy * vy + vz * vz);
    return std::max(std::abs(2.0 * lambda - 1.0), ball);
}

/// Grid version of the interpolation criterion: `from` can reach `to` only
/// if the contraction distance of `from` dominates at every lambda.  The
/// grid samples lambda uniformly, so violations confined to windows narrower
/// than the grid step are missed; this is an independent cross-check, not
/// the primary decision procedure.
inline bool au_oracle(const QubitState& from, const QubitState& to, const QubitGibbs& g,
                      int grid_points, double tol = kQubitTol) {
    require(grid_points >= 2, "parameter-range", "grid needs at least two points");
    for (int k = 0; k < grid_points; ++k) {
        double lambda = static_cast<double>(k) / (grid_points - 1);
        if (au_distance(from, g, lambda) < au_distance(to, g, lambda) - tol) return false;
    }
    return true;
}

namespace detail {

// Intersection of two circles centered on the z axis in the xz half-plane;
// the x coordinate is clamped to 0 when rounding pushes it negative.
inline QubitState axis_circle_intersection(double ra, double ca, double rb, double cb) {
    double zstar = (ra * ra - rb * rb - ca * ca + cb * cb) / (2.0 * (cb - ca));
    double x2 = ra * ra - (zstar - ca) * (zstar - ca);
    double xstar = x2 > 0.0 ? std::sqrt(x2) : 0.0;
    return QubitState::from_bloch(xstar, 0.0, zstar);
}

}  // namespace detail

/// Least upper bound of two qubit states.  Comparable pairs collapse to the
/// dominating state.  Otherwise, for zeta < 1, the join realizes both
/// maximal radii simultaneously: it sits on the R- boundary circle of the
/// state with the larger R- and on the R+ boundary circle of the state with
/// the larger R+ (boundaries taken from the reachable-set geometry).  At
/// zeta = 1 the join realizes (min z, max ground radius).  Returned in the
/// canonical xz half-plane.
inline QubitState qubit_join(const QubitState& a, const QubitState& b, const QubitGibbs& g,
                             double tol = kQubitTol) {
    if (gp_exists(a, b, g, tol)) return canonical_rep(a);
    if (gp_exists(b, a, g, tol)) return canonical_rep(b);
    if (g.ground()) {
        double r3 = std::max(ground_radius(a), ground_radius(b));
        double zs = std::min(a.z, b.z);
        double x2 = 2.0 * r3 * (1.0 - zs) - (1.0 - zs) * (1.0 - zs);
        return QubitState::from_bloch(x2 > 0.0 ? std::sqrt(x2) : 0.0, 0.0, zs);
    }
    RadiusPair ra = monotone_radii(a, g);
    RadiusPair rb = monotone_radii(b, g);
    QubitCone ca = future_cone(a, g);
    QubitCone cb = future_cone(b, g);
    const QubitCone& minus_side = ra.minus >= rb.minus ? ca : cb;  // R- ball
    const QubitCone& plus_side = ra.plus >= rb.plus ? ca : cb;     // R+ ball
    return detail::axis_circle_intersection(minus_side.radius_a, minus_side.center_a,
                                            plus_side.radius_b, plus_side.center_b);
}

/// Greatest lower bound, dual to the join: smaller radii replace larger
/// ones.  At zeta = 1 the target pair (max z, min ground radius) may be
/// unrealizable, in which case the optimum slides down the axis to
/// z = 1 - 2 R3.
inline QubitState qubit_meet(const QubitState& a, const QubitState& b, const QubitGibbs& g,
                             double tol = kQubitTol) {
    if (gp_exists(a, b, g, tol)) return canonical_rep(b);
    if (gp_exists(b, a, g, tol)) return canonical_rep(a);
    if (g.ground()) {
        double r3 = std::min(ground_radius(a), ground_radius(b));
        double zs = std::max(a.z, b.z);
        if (1.0 - zs > 2.0 * r3) zs = 1.0 - 2.0 * r3;
        double x2 = 2.0 * r3 * (1.0 - zs) - (1.0 - zs) * (1.0 - zs);
        return QubitState::from_bloch(x2 > 0.0 ? std::sqrt(x2) : 0.0, 0.0, zs);
    }
    RadiusPair ra = monotone_radii(a, g);
    RadiusPair rb = monotone_radii(b, g);
    QubitCone ca = future_cone(a, g);
    QubitCone cb = future_cone(b, g);
    const QubitCone& minus_side = ra.minus <= rb.minus ? ca : cb;
    const QubitCone& plus_side = ra.plus <= rb.plus ? ca : cb;
    return detail::axis_circle_intersection(minus_side.radius_a, minus_side.center_a,
                                            plus_side.radius_b, plus_side.center_b);
}

}  // namespace tlat
