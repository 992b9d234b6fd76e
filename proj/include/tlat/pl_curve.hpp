#pragma once

#include <cstddef>
#include <vector>

#include "tlat/error.hpp"
#include "tlat/rational.hpp"

namespace tlat {

struct CurvePoint {
    Rational x;
    Rational y;

    bool operator==(const CurvePoint& o) const { return x == o.x && y == o.y; }
};

/// Piecewise-linear curve through exact breakpoints, anchored at (0,0) with
/// strictly increasing x and non-decreasing y.  Concavity is a property of
/// the specific curve, not an invariant of the type: ordering curves are
/// concave, their pointwise maxima are not.
class PLCurve {
public:
    static PLCurve from_points(std::vector<CurvePoint> points) {
        require(points.size() >= 2, "invalid-curve", "curve needs at least two breakpoints");
        require(points.front().x == 0 && points.front().y == 0, "invalid-curve",
                "curve must start at (0,0)");
        for (std::size_t i = 1; i < points.size(); ++i) {
            require(points[i].x > points[i - 1].x, "invalid-curve",
                    "curve x-coordinates must strictly increase");
            require(points[i].y >= points[i - 1].y, "invalid-curve",
                    "curve must be non-decreasing");
        }
        return PLCurve(std::move(points));
    }

    const std::vector<CurvePoint>& points() const { return points_; }
    std::size_t segments() const { return points_.size() - 1; }
    const Rational& x_end() const { return points_.back().x; }
    const Rational& y_end() const { return points_.back().y; }

    /// Exact linear interpolation; x must lie in [0, x_end].
    Rational eval(const Rational& x) const {
        require(x >= 0 && x <= x_end(), "invalid-curve",
                "evaluation point " + to_string(x) + " outside [0, " + to_string(x_end()) + "]");
        // Rightmost segment whose left endpoint is <= x.
        std::size_t lo = 0, hi = points_.size() - 1;
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (points_[mid].x <= x)
                lo = mid;
            else
                hi = mid;
        }
        const CurvePoint& a = points_[lo];
        const CurvePoint& b = points_[lo + 1];
        if (x == a.x) return a.y;
        return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }

    bool is_concave() const {
        // Slopes of consecutive segments must not increase.
        for (std::size_t i = 0; i + 2 < points_.size(); ++i) {
            const CurvePoint& a = points_[i];
            const CurvePoint& b = points_[i + 1];
            const CurvePoint& c = points_[i + 2];
            // slope(a,b) >= slope(b,c)  <=>  (b.y-a.y)(c.x-b.x) >= (c.y-b.y)(b.x-a.x)
            if ((b.y - a.y) * (c.x - b.x) < (c.y - b.y) * (b.x - a.x)) return false;
        }
        return true;
    }

    /// True iff this curve lies nowhere below `other`.  Exact for concave
    /// curves checked at each other's breakpoints; for safety both curves'
    /// breakpoints are tested.
    bool dominates(const PLCurve& other) const {
        require(x_end() == other.x_end(), "invalid-curve",
                "curves span different x ranges");
        for (const CurvePoint& p : other.points())
            if (eval(p.x) < p.y) return false;
        for (const CurvePoint& p : points_)
            if (p.y < other.eval(p.x)) return false;
        return true;
    }

private:
    explicit PLCurve(std::vector<CurvePoint> points) : points_(std::move(points)) {}

    std::vector<CurvePoint> points_;
};

namespace curves {

/// Breakpoints of the pointwise max (take_max) or min of two curves over a
/// shared x-range, including intersection points interior to segments.
inline std::vector<CurvePoint> envelope_points(const PLCurve& f, const PLCurve& g, bool take_max) {
    require(f.x_end() == g.x_end(), "invalid-curve", "curves span different x ranges");
    std::vector<Rational> xs;
    for (const CurvePoint& p : f.points()) xs.push_back(p.x);
    for (const CurvePoint& p : g.points()) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto pick = [&](const Rational& a, const Rational& b) {
        if (take_max) return a >= b ? a : b;
        return a <= b ? a : b;
    };

    std::vector<CurvePoint> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational fy = f.eval(xs[i]), gy = g.eval(xs[i]);
        if (i + 1 < xs.size()) {
            // Both curves are linear on [xs[i], xs[i+1]]; a strict sign change
            // of (f-g) across the interval marks one interior crossing.
            Rational fy2 = f.eval(xs[i + 1]), gy2 = g.eval(xs[i + 1]);
            Rational d1 = fy - gy, d2 = fy2 - gy2;
            out.push_back({xs[i], pick(fy, gy)});
            if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) {
                Rational t = d1 / (d1 - d2);  // in (0,1)
                Rational cx = xs[i] + t * (xs[i + 1] - xs[i]);
                Rational cy = fy + t * (fy2 - fy);
                out.push_back({cx, cy});
            }
        } else {
            out.push_back({xs[i], pick(fy, gy)});
        }
    }
    return out;
}

/// Pointwise minimum of two curves.  For concave inputs the result is again
/// a valid concave curve (the lower envelope).
inline PLCurve lower_envelope(const PLCurve& f, const PLCurve& g) {
    return PLCurve::from_points(envelope_points(f, g, /*take_max=*/false));
}

/// Least concave function lying above the given breakpoints: the upper hull
/// taken left to right.  Input must be sorted by strictly increasing x.
inline std::vector<CurvePoint> concave_majorant(const std::vector<CurvePoint>& pts) {
    std::vector<CurvePoint> hull;
    for (const CurvePoint& p : pts) {
        while (hull.size() >= 2) {
            const CurvePoint& a = hull[hull.size() - 2];
            const CurvePoint& b = hull[hull.size() - 1];
            // Drop b when it lies on or below chord a->p.
            if ((b.y - a.y) * (p.x - a.x) <= (p.y - a.y) * (b.x - a.x))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

}  // namespace curves
}  // namespace tlat
