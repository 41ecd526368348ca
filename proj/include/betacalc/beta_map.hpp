#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betacalc/errors.hpp"
#include "betacalc/tolerances.hpp"

namespace betacalc {

/// Real interval with independently open or closed ends.  Infinite ends are
/// expressed with +/-infinity and are necessarily open.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = true;
    bool hi_open = true;

    static Interval whole_line() { return Interval{}; }

    static Interval open(double lo, double hi) { return Interval{lo, hi, true, true}; }

    static Interval closed(double lo, double hi) { return Interval{lo, hi, false, false}; }

    bool contains(double t) const {
        if (lo_open ? !(t > lo) : !(t >= lo)) return false;
        if (hi_open ? !(t < hi) : !(t <= hi)) return false;
        return true;
    }

    bool degenerate() const { return !(lo < hi); }
};

/// A validated beta function: strictly increasing self-map of I with a unique
/// fixed point s0 toward which every orbit contracts.  Built-in families carry
/// closed-form inverses; custom maps fall back to bisection.
class BetaMap {
public:
    enum class Family { Hahn, Jackson, Cubic, Custom };

    using Fn = std::function<double(double)>;

    static BetaMap hahn(double q, double omega) {
        check_q(q);
        if (!(omega >= 0.0) || !std::isfinite(omega))
            throw std::invalid_argument("BetaMap: hahn omega must be finite and >= 0");
        BetaMap m;
        m.family_ = Family::Hahn;
        m.q_ = q;
        m.omega_ = omega;
        m.s0_ = omega / (1.0 - q);
        m.interval_ = Interval::whole_line();
        return m;
    }

    static BetaMap jackson(double q) {
        check_q(q);
        BetaMap m;
        m.family_ = Family::Jackson;
        m.q_ = q;
        m.s0_ = 0.0;
        m.interval_ = Interval::whole_line();
        return m;
    }

    /// beta(t) = t^3 on the open interval (-1, 1).
    static BetaMap cubic() {
        BetaMap m;
        m.family_ = Family::Cubic;
        m.s0_ = 0.0;
        m.interval_ = Interval::open(-1.0, 1.0);
        return m;
    }

    static BetaMap custom(Fn forward, Interval interval, double s0,
                          std::optional<Fn> inverse = std::nullopt) {
        if (interval.degenerate())
            throw InvalidInterval("BetaMap: custom interval is degenerate");
        if (!interval.contains(s0))
            throw std::invalid_argument("BetaMap: s0 must lie in the interval");
        BetaMap m;
        m.family_ = Family::Custom;
        m.s0_ = s0;
        m.interval_ = interval;
        m.forward_ = std::move(forward);
        m.inverse_ = std::move(inverse);
        return m;
    }

    Family family() const { return family_; }
    double fixed_point() const { return s0_; }
    const Interval& interval() const { return interval_; }
    double q() const { return q_; }
    double omega() const { return omega_; }

    double forward(double t) const {
        switch (family_) {
        case Family::Hahn: return q_ * t + omega_;
        case Family::Jackson: return q_ * t;
        case Family::Cubic: return t * t * t;
        case Family::Custom: return forward_(t);
        }
        return t; // unreachable
    }

    double operator()(double t) const { return forward(t); }

    bool has_closed_inverse() const {
        return family_ != Family::Custom || inverse_.has_value();
    }

    /// Inverse through the closed form when available, otherwise bisection on
    /// the (clipped) interval; |beta(result) - u| <= atol on success.
    double inverse(double u, const Tolerances& tol) const {
        switch (family_) {
        case Family::Hahn: return (u - omega_) / q_;
        case Family::Jackson: return u / q_;
        case Family::Cubic:
            if (!interval_.contains(u)) throw OutOfRange("BetaMap: u outside beta(I)");
            return std::cbrt(u);
        case Family::Custom:
            if (inverse_) return (*inverse_)(u);
            return bisect_inverse(u, tol);
        }
        return u; // unreachable
    }

private:
    static void check_q(double q) {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("BetaMap: q must lie in (0,1)");
    }

    double bisect_inverse(double u, const Tolerances& tol) const {
        auto [lo, hi] = clipped_bounds(1e6);
        double flo = forward(lo), fhi = forward(hi);
        if (!(flo <= u && u <= fhi))
            throw OutOfRange("BetaMap: u outside beta(I) on the clipped interval");
        // strict monotonicity guarantees convergence within the budget
        int budget = static_cast<int>(std::ceil(std::log2((hi - lo) / tol.atol))) + 8;
        for (int i = 0; i < budget; ++i) {
            double mid = 0.5 * (lo + hi);
            double fm = forward(mid);
            if (!std::isfinite(fm)) throw NonFiniteSample("BetaMap: non-finite sample in bisection");
            if (std::abs(fm - u) <= tol.atol) return mid;
            (fm < u ? lo : hi) = mid;
            if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), 1.0))
                return 0.5 * (lo + hi);
        }
        double mid = 0.5 * (lo + hi);
        if (std::abs(forward(mid) - u) <= tol.atol) return mid;
        throw NoConvergence("BetaMap: bisection budget exhausted inverting the map");
    }

public:
    /// Interval clipped to finite validation bounds s0 +/- clip_radius, with a
    /// small inset at open ends so that endpoint fixed points are excluded.
    std::pair<double, double> clipped_bounds(double clip_radius) const {
        double lo = std::max(interval_.lo, s0_ - clip_radius);
        double hi = std::min(interval_.hi, s0_ + clip_radius);
        double inset = (hi - lo) * 1e-9;
        if (interval_.lo_open && lo == interval_.lo) lo += inset;
        if (interval_.hi_open && hi == interval_.hi) hi -= inset;
        return {lo, hi};
    }

private:
    Family family_ = Family::Jackson;
    double q_ = 0.5;
    double omega_ = 0.0;
    double s0_ = 0.0;
    Interval interval_;
    Fn forward_;
    std::optional<Fn> inverse_;
};

/// k-fold composition beta^k(x); iterate(map, x, 0) = x.
inline double iterate(const BetaMap& map, double x, int k) {
    if (k < 0) throw std::invalid_argument("iterate: k must be >= 0");
    if (!map.interval().contains(x)) throw OutOfRange("iterate: x outside I");
    double t = x;
    for (int i = 0; i < k; ++i) {
        t = map.forward(t);
        if (!std::isfinite(t)) throw NonFiniteSample("iterate: non-finite orbit value");
        if (!map.interval().contains(t))
            throw DepthExceeded("iterate: orbit left the interval (invalid map)");
    }
    return t;
}

/// beta^{-1}(u); see BetaMap::inverse.
inline double invert(const BetaMap& map, double u, const Tolerances& tol) {
    return map.inverse(u, tol);
}

/// One checked condition of a validation run.
struct ConditionResult {
    std::string name;
    bool pass = true;
    std::optional<double> violation_t; ///< first violating sample, if any
    std::string detail;
};

/// Outcome of grid-based map validation.  A pass certifies the sampled grid
/// only; open or infinite ends are checked on the clipped region.
struct ValidationReport {
    bool pass = false;
    double s0 = 0.0;
    double clip_lo = 0.0, clip_hi = 0.0;
    int grid_size = 0;
    std::vector<ConditionResult> conditions;
};

/// Checks the BetaMap invariants on a grid of grid_size points spanning the
/// (clipped) interval: maps into I, strictly increasing, beta(s0) = s0, and
/// the contraction condition (t - s0)(beta(t) - t) <= 0 with equality only at
/// the fixed point.
inline ValidationReport validate(const BetaMap& map, int grid_size, const Tolerances& tol,
                                 double clip_radius = 1e6) {
    if (grid_size < 3) throw std::invalid_argument("validate: grid_size must be >= 3");
    if (map.interval().degenerate()) throw InvalidInterval("validate: lo >= hi");

    ValidationReport rep;
    rep.s0 = map.fixed_point();
    rep.grid_size = grid_size;
    auto [lo, hi] = map.clipped_bounds(clip_radius);
    rep.clip_lo = lo;
    rep.clip_hi = hi;
    if (!(lo < hi)) throw InvalidInterval("validate: clipped interval is empty");

    const double s0 = map.fixed_point();
    std::vector<double> grid(static_cast<size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i)
        grid[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (grid_size - 1);

    std::vector<double> image(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        image[i] = map.forward(grid[i]);
        if (!std::isfinite(image[i]))
            throw NonFiniteSample("validate: beta returned a non-finite value");
    }

    ConditionResult maps_into{"maps_into_interval", true, std::nullopt, ""};
    for (size_t i = 0; i < grid.size(); ++i) {
        // compare against the closed hull; open-end violations at grid scale
        // surface through the contraction condition instead
        if (image[i] < map.interval().lo || image[i] > map.interval().hi) {
            maps_into.pass = false;
            maps_into.violation_t = grid[i];
            maps_into.detail = "beta(t) outside I";
            break;
        }
    }

    ConditionResult increasing{"strictly_increasing", true, std::nullopt, ""};
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(image[i] < image[i + 1])) {
            increasing.pass = false;
            increasing.violation_t = grid[i];
            increasing.detail = "beta not strictly increasing between consecutive samples";
            break;
        }
    }

    ConditionResult fixed{"fixed_point", true, std::nullopt, ""};
    if (map.interval().contains(s0)) {
        double drift = std::abs(map.forward(s0) - s0);
        if (!(drift <= tol.atol * std::max(1.0, std::abs(s0)))) {
            fixed.pass = false;
            fixed.violation_t = s0;
            fixed.detail = "beta(s0) != s0 within atol";
        }
    } else {
        fixed.pass = false;
        fixed.violation_t = s0;
        fixed.detail = "s0 outside I";
    }

    ConditionResult contraction{"contraction_condition", true, std::nullopt, ""};
    for (size_t i = 0; i < grid.size(); ++i) {
        double t = grid[i];
        double prod = (t - s0) * (image[i] - t);
        if (prod > tol.atol * std::max(1.0, std::abs(t - s0))) {
            contraction.pass = false;
            contraction.violation_t = t;
            contraction.detail = "(t - s0)(beta(t) - t) > 0";
            break;
        }
        // equality is admissible only at the fixed point
        if (prod == 0.0 && std::abs(t - s0) > tol.atol * std::max(1.0, std::abs(s0))) {
            contraction.pass = false;
            contraction.violation_t = t;
            contraction.detail = "beta(t) = t away from s0";
            break;
        }
    }

    rep.conditions = {maps_into, increasing, fixed, contraction};
    rep.pass = true;
    for (const auto& c : rep.conditions) rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace betacalc
