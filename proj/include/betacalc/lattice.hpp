#pragma once

#include <cmath>
#include <vector>

#include "betacalc/beta_map.hpp"
#include "betacalc/errors.hpp"
#include "betacalc/tolerances.hpp"

namespace betacalc {

/// Truncated beta-orbit {beta^k(x)} with its gap weights: the discrete
/// support of every beta-integral.  points holds t_0..t_{K+1} and weights the
/// signed gaps mu_k = t_k - t_{k+1} for k = 0..K.  A base at the fixed point
/// degenerates to a single point with no weights.
class Lattice {
public:
    Lattice(std::vector<double> points, double s0, bool capped)
        : points_(std::move(points)), s0_(s0), capped_(capped) {
        if (points_.empty()) throw std::invalid_argument("Lattice: empty point list");
        weights_.reserve(points_.size() - 1);
        for (size_t k = 0; k + 1 < points_.size(); ++k)
            weights_.push_back(points_[k] - points_[k + 1]);
        tail_gap_ = std::abs(points_.back() - s0);
    }

    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }

    /// Truncation depth K; the lattice has K+2 points and K+1 weights
    /// (degenerate single-point lattice: depth 0, no weights).
    int depth() const { return static_cast<int>(weights_.empty() ? 0 : weights_.size() - 1); }

    size_t size() const { return points_.size(); }
    double base() const { return points_.front(); }
    double fixed_point() const { return s0_; }
    double tail_gap() const { return tail_gap_; }
    bool capped() const { return capped_; }
    bool degenerate() const { return points_.size() == 1; }

    double point(size_t k) const { return points_[k]; }
    double weight(size_t k) const { return weights_[k]; }

    bool operator==(const Lattice& other) const {
        return points_ == other.points_ && s0_ == other.s0_;
    }
    bool operator!=(const Lattice& other) const { return !(*this == other); }

private:
    std::vector<double> points_;
    std::vector<double> weights_;
    double s0_;
    double tail_gap_;
    bool capped_;
};

/// Builds the orbit of x truncated at the smallest K with
/// |t_{K+1} - s0| <= atol * max(1, |x - s0|), capped at k_max (the returned
/// lattice is flagged when the cap fires first).
inline Lattice build_lattice(const BetaMap& map, double x, const Tolerances& tol) {
    const double s0 = map.fixed_point();
    if (!map.interval().contains(x)) throw OutOfRange("build_lattice: x outside I");
    if (x == s0) return Lattice({x}, s0, false);

    const double scale = std::max(1.0, std::abs(x - s0));
    std::vector<double> pts{x};
    double t = x;
    double dist = std::abs(t - s0);
    for (int k = 0; k < tol.k_max; ++k) {
        double next = map.forward(t);
        if (!std::isfinite(next)) throw NonFiniteSample("build_lattice: non-finite orbit value");
        if (next == t) {
            // orbit numerically stalled at the working precision; treat the
            // stalled point as the tail
            if (pts.size() == 1) return Lattice({x}, s0, false);
            return Lattice(std::move(pts), s0, false);
        }
        double next_dist = std::abs(next - s0);
        if (!(next_dist < dist))
            throw DepthExceeded("build_lattice: orbit does not contract toward s0");
        pts.push_back(next);
        t = next;
        dist = next_dist;
        if (next_dist <= tol.atol * scale) return Lattice(std::move(pts), s0, false);
    }
    return Lattice(std::move(pts), s0, true);
}

/// Orbit of x truncated at exactly the requested depth (depth+2 points).
inline Lattice build_lattice_depth(const BetaMap& map, double x, int depth) {
    if (depth < 0) throw std::invalid_argument("build_lattice_depth: depth must be >= 0");
    const double s0 = map.fixed_point();
    if (!map.interval().contains(x)) throw OutOfRange("build_lattice_depth: x outside I");
    if (x == s0) return Lattice({x}, s0, false);
    std::vector<double> pts{x};
    double t = x;
    double dist = std::abs(t - s0);
    for (int k = 0; k <= depth; ++k) {
        double next = map.forward(t);
        if (!std::isfinite(next)) throw NonFiniteSample("build_lattice_depth: non-finite orbit value");
        if (next == t)
            throw DepthExceeded("build_lattice_depth: orbit stalled before requested depth");
        double next_dist = std::abs(next - s0);
        if (!(next_dist < dist))
            throw DepthExceeded("build_lattice_depth: orbit does not contract toward s0");
        pts.push_back(next);
        t = next;
        dist = next_dist;
    }
    return Lattice(std::move(pts), s0, false);
}

} // namespace betacalc
