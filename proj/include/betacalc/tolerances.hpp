#pragma once

#include <cmath>
#include <stdexcept>

namespace betacalc {

/// Truncation and comparison tolerances shared by lattice construction,
/// series summation and product evaluation.
struct Tolerances {
    double atol = 1e-12; ///< absolute truncation/comparison tolerance
    double rtol = 1e-10;
    int k_max = 4000; ///< hard cap on orbit depth

    Tolerances() = default;

    Tolerances(double atol_, double rtol_, int k_max_)
        : atol(atol_), rtol(rtol_), k_max(k_max_) {
        if (!(std::isfinite(atol) && atol > 0.0))
            throw std::invalid_argument("Tolerances: atol must be finite and positive");
        if (!(std::isfinite(rtol) && rtol > 0.0))
            throw std::invalid_argument("Tolerances: rtol must be finite and positive");
        if (k_max < 1)
            throw std::invalid_argument("Tolerances: k_max must be >= 1");
    }
};

} // namespace betacalc
