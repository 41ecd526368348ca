#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace betacalc {

using Complex = std::complex<double>;

/// A pure, deterministic scalar function handle on I.  An optional derivative
/// handle lets the quantum derivative use the exact f'(s0) instead of a
/// difference estimate at the fixed point.
class ScalarFunction {
public:
    using Fn = std::function<Complex(double)>;

    explicit ScalarFunction(Fn fn) : fn_(std::move(fn)) {}
    ScalarFunction(Fn fn, Fn derivative) : fn_(std::move(fn)), deriv_(std::move(derivative)) {}

    static ScalarFunction constant(Complex z) {
        return ScalarFunction([z](double) { return z; }, [](double) { return Complex{0.0, 0.0}; });
    }

    /// Polynomial with coefficients in ascending degree; carries its exact
    /// derivative.
    static ScalarFunction polynomial(std::vector<Complex> coeffs) {
        if (coeffs.empty()) coeffs.push_back(Complex{0.0, 0.0});
        auto eval = [coeffs](double t) {
            Complex acc{0.0, 0.0};
            for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
            return acc;
        };
        std::vector<Complex> dcoeffs;
        for (size_t i = 1; i < coeffs.size(); ++i)
            dcoeffs.push_back(static_cast<double>(i) * coeffs[i]);
        if (dcoeffs.empty()) dcoeffs.push_back(Complex{0.0, 0.0});
        auto deval = [dcoeffs](double t) {
            Complex acc{0.0, 0.0};
            for (size_t i = dcoeffs.size(); i-- > 0;) acc = acc * t + dcoeffs[i];
            return acc;
        };
        return ScalarFunction(eval, deval);
    }

    Complex operator()(double t) const { return fn_(t); }

    bool has_derivative() const { return static_cast<bool>(deriv_); }
    Complex derivative(double t) const { return deriv_(t); }

private:
    Fn fn_;
    Fn deriv_;
};

} // namespace betacalc
