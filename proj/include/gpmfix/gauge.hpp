#pragma once

#include <functional>
#include <utility>

namespace gpmfix {

/// Comparison function phi of a Boyd-Wong contraction: phi(s) < s for s > 0,
/// upper semi-continuous from the right. Both properties are sample-checked,
/// never assumed.
struct GaugeFunction {
    std::function<double(double)> phi;
    bool declared_nondecreasing = false;

    /// phi(s) = factor * s, the linear gauge used throughout the examples.
    static GaugeFunction linear(double factor) {
        return GaugeFunction{[factor](double s) { return factor * s; }, true};
    }

    double operator()(double s) const { return phi(s); }
};

}  // namespace gpmfix
