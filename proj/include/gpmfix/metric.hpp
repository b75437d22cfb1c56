#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gpmfix/combine.hpp"

namespace gpmfix {

/// Generalized parametric metric: a distance rho(x, y, t) over a point domain
/// with a positive parameter t and an attached combine operation for the split
/// triangle inequality rho(x, y, t1+t2) <= rho(x, z, t1) o rho(y, z, t2).
///
/// Values are immutable after construction and evaluation is pure.
template <class Point>
class ParametricMetric {
public:
    using Distance = std::function<double(const Point&, const Point&, double)>;

    ParametricMetric(Distance distance, CombineOp combine, std::string domain_tag)
        : distance_(std::move(distance)),
          combine_(std::move(combine)),
          domain_tag_(std::move(domain_tag)) {}

    const CombineOp& combine() const { return combine_; }
    const std::string& domain_tag() const { return domain_tag_; }

    /// Evaluates rho(x, y, t). Requires t > 0; the result is never negative.
    double operator()(const Point& x, const Point& y, double t) const {
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::domain_error("parametric metric: t must be positive and finite");
        double d = distance_(x, y, t);
        if (!std::isfinite(d))
            throw std::domain_error("parametric metric: non-finite distance");
        if (d < 0.0)
            throw std::domain_error("parametric metric: negative distance");
        return d;
    }

private:
    Distance distance_;
    CombineOp combine_;
    std::string domain_tag_;
};

/// rho(x, y, t) = |x - y|^p / t on the reals, 0 < p < 1, combine = Sum.
inline ParametricMetric<double> power_metric(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("power_metric: p must lie in (0, 1)");
    auto dist = [p](const double& x, const double& y, double t) {
        if (!(std::isfinite(x) && std::isfinite(y)))
            throw std::domain_error("power_metric: non-finite point");
        return std::pow(std::abs(x - y), p) / t;
    };
    return ParametricMetric<double>(dist, CombineOp::sum_op(), "scalar");
}

/// rho(x, y, t) = sqrt(|x - y|) / t on the reals, combine = Sum.
inline ParametricMetric<double> sqrt_metric() {
    auto dist = [](const double& x, const double& y, double t) {
        if (!(std::isfinite(x) && std::isfinite(y)))
            throw std::domain_error("sqrt_metric: non-finite point");
        return std::sqrt(std::abs(x - y)) / t;
    };
    return ParametricMetric<double>(dist, CombineOp::sum_op(), "scalar");
}

}  // namespace gpmfix
