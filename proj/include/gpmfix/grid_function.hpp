#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpmfix/engine.hpp"
#include "gpmfix/metric.hpp"

namespace gpmfix {

/// Uniformly sampled element of C[0, S]: n+1 values at nodes y_i = i*S/n.
/// Values are immutable after construction.
class GridFunction {
public:
    GridFunction(double s_max, std::vector<double> values);

    static GridFunction constant(double s_max, std::size_t n, double value);

    template <class Fn>
    static GridFunction sample(double s_max, std::size_t n, Fn&& fn) {
        std::vector<double> values(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            values[i] = fn(node_at(s_max, n, i));
        return GridFunction(s_max, std::move(values));
    }

    double s_max() const { return s_max_; }
    std::size_t n() const { return values_.size() - 1; }
    double step() const { return s_max_ / static_cast<double>(n()); }
    double node(std::size_t i) const { return node_at(s_max_, n(), i); }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool same_grid(const GridFunction& other) const {
        return n() == other.n() && s_max_ == other.s_max_;
    }
    bool finite() const;

    /// Piecewise-linear interpolation, exact at nodes. Requires 0 <= y <= S.
    double eval_interp(double y) const;

    /// Largest node-wise |f_i - g_i|. Grids must match.
    double sup_diff(const GridFunction& other) const;

    std::string to_csv() const;
    nlohmann::json to_json() const;
    static GridFunction from_json(const nlohmann::json& j);

private:
    static double node_at(double s_max, std::size_t n, std::size_t i) {
        return s_max * static_cast<double>(i) / static_cast<double>(n);
    }

    double s_max_;
    std::vector<double> values_;
};

inline bool is_finite_point(const GridFunction& f) { return f.finite(); }

/// rho(f, g, t) = max_i |f_i - g_i| / t over grid functions on the given
/// grid, combine = Max.
ParametricMetric<GridFunction> sup_parametric_metric(double S, std::size_t n);

/// Node-wise order: leq is pointwise <= at every node, meet/join are the
/// pointwise min/max, backing the lattice hypotheses of the ordered
/// fixed-point theorems. leq_eps loosens the comparison for near-solutions.
PartialOrderSpec<GridFunction> pointwise_order(double S, std::size_t n);
PartialOrderSpec<GridFunction> pointwise_order_eps(double S, std::size_t n, double eps);

}  // namespace gpmfix
