#include "gpmfix/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gpmfix {

GridFunction::GridFunction(double s_max, std::vector<double> values)
    : s_max_(s_max), values_(std::move(values)) {
    if (!(s_max_ > 0.0)) throw std::domain_error("GridFunction: S must be positive");
    if (values_.size() < 3)
        throw std::domain_error("GridFunction: need n >= 2 (at least 3 nodes)");
}

GridFunction GridFunction::constant(double s_max, std::size_t n, double value) {
    return GridFunction(s_max, std::vector<double>(n + 1, value));
}

bool GridFunction::finite() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::isfinite(v); });
}

double GridFunction::eval_interp(double y) const {
    if (!(y >= 0.0 && y <= s_max_))
        throw std::domain_error("eval_interp: y outside [0, S]");
    double h = step();
    double pos = y / h;
    auto i = static_cast<std::size_t>(pos);
    if (i >= n()) return values_.back();
    double frac = pos - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

double GridFunction::sup_diff(const GridFunction& other) const {
    if (!same_grid(other))
        throw std::domain_error("GridFunction: mismatched grids");
    double sup = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        sup = std::max(sup, std::abs(values_[i] - other.values_[i]));
    return sup;
}

std::string GridFunction::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "y,value\n";
    for (std::size_t i = 0; i < values_.size(); ++i)
        out << node(i) << "," << values_[i] << "\n";
    return out.str();
}

nlohmann::json GridFunction::to_json() const {
    return {{"s_max", s_max_}, {"n", n()}, {"values", values_}};
}

GridFunction GridFunction::from_json(const nlohmann::json& j) {
    GridFunction f(j.at("s_max").get<double>(),
                   j.at("values").get<std::vector<double>>());
    if (f.n() != j.at("n").get<std::size_t>())
        throw std::domain_error("GridFunction: n inconsistent with values length");
    return f;
}

ParametricMetric<GridFunction> sup_parametric_metric(double S, std::size_t n) {
    if (!(S > 0.0)) throw std::domain_error("sup_parametric_metric: S must be positive");
    if (n < 2) throw std::domain_error("sup_parametric_metric: n must be >= 2");
    auto dist = [S, n](const GridFunction& f, const GridFunction& g, double t) {
        if (f.s_max() != S || f.n() != n || !f.same_grid(g))
            throw std::domain_error("sup_parametric_metric: mismatched grids");
        return f.sup_diff(g) / t;
    };
    return ParametricMetric<GridFunction>(dist, CombineOp::max_op(), "grid-function");
}

namespace {
void require_grid(const GridFunction& f, double S, std::size_t n) {
    if (f.s_max() != S || f.n() != n)
        throw std::domain_error("pointwise_order: mismatched grids");
}
}  // namespace

PartialOrderSpec<GridFunction> pointwise_order_eps(double S, std::size_t n, double eps) {
    PartialOrderSpec<GridFunction> order;
    order.leq = [S, n, eps](const GridFunction& f, const GridFunction& g) {
        require_grid(f, S, n);
        require_grid(g, S, n);
        for (std::size_t i = 0; i <= n; ++i)
            if (f[i] > g[i] + eps) return false;
        return true;
    };
    order.meet = [S, n](const GridFunction& f, const GridFunction& g) {
        require_grid(f, S, n);
        require_grid(g, S, n);
        std::vector<double> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i) v[i] = std::min(f[i], g[i]);
        return GridFunction(S, std::move(v));
    };
    order.join = [S, n](const GridFunction& f, const GridFunction& g) {
        require_grid(f, S, n);
        require_grid(g, S, n);
        std::vector<double> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i) v[i] = std::max(f[i], g[i]);
        return GridFunction(S, std::move(v));
    };
    return order;
}

PartialOrderSpec<GridFunction> pointwise_order(double S, std::size_t n) {
    return pointwise_order_eps(S, n, 0.0);
}

}  // namespace gpmfix
