#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpmfix/contraction.hpp"
#include "gpmfix/metric.hpp"

namespace gpmfix {

inline constexpr double kDivergenceCeiling = 1e12;

inline bool is_finite_point(double x) { return std::isfinite(x); }

enum class IterationStatus { Converged, MaxIterations, NonFinite };

inline const char* to_string(IterationStatus s) {
    switch (s) {
        case IterationStatus::Converged: return "converged";
        case IterationStatus::MaxIterations: return "max-iterations";
        case IterationStatus::NonFinite: return "non-finite";
    }
    return "unknown";
}

/// Thrown by ordered_iterate when the start is comparable with its image in
/// neither direction.
struct IncomparableStartError : std::runtime_error {
    IncomparableStartError()
        : std::runtime_error(
              "ordered iteration requires x0 comparable with map(x0)") {}
};

/// Partial order with sampled lattice structure: leq plus pointwise meet and
/// join supplying the lower/upper bounds the ordered fixed-point theorems
/// hypothesize.
template <class Point>
struct PartialOrderSpec {
    std::function<bool(const Point&, const Point&)> leq;
    std::function<Point(const Point&, const Point&)> meet;
    std::function<Point(const Point&, const Point&)> join;
};

/// Full record of a successive-approximation run. residuals[n][j] is
/// rho(x_n, x_{n+1}, t_j); convergence means the sup over the t-grid of the
/// last residual row dropped to the tolerance.
template <class Point>
struct IterationTrace {
    std::vector<Point> iterates;
    std::vector<std::vector<double>> residuals;
    std::vector<double> t_grid;
    IterationStatus status = IterationStatus::MaxIterations;
    std::size_t converged_at = 0;
    std::optional<bool> monotone_nondecreasing;
    std::optional<bool> monotone_nonincreasing;
    std::vector<std::string> warnings;

    double sup_residual(std::size_t n) const {
        double sup = 0.0;
        for (double r : residuals[n]) sup = std::max(sup, r);
        return sup;
    }

    std::size_t iteration_count() const { return residuals.size(); }

    /// CSV with columns: n, then one residual column per t-grid entry.
    std::string residuals_csv() const {
        std::ostringstream out;
        out.precision(17);
        out << "n";
        for (double t : t_grid) out << ",r_t" << t;
        out << "\n";
        for (std::size_t n = 0; n < residuals.size(); ++n) {
            out << n;
            for (double r : residuals[n]) out << "," << r;
            out << "\n";
        }
        return out.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["status"] = to_string(status);
        if (status == IterationStatus::Converged) j["converged_at"] = converged_at;
        j["iterations"] = residuals.size();
        j["t_grid"] = t_grid;
        j["residuals"] = residuals;
        if (monotone_nondecreasing) j["monotone_nondecreasing"] = *monotone_nondecreasing;
        if (monotone_nonincreasing) j["monotone_nonincreasing"] = *monotone_nonincreasing;
        if (!warnings.empty()) j["warnings"] = warnings;
        return j;
    }
};

namespace detail {

inline void validate_iteration_args(const std::vector<double>& t_grid, double tol,
                                    std::size_t max_iter) {
    if (t_grid.empty()) throw std::invalid_argument("iterate: t_grid must be nonempty");
    for (double t : t_grid)
        if (!(t > 0.0)) throw std::invalid_argument("iterate: t_grid entries must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("iterate: tol must be positive");
    if (max_iter == 0) throw std::invalid_argument("iterate: max_iter must be positive");
}

}  // namespace detail

/// Successive approximation x_{n+1} = map(x_n) until the residual sup over
/// the t-grid reaches tol or max_iter is exhausted. The trace retains every
/// iterate and residual row.
template <class Point, class Map>
IterationTrace<Point> iterate(Map&& map, Point x0, const ParametricMetric<Point>& m,
                              std::vector<double> t_grid, double tol,
                              std::size_t max_iter) {
    detail::validate_iteration_args(t_grid, tol, max_iter);

    IterationTrace<Point> trace;
    trace.t_grid = std::move(t_grid);
    trace.iterates.push_back(x0);
    if (!is_finite_point(x0)) {
        trace.status = IterationStatus::NonFinite;
        return trace;
    }

    Point x = std::move(x0);
    for (std::size_t n = 0; n < max_iter; ++n) {
        Point next = map(x);
        if (!is_finite_point(next)) {
            trace.status = IterationStatus::NonFinite;
            return trace;
        }
        std::vector<double> row;
        row.reserve(trace.t_grid.size());
        double sup = 0.0;
        for (double t : trace.t_grid) {
            double r = m(x, next, t);
            row.push_back(r);
            sup = std::max(sup, r);
        }
        trace.iterates.push_back(next);
        trace.residuals.push_back(std::move(row));
        if (sup > kDivergenceCeiling) {
            trace.status = IterationStatus::NonFinite;
            return trace;
        }
        if (sup <= tol) {
            trace.status = IterationStatus::Converged;
            trace.converged_at = n;
            return trace;
        }
        x = std::move(next);
    }
    trace.status = IterationStatus::MaxIterations;
    return trace;
}

/// sup over the t-grid of rho(x, map(x), t): zero exactly when x is a fixed
/// point up to the metric's resolution on the grid.
template <class Point, class Map>
double fixed_point_residual(Map&& map, const Point& x, const ParametricMetric<Point>& m,
                            const std::vector<double>& t_grid) {
    if (t_grid.empty())
        throw std::invalid_argument("fixed_point_residual: t_grid must be nonempty");
    Point image = map(x);
    if (!is_finite_point(image))
        throw std::domain_error("fixed_point_residual: non-finite map output");
    double sup = 0.0;
    for (double t : t_grid) sup = std::max(sup, m(x, image, t));
    return sup;
}

/// Ordered successive approximation. Requires x0 comparable with map(x0);
/// tracks whether the iterate sequence stays monotone under the order, the
/// hypothesis that substitutes for continuity of the map.
template <class Point, class Map>
IterationTrace<Point> ordered_iterate(Map&& map, Point x0,
                                      const PartialOrderSpec<Point>& order,
                                      const ParametricMetric<Point>& m,
                                      std::vector<double> t_grid, double tol,
                                      std::size_t max_iter,
                                      bool require_monotone_trace = false) {
    detail::validate_iteration_args(t_grid, tol, max_iter);
    if (!is_finite_point(x0))
        throw std::domain_error("ordered_iterate: non-finite start");

    Point fx0 = map(x0);
    if (!is_finite_point(fx0))
        throw std::domain_error("ordered_iterate: non-finite image of start");
    bool up = order.leq(x0, fx0);
    bool down = order.leq(fx0, x0);
    if (!up && !down) throw IncomparableStartError();

    IterationTrace<Point> trace;
    trace.t_grid = std::move(t_grid);
    trace.iterates.push_back(x0);
    bool nondecreasing = true;
    bool nonincreasing = true;

    Point x = std::move(x0);
    Point next = std::move(fx0);
    for (std::size_t n = 0; n < max_iter; ++n) {
        if (!is_finite_point(next)) {
            trace.status = IterationStatus::NonFinite;
            break;
        }
        nondecreasing = nondecreasing && order.leq(x, next);
        nonincreasing = nonincreasing && order.leq(next, x);
        if (require_monotone_trace && !nondecreasing && !nonincreasing &&
            trace.warnings.empty()) {
            trace.warnings.push_back(
                "monotone-trace hypothesis violated at iteration " + std::to_string(n));
        }

        std::vector<double> row;
        row.reserve(trace.t_grid.size());
        double sup = 0.0;
        for (double t : trace.t_grid) {
            double r = m(x, next, t);
            row.push_back(r);
            sup = std::max(sup, r);
        }
        trace.iterates.push_back(next);
        trace.residuals.push_back(std::move(row));
        if (sup > kDivergenceCeiling) {
            trace.status = IterationStatus::NonFinite;
            break;
        }
        if (sup <= tol) {
            trace.status = IterationStatus::Converged;
            trace.converged_at = n;
            break;
        }
        x = std::move(next);
        if (n + 1 < max_iter) next = map(x);
    }
    trace.monotone_nondecreasing = nondecreasing;
    trace.monotone_nonincreasing = nonincreasing;
    return trace;
}

/// Geometric-mean ratio of successive residuals at the first t-grid entry:
/// estimates kappa for Banach maps and the slope of linear gauges.
template <class Point>
double estimate_contraction_factor(const IterationTrace<Point>& trace) {
    double log_sum = 0.0;
    std::size_t ratios = 0;
    for (std::size_t n = 0; n + 1 < trace.residuals.size(); ++n) {
        double r0 = trace.residuals[n][0];
        double r1 = trace.residuals[n + 1][0];
        if (r0 > 0.0 && r1 > 0.0) {
            log_sum += std::log(r1 / r0);
            ++ratios;
        }
    }
    if (ratios < 2)
        throw std::domain_error(
            "estimate_contraction_factor: needs >= 3 iterations with nonzero residuals");
    return std::exp(log_sum / static_cast<double>(ratios));
}

}  // namespace gpmfix
