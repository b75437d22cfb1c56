#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "gpmfix/engine.hpp"
#include "gpmfix/grid_function.hpp"
#include "gpmfix/report.hpp"
#include "gpmfix/sampler.hpp"

namespace gpmfix {

/// First-order periodic boundary value problem u'(y) = F(y, u(y)) on [0, S]
/// with u(0) = u(S), solved through the shifted form u' + a u = F + a u and
/// the piecewise-exponential periodic Green's kernel. The one-sided slope
/// bound b with b < a gives the contraction factor b / a.
struct PBVPProblem {
    double S = 1.0;
    double a = 1.0;
    double b = 0.5;
    std::function<double(double, double)> F;  // (y, u) -> rhs
    std::size_t n = 1000;

    void validate() const;
    double contraction_factor() const { return b / a; }
};

/// Periodic kernel: e^{a(S+z-y)}/(e^{aS}-1) for z < y, e^{a(z-y)}/(e^{aS}-1)
/// for z >= y (tie on the second branch). Positive on all of [0,S]^2.
double greens_periodic(double y, double z, double a, double S);

/// One application of (Fu)(y) = int_0^S G(y, z) [F(z, u(z)) + a u(z)] dz.
/// The integrand is e^{az} h(z) up to node-wise factors, so the quadrature
/// uses exponentially fitted product-trapezoid weights accumulated as a
/// single prefix sum: exact for node-wise-linear h and positive weights, so
/// order preservation survives discretization.
GridFunction apply_pbvp_operator(const PBVPProblem& p, const GridFunction& u);

/// Samples condition 0 <= {F(y,r2)+a r2} - {F(y,r1)+a r1} <= b (r2 - r1)
/// over y in [0, S] and ordered pairs r1 <= r2.
CheckReport check_F_condition(const PBVPProblem& p, const Sampler& s,
                              double tol = 1e-9);

/// Checks alpha'(y) <= F(y, alpha(y)) at every node (one-sided differences)
/// and alpha(0) <= alpha(S); the upper variant reverses both inequalities.
/// Default tol is 1e-6 * (1 + max|alpha|) so discretization noise cannot
/// flip an inequality that holds with equality.
CheckReport verify_lower_solution(const PBVPProblem& p, const GridFunction& alpha,
                                  std::optional<double> tol = std::nullopt);
CheckReport verify_upper_solution(const PBVPProblem& p, const GridFunction& alpha,
                                  std::optional<double> tol = std::nullopt);

struct PBVPSolveResult {
    GridFunction solution;
    IterationTrace<GridFunction> trace;
    std::optional<double> estimated_factor;
};

/// Ordered successive approximation under the pointwise order and the sup
/// parametric metric. The start must be comparable with its image; a
/// verified lower (upper) solution yields a nondecreasing (nonincreasing)
/// iterate trace.
PBVPSolveResult solve_pbvp(const PBVPProblem& p, const GridFunction& start,
                           double tol = 1e-8, std::size_t max_iter = 10000,
                           std::vector<double> t_grid = {0.5, 1.0, 2.0});

/// Finite-difference residual of the periodic ODE: max node-wise
/// |Du - F(y, u)| with periodic central differences, plus |u(0) - u(S)|.
double pbvp_residual(const PBVPProblem& p, const GridFunction& u);

}  // namespace gpmfix
