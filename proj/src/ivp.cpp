#include "gpmfix/ivp.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gpmfix {

void IVPProblem::validate() const {
    if (w == 0.0) throw std::domain_error("ivp: w must be nonzero");
    if (!(S > 0.0)) throw std::domain_error("ivp: S must be positive");
    if (n < 4) throw std::domain_error("ivp: n must be >= 4");
    if (!g) throw std::domain_error("ivp: forcing g is required");
}

bool IVPProblem::contraction_guard_ok() const {
    return std::abs(w) * S <= std::numbers::pi / 2.0 + 1e-15;
}

GridFunction IVPProblem::homogeneous_part() const {
    double c = (mode == HomogeneousMode::Consistent) ? l2 / w : l2;
    return GridFunction::sample(S, n, [&](double y) {
        return l1 * std::cos(w * y) + c * std::sin(w * y);
    });
}

double greens_ivp(double eta, double u, double w) {
    if (w == 0.0) throw std::domain_error("greens_ivp: w must be nonzero");
    if (u > eta) return 0.0;
    return std::sin(w * (eta - u)) / w;
}

GridFunction apply_ivp_operator(const IVPProblem& p, const GridFunction& Y) {
    p.validate();
    if (Y.s_max() != p.S || Y.n() != p.n)
        throw std::domain_error("apply_ivp_operator: Y not on the problem grid");

    const std::size_t n = p.n;
    const double h = Y.step();
    const double c = (p.mode == HomogeneousMode::Consistent) ? p.l2 / p.w : p.l2;

    // sin(w(mu-u)) = sin(w mu) cos(w u) - cos(w mu) sin(w u), so the prefix
    // integrals of cos(wu) g and sin(wu) g assemble every node in O(n).
    std::vector<double> fc(n + 1), fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double y = Y.node(i);
        double gv = p.g(y, Y[i]);
        if (!std::isfinite(gv))
            throw std::domain_error("apply_ivp_operator: non-finite forcing value");
        fc[i] = std::cos(p.w * y) * gv;
        fs[i] = std::sin(p.w * y) * gv;
    }

    std::vector<double> out(n + 1);
    double A = 0.0, B = 0.0;  // trapezoid prefixes of fc, fs
    for (std::size_t i = 0; i <= n; ++i) {
        double mu = Y.node(i);
        if (i > 0) {
            A += 0.5 * h * (fc[i - 1] + fc[i]);
            B += 0.5 * h * (fs[i - 1] + fs[i]);
        }
        double s = std::sin(p.w * mu);
        double cc = std::cos(p.w * mu);
        out[i] = p.l1 * cc + c * s + (s * A - cc * B) / p.w;
    }
    return GridFunction(p.S, std::move(out));
}

CheckReport check_ivp_condition(const IVPProblem& p, const Sampler& s, double tol) {
    p.validate();
    s.validate();
    CheckReport report;
    report.axiom = "ivp-condition";
    report.samples = s.count;
    report.tol = tol;
    if (!p.contraction_guard_ok()) {
        std::ostringstream msg;
        msg << "w*S = " << std::abs(p.w) * p.S
            << " exceeds pi/2: contraction transfer not guaranteed";
        report.notes.push_back(msg.str());
    }

    auto rng = s.rng();
    double w2 = p.w * p.w;
    for (std::size_t i = 0; i < s.count; ++i) {
        double y = rng.uniform(0.0, p.S);
        double r = rng.uniform(s.point_lo, s.point_hi);
        double q = rng.uniform(s.point_lo, s.point_hi);
        double zeta = rng.uniform(s.t_lo, s.t_hi);
        double lhs = std::abs(p.g(y, r) - p.g(y, q)) / zeta;
        double rhs = w2 * p.gauge(std::abs(r - q) / zeta);
        if (lhs > rhs + tol)
            report.record("ivp-condition", {y, r, q, zeta}, lhs, rhs);
    }
    return report;
}

IVPSolveResult solve_ivp(const IVPProblem& p, std::optional<GridFunction> x0,
                         double tol, std::size_t max_iter,
                         std::vector<double> t_grid) {
    p.validate();
    GridFunction start = x0 ? std::move(*x0) : p.homogeneous_part();
    auto metric = sup_parametric_metric(p.S, p.n);
    auto map = [&p](const GridFunction& Y) { return apply_ivp_operator(p, Y); };
    auto trace = iterate(map, std::move(start), metric, std::move(t_grid), tol, max_iter);
    if (!p.contraction_guard_ok()) {
        std::ostringstream msg;
        msg << "w*S = " << std::abs(p.w) * p.S
            << " exceeds pi/2: contraction transfer not guaranteed";
        trace.warnings.push_back(msg.str());
    }
    GridFunction solution = trace.iterates.back();
    return {std::move(solution), std::move(trace)};
}

OdeResidual ode_residual(const IVPProblem& p, const GridFunction& Y) {
    p.validate();
    if (Y.s_max() != p.S || Y.n() != p.n)
        throw std::domain_error("ode_residual: Y not on the problem grid");

    const std::size_t n = p.n;
    const double h = Y.step();
    OdeResidual res;
    for (std::size_t i = 1; i < n; ++i) {
        double d2 = (Y[i - 1] - 2.0 * Y[i] + Y[i + 1]) / (h * h);
        double r = std::abs(d2 + p.w * p.w * Y[i] - p.g(Y.node(i), Y[i]));
        res.interior_max = std::max(res.interior_max, r);
    }
    res.ic_value_gap = std::abs(Y[0] - p.l1);
    double slope = (-3.0 * Y[0] + 4.0 * Y[1] - Y[2]) / (2.0 * h);
    res.ic_slope_gap = std::abs(slope - p.l2);
    return res;
}

}  // namespace gpmfix
