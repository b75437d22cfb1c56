#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpmfix/ivp.hpp"

using namespace gpmfix;

namespace {

IVPProblem homogeneous_problem() {
    IVPProblem p;
    p.w = 1.0;
    p.l1 = 2.0;
    p.l2 = 3.0;
    p.S = 1.0;
    p.n = 1000;
    p.g = [](double, double) { return 0.0; };
    return p;
}

// Y* = x^2 solves Y'' + Y = 2 + x^2 = g(x, Y*) with Y(0) = Y'(0) = 0.
IVPProblem manufactured_problem(std::size_t n = 1000) {
    IVPProblem p;
    p.w = 1.0;
    p.l1 = 0.0;
    p.l2 = 0.0;
    p.S = 1.0;
    p.n = n;
    p.g = [](double x, double Y) { return 2.0 + x * x + 0.5 * (Y - x * x); };
    p.gauge = GaugeFunction::linear(0.5);
    return p;
}

}  // namespace

TEST_CASE("greens_ivp kernel values") {
    CHECK(greens_ivp(1.0, 2.0, 5.0) == 0.0);   // Heaviside cutoff
    CHECK(greens_ivp(1.0, 1.0, 5.0) == 0.0);   // sin(0)
    CHECK(greens_ivp(std::numbers::pi / 2.0, 0.0, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(greens_ivp(1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("kernel integral identity: int_0^Y G(Y,u) du = (1-cos(wY))/w^2") {
    // independent oracle: composite Simpson over [0, Y]
    for (double Y : {0.5, 1.0, 1.5}) {
        const int n = 1000;
        double h = Y / n;
        double sum = greens_ivp(Y, 0.0, 1.0) + greens_ivp(Y, Y, 1.0);
        for (int i = 1; i < n; ++i)
            sum += (i % 2 ? 4.0 : 2.0) * greens_ivp(Y, i * h, 1.0);
        double quad = sum * h / 3.0;
        CHECK(std::abs(quad - (1.0 - std::cos(Y))) < 1e-8);
    }
}

TEST_CASE("operator on homogeneous problem reproduces 2cos+3sin") {
    auto p = homogeneous_problem();
    auto y0 = GridFunction::constant(p.S, p.n, 0.0);
    auto out = apply_ivp_operator(p, y0);
    auto exact = GridFunction::sample(p.S, p.n, [](double y) {
        return 2.0 * std::cos(y) + 3.0 * std::sin(y);
    });
    CHECK(out.sup_diff(exact) < 1e-12);

    // operator constant when forcing vanishes
    auto y1 = GridFunction::constant(p.S, p.n, 42.0);
    CHECK(apply_ivp_operator(p, y1).sup_diff(out) == 0.0);
}

TEST_CASE("verbatim vs consistent homogeneous coefficient") {
    auto p = homogeneous_problem();
    p.w = 2.0;
    p.mode = HomogeneousMode::Verbatim;
    auto verbatim = p.homogeneous_part();
    p.mode = HomogeneousMode::Consistent;
    auto consistent = p.homogeneous_part();
    // they differ when w != 1 (coefficient l2 vs l2/w)
    CHECK(verbatim.sup_diff(consistent) > 0.1);
}

TEST_CASE("manufactured fixed point: operator returns x^2 within quadrature error") {
    auto p = manufactured_problem();
    auto star = GridFunction::sample(p.S, p.n, [](double x) { return x * x; });
    auto out = apply_ivp_operator(p, star);
    CHECK(out.sup_diff(star) <= 1e-6);
}

TEST_CASE("check_ivp_condition") {
    auto p = manufactured_problem();
    Sampler s;
    s.count = 2000;
    s.point_lo = -5.0;
    s.point_hi = 5.0;
    CHECK(check_ivp_condition(p, s).pass());

    auto bad = p;
    bad.g = [](double, double r) { return 2.0 * r; };
    auto rep = check_ivp_condition(bad, s);
    CHECK_FALSE(rep.pass());

    auto constant = p;
    constant.g = [](double y, double) { return std::cos(y); };
    CHECK(check_ivp_condition(constant, s).pass());
}

TEST_CASE("contraction guard note when wS > pi/2") {
    auto p = homogeneous_problem();
    p.S = 4.0;
    Sampler s;
    s.count = 10;
    auto rep = check_ivp_condition(p, s);
    REQUIRE_FALSE(rep.notes.empty());
    CHECK(rep.notes.front().find("pi/2") != std::string::npos);

    auto res = solve_ivp(p);
    CHECK_FALSE(res.trace.warnings.empty());
    CHECK(res.trace.status == IterationStatus::Converged);
}

TEST_CASE("solve_ivp: homogeneous closed form") {
    auto p = homogeneous_problem();
    auto res = solve_ivp(p, GridFunction::constant(p.S, p.n, 0.0));
    REQUIRE(res.trace.status == IterationStatus::Converged);
    auto exact = GridFunction::sample(p.S, p.n, [](double y) {
        return 2.0 * std::cos(y) + 3.0 * std::sin(y);
    });
    CHECK(res.solution.sup_diff(exact) <= 1e-8);
    CHECK(res.trace.iteration_count() <= 2);
}

TEST_CASE("solve_ivp: manufactured solution from zero start") {
    auto p = manufactured_problem();
    auto res = solve_ivp(p, GridFunction::constant(p.S, p.n, 0.0));
    REQUIRE(res.trace.status == IterationStatus::Converged);
    auto star = GridFunction::sample(p.S, p.n, [](double x) { return x * x; });
    CHECK(res.solution.sup_diff(star) <= 1e-5);
}

TEST_CASE("quadrature order: halving h shrinks the error ~4x") {
    auto err = [](std::size_t n) {
        auto p = manufactured_problem(n);
        auto res = solve_ivp(p, GridFunction::constant(p.S, p.n, 0.0), 1e-12);
        auto star = GridFunction::sample(p.S, p.n, [](double x) { return x * x; });
        return res.solution.sup_diff(star);
    };
    double ratio = err(500) / err(1000);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("operator locality: output below mu ignores Y beyond mu") {
    auto p = manufactured_problem(100);
    auto base = GridFunction::sample(p.S, p.n, [](double x) { return x; });
    auto bumped_vals = base.values();
    for (std::size_t i = 61; i <= p.n; ++i) bumped_vals[i] += 10.0;
    GridFunction bumped(p.S, std::move(bumped_vals));
    auto a = apply_ivp_operator(p, base);
    auto b = apply_ivp_operator(p, bumped);
    for (std::size_t i = 0; i <= 60; ++i)
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
}

TEST_CASE("ode_residual") {
    auto p = homogeneous_problem();
    auto exact = GridFunction::sample(p.S, p.n, [](double y) {
        return 2.0 * std::cos(y) + 3.0 * std::sin(y);
    });
    auto res = ode_residual(p, exact);
    CHECK(res.interior_max < 1e-4);
    CHECK(res.ic_value_gap == 0.0);
    CHECK(res.ic_slope_gap < 1e-4);

    IVPProblem trivial = p;
    trivial.l1 = 0.0;
    trivial.l2 = 0.0;
    auto zero = GridFunction::constant(p.S, p.n, 0.0);
    auto rz = ode_residual(trivial, zero);
    CHECK(rz.interior_max == 0.0);
    CHECK(rz.ic_value_gap == 0.0);
    CHECK(rz.ic_slope_gap == 0.0);

    auto pm = manufactured_problem();
    auto star = GridFunction::sample(pm.S, pm.n, [](double x) { return x * x; });
    CHECK(ode_residual(pm, star).interior_max <= 1e-5);
}
