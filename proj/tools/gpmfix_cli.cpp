// Command-line front end: axiom and contraction checking, scalar iteration
// demos, the two Green's-function ODE solvers, and the closed-form
// reproduction of the scalar contraction example's tables.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpmfix/checks.hpp"
#include "gpmfix/engine.hpp"
#include "gpmfix/expr.hpp"
#include "gpmfix/grid_function.hpp"
#include "gpmfix/ivp.hpp"
#include "gpmfix/pbvp.hpp"

namespace {

using nlohmann::json;
using namespace gpmfix;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

struct RunConfig {
    // sampling
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    double point_lo = -10.0, point_hi = 10.0;
    double t_lo = 0.01, t_hi = 10.0;
    double check_tol = 1e-9;
    // iteration
    std::vector<double> t_grid = {0.5, 1.0, 2.0};
    double tol = 1e-10;
    std::size_t max_iter = 10000;
    double x0 = 1.0;
    // op / metric / contraction
    std::string op = "max";
    std::string op_expr;
    std::string metric = "power";  // power | sqrt | expr
    double p = 0.5;
    std::string metric_expr;
    std::string combine = "sum";
    std::string map_expr;
    double kappa = -1.0;
    double phi_factor = -1.0;
    // ivp / pbvp
    std::string family;
    double w = 1.0, l1 = 0.0, l2 = 0.0, S = 1.0;
    double a = 1.5, b = 1.0;
    std::size_t n = 1000;
    std::string mode = "consistent";
    std::string g_expr;
    std::string F_expr;
    double start_const = 0.0;
    double solve_tol = 1e-8;
    // example reproduction
    std::vector<double> t_fixed = {1.0, 30.0};
    std::vector<double> x_fixed = {0.5, 1.8};
    double x_max = 2.0;
    double t_min = 1.0, t_max = 30.0;
    std::size_t steps = 21;
    // output
    std::string out = "gpmfix";
};

#define GPMFIX_CFG_FIELD(name) \
    if (j.contains(#name)) j.at(#name).get_to(cfg.name)

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j = json::parse(in);
    GPMFIX_CFG_FIELD(samples);
    GPMFIX_CFG_FIELD(seed);
    GPMFIX_CFG_FIELD(point_lo);
    GPMFIX_CFG_FIELD(point_hi);
    GPMFIX_CFG_FIELD(t_lo);
    GPMFIX_CFG_FIELD(t_hi);
    GPMFIX_CFG_FIELD(check_tol);
    GPMFIX_CFG_FIELD(t_grid);
    GPMFIX_CFG_FIELD(tol);
    GPMFIX_CFG_FIELD(max_iter);
    GPMFIX_CFG_FIELD(x0);
    GPMFIX_CFG_FIELD(op);
    GPMFIX_CFG_FIELD(op_expr);
    GPMFIX_CFG_FIELD(metric);
    GPMFIX_CFG_FIELD(p);
    GPMFIX_CFG_FIELD(metric_expr);
    GPMFIX_CFG_FIELD(combine);
    GPMFIX_CFG_FIELD(map_expr);
    GPMFIX_CFG_FIELD(kappa);
    GPMFIX_CFG_FIELD(phi_factor);
    GPMFIX_CFG_FIELD(family);
    GPMFIX_CFG_FIELD(w);
    GPMFIX_CFG_FIELD(l1);
    GPMFIX_CFG_FIELD(l2);
    GPMFIX_CFG_FIELD(S);
    GPMFIX_CFG_FIELD(a);
    GPMFIX_CFG_FIELD(b);
    GPMFIX_CFG_FIELD(n);
    GPMFIX_CFG_FIELD(mode);
    GPMFIX_CFG_FIELD(g_expr);
    GPMFIX_CFG_FIELD(F_expr);
    GPMFIX_CFG_FIELD(start_const);
    GPMFIX_CFG_FIELD(solve_tol);
    GPMFIX_CFG_FIELD(t_fixed);
    GPMFIX_CFG_FIELD(x_fixed);
    GPMFIX_CFG_FIELD(x_max);
    GPMFIX_CFG_FIELD(t_min);
    GPMFIX_CFG_FIELD(t_max);
    GPMFIX_CFG_FIELD(steps);
    GPMFIX_CFG_FIELD(out);
}

#undef GPMFIX_CFG_FIELD

Sampler make_sampler(const RunConfig& cfg) {
    Sampler s;
    s.count = cfg.samples;
    s.seed = cfg.seed;
    s.point_lo = cfg.point_lo;
    s.point_hi = cfg.point_hi;
    s.t_lo = cfg.t_lo;
    s.t_hi = cfg.t_hi;
    s.validate();
    return s;
}

CombineOp make_combine(const std::string& name, const std::string& expr) {
    if (name == "max") return CombineOp::max_op();
    if (name == "sum") return CombineOp::sum_op();
    if (name == "expr") {
        auto ast = std::make_shared<ExprAst>(ExprAst::parse(expr, {"a", "b"}));
        return CombineOp::custom_op(
            [ast](double a, double b) {
                return ast->eval({{"a", a}, {"b", b}});
            },
            expr);
    }
    throw std::domain_error("unknown combine op: " + name);
}

ParametricMetric<double> make_scalar_metric(const RunConfig& cfg) {
    if (cfg.metric == "power") return power_metric(cfg.p);
    if (cfg.metric == "sqrt") return sqrt_metric();
    if (cfg.metric == "expr") {
        auto ast = std::make_shared<ExprAst>(
            ExprAst::parse(cfg.metric_expr, {"x", "y", "t"}));
        auto dist = [ast](const double& x, const double& y, double t) {
            return ast->eval({{"x", x}, {"y", y}, {"t", t}});
        };
        return ParametricMetric<double>(dist, make_combine(cfg.combine, ""),
                                        "scalar");
    }
    throw std::domain_error("unknown metric: " + cfg.metric);
}

std::function<double(double)> make_scalar_map(const RunConfig& cfg) {
    if (!cfg.map_expr.empty()) {
        auto ast = std::make_shared<ExprAst>(ExprAst::parse(cfg.map_expr, {"x"}));
        return [ast](double x) { return ast->eval({{"x", x}}); };
    }
    if (cfg.family == "example2") return [](double x) { return x / 16.0; };
    throw std::domain_error("iterate/check-contraction needs --map or --family example2");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit_report(const CheckReport& report, const RunConfig& cfg) {
    auto text = report.to_json();
    write_file(cfg.out + "-report.json", text);
    std::cout << text << "\n";
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

int cmd_check_op(const RunConfig& cfg) {
    auto op = make_combine(cfg.op, cfg.op_expr);
    emit_report(check_combine_axioms(op, make_sampler(cfg), cfg.check_tol), cfg);
    return kExitOk;
}

int cmd_check_metric(const RunConfig& cfg) {
    auto m = make_scalar_metric(cfg);
    emit_report(check_metric_axioms(m, make_sampler(cfg), cfg.check_tol), cfg);
    return kExitOk;
}

int cmd_check_contraction(const RunConfig& cfg) {
    auto map = make_scalar_map(cfg);
    RunConfig local = cfg;
    if (cfg.family == "example2" && cfg.metric == "power" && cfg.metric_expr.empty())
        local.metric = "sqrt";
    auto m = make_scalar_metric(local);
    ContractionSpec spec =
        cfg.kappa >= 0.0
            ? ContractionSpec::banach(cfg.kappa)
            : ContractionSpec::boyd_wong(GaugeFunction::linear(
                  cfg.phi_factor >= 0.0 ? cfg.phi_factor : 0.5));
    emit_report(check_contraction(map, m, spec, make_sampler(cfg), cfg.check_tol),
                cfg);
    return kExitOk;
}

template <class Trace>
json run_summary(const Trace& trace) {
    json summary = trace.to_json();
    try {
        summary["estimated_factor"] = estimate_contraction_factor(trace);
    } catch (const std::domain_error&) {
        summary["estimated_factor"] = nullptr;
    }
    if (!trace.residuals.empty())
        summary["final_residual"] = trace.sup_residual(trace.residuals.size() - 1);
    return summary;
}

int finish_solve(const json& summary, IterationStatus status, const RunConfig& cfg) {
    write_file(cfg.out + "-summary.json", summary.dump(2));
    std::cout << summary.dump(2) << "\n";
    return status == IterationStatus::Converged ? kExitOk : kExitNotConverged;
}

int cmd_iterate(const RunConfig& cfg) {
    auto map = make_scalar_map(cfg);
    RunConfig local = cfg;
    if (cfg.family == "example2" && cfg.metric == "power" && cfg.metric_expr.empty())
        local.metric = "sqrt";
    auto m = make_scalar_metric(local);
    auto trace = iterate(map, cfg.x0, m, cfg.t_grid, cfg.tol, cfg.max_iter);
    write_file(cfg.out + "-trace.csv", trace.residuals_csv());

    std::ostringstream pts;
    pts.precision(17);
    pts << "n,x\n";
    for (std::size_t i = 0; i < trace.iterates.size(); ++i)
        pts << i << "," << trace.iterates[i] << "\n";
    write_file(cfg.out + "-iterates.csv", pts.str());

    json summary = run_summary(trace);
    summary["final_iterate"] = trace.iterates.back();
    return finish_solve(summary, trace.status, cfg);
}

IVPProblem make_ivp(const RunConfig& cfg) {
    IVPProblem p;
    p.w = cfg.w;
    p.l1 = cfg.l1;
    p.l2 = cfg.l2;
    p.S = cfg.S;
    p.n = cfg.n;
    p.gauge = GaugeFunction::linear(cfg.phi_factor >= 0.0 ? cfg.phi_factor : 0.5);
    if (cfg.mode == "consistent") {
        p.mode = HomogeneousMode::Consistent;
    } else if (cfg.mode == "verbatim") {
        p.mode = HomogeneousMode::Verbatim;
    } else {
        throw std::domain_error("mode must be consistent or verbatim");
    }
    if (cfg.family == "ivp-homogeneous") {
        p.g = [](double, double) { return 0.0; };
    } else if (cfg.family == "ivp-manufactured") {
        p.w = 1.0;
        p.l1 = 0.0;
        p.l2 = 0.0;
        p.S = 1.0;
        p.g = [](double x, double Y) { return 2.0 + x * x + 0.5 * (Y - x * x); };
    } else if (!cfg.g_expr.empty()) {
        auto ast = std::make_shared<ExprAst>(ExprAst::parse(cfg.g_expr, {"y", "u"}));
        p.g = [ast](double y, double u) { return ast->eval({{"y", y}, {"u", u}}); };
    } else {
        throw std::domain_error("solve-ivp needs --g or --family");
    }
    return p;
}

int cmd_solve_ivp(const RunConfig& cfg) {
    auto p = make_ivp(cfg);
    auto condition = check_ivp_condition(p, make_sampler(cfg), cfg.check_tol);
    auto res = solve_ivp(p, std::nullopt, cfg.solve_tol, cfg.max_iter, cfg.t_grid);
    write_file(cfg.out + "-solution.csv", res.solution.to_csv());
    write_file(cfg.out + "-trace.csv", res.trace.residuals_csv());

    json summary = run_summary(res.trace);
    summary["condition_check"] = json::parse(condition.to_json());
    auto resid = ode_residual(p, res.solution);
    summary["ode_residual"] = {{"interior_max", resid.interior_max},
                               {"ic_value_gap", resid.ic_value_gap},
                               {"ic_slope_gap", resid.ic_slope_gap}};
    return finish_solve(summary, res.trace.status, cfg);
}

PBVPProblem make_pbvp(const RunConfig& cfg) {
    PBVPProblem p;
    p.S = cfg.S;
    p.a = cfg.a;
    p.b = cfg.b;
    p.n = cfg.n;
    if (cfg.family == "pbvp-constant") {
        p.F = [](double, double u) { return -u + 2.0; };
    } else if (cfg.family == "pbvp-sinusoid") {
        p.F = [](double y, double u) {
            double two_pi = 2.0 * 3.14159265358979323846;
            return two_pi * std::cos(two_pi * y) - (u - std::sin(two_pi * y));
        };
    } else if (!cfg.F_expr.empty()) {
        auto ast = std::make_shared<ExprAst>(ExprAst::parse(cfg.F_expr, {"y", "u"}));
        p.F = [ast](double y, double u) { return ast->eval({{"y", y}, {"u", u}}); };
    } else {
        throw std::domain_error("solve-pbvp needs --F or --family");
    }
    return p;
}

int cmd_solve_pbvp(const RunConfig& cfg) {
    auto p = make_pbvp(cfg);
    auto condition = check_F_condition(p, make_sampler(cfg), cfg.check_tol);
    auto start = GridFunction::constant(p.S, p.n, cfg.start_const);
    auto lower = verify_lower_solution(p, start);
    auto upper = verify_upper_solution(p, start);
    auto res = solve_pbvp(p, start, cfg.solve_tol, cfg.max_iter, cfg.t_grid);
    write_file(cfg.out + "-solution.csv", res.solution.to_csv());
    write_file(cfg.out + "-trace.csv", res.trace.residuals_csv());

    json summary = run_summary(res.trace);
    summary["condition_check"] = json::parse(condition.to_json());
    summary["start_is_lower_solution"] = lower.pass();
    summary["start_is_upper_solution"] = upper.pass();
    summary["pbvp_residual"] = pbvp_residual(p, res.solution);
    return finish_solve(summary, res.trace.status, cfg);
}

int cmd_reproduce_example2(const RunConfig& cfg) {
    if (cfg.steps < 2) throw std::domain_error("steps must be >= 2");
    if (!(cfg.x_max > 0.0) || !(cfg.t_min > 0.0) || !(cfg.t_max > cfg.t_min))
        throw std::domain_error("ranges must be positive");

    // H(x,t) = rho(Ta, Tmu, t) = sqrt(x)/(4t); G(x,t) = phi(rho) = sqrt(x)/(2t)
    auto H = [](double x, double t) { return std::sqrt(x) / (4.0 * t); };
    auto G = [](double x, double t) { return std::sqrt(x) / (2.0 * t); };

    std::ostringstream by_x;
    by_x << "x";
    for (double t : cfg.t_fixed) by_x << ",H_t" << t << ",G_t" << t;
    by_x << "\n";
    for (std::size_t i = 0; i < cfg.steps; ++i) {
        double x = cfg.x_max * static_cast<double>(i) /
                   static_cast<double>(cfg.steps - 1);
        by_x << fmt(x);
        for (double t : cfg.t_fixed) by_x << "," << fmt(H(x, t)) << "," << fmt(G(x, t));
        by_x << "\n";
    }
    write_file(cfg.out + "-vs-x.csv", by_x.str());

    std::ostringstream by_t;
    by_t << "t";
    for (double x : cfg.x_fixed) by_t << ",H_x" << x << ",G_x" << x;
    by_t << "\n";
    for (std::size_t i = 0; i < cfg.steps; ++i) {
        double t = cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) /
                                   static_cast<double>(cfg.steps - 1);
        by_t << fmt(t);
        for (double x : cfg.x_fixed) by_t << "," << fmt(H(x, t)) << "," << fmt(G(x, t));
        by_t << "\n";
    }
    write_file(cfg.out + "-vs-t.csv", by_t.str());

    std::cout << "wrote " << cfg.out << "-vs-x.csv and " << cfg.out
              << "-vs-t.csv\n";
    return kExitOk;
}

void add_sampler_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--samples", cfg.samples, "sample count");
    cmd->add_option("--seed", cfg.seed, "PRNG seed");
    cmd->add_option("--point-lo", cfg.point_lo, "point box lower bound");
    cmd->add_option("--point-hi", cfg.point_hi, "point box upper bound");
    cmd->add_option("--t-lo", cfg.t_lo, "t range lower bound");
    cmd->add_option("--t-hi", cfg.t_hi, "t range upper bound");
    cmd->add_option("--check-tol", cfg.check_tol, "inequality tolerance");
}

void add_metric_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--metric", cfg.metric, "power | sqrt | expr");
    cmd->add_option("--p", cfg.p, "exponent for the power metric");
    cmd->add_option("--metric-expr", cfg.metric_expr,
                    "distance expression in x, y, t");
    cmd->add_option("--combine", cfg.combine, "combine op for expr metric");
}

void add_iteration_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--t-grid", cfg.t_grid, "t grid for residuals");
    cmd->add_option("--tol", cfg.tol, "convergence tolerance");
    cmd->add_option("--max-iter", cfg.max_iter, "iteration cap");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    // config file values load first so flags can override them
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(argv[i + 1], cfg);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
        }
    }

    CLI::App app{"fixed-point solvers and axiom checkers for generalized "
                 "parametric metric spaces"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");

    auto* check_op = app.add_subcommand("check-op", "check combine-operation axioms");
    check_op->add_option("--op", cfg.op, "max | sum | expr");
    check_op->add_option("--op-expr", cfg.op_expr, "expression in a, b");
    add_sampler_flags(check_op, cfg);
    check_op->add_option("--out", cfg.out, "output path prefix");

    auto* check_metric = app.add_subcommand("check-metric", "check metric axioms");
    add_metric_flags(check_metric, cfg);
    add_sampler_flags(check_metric, cfg);
    check_metric->add_option("--out", cfg.out, "output path prefix");

    auto* check_contr =
        app.add_subcommand("check-contraction", "check a contraction hypothesis");
    check_contr->add_option("--map", cfg.map_expr, "self-map expression in x");
    check_contr->add_option("--family", cfg.family, "named family (example2)");
    check_contr->add_option("--kappa", cfg.kappa, "Banach constant");
    check_contr->add_option("--phi-factor", cfg.phi_factor, "linear gauge slope");
    add_metric_flags(check_contr, cfg);
    add_sampler_flags(check_contr, cfg);
    check_contr->add_option("--out", cfg.out, "output path prefix");

    auto* it = app.add_subcommand("iterate", "scalar successive approximation");
    it->add_option("--map", cfg.map_expr, "self-map expression in x");
    it->add_option("--family", cfg.family, "named family (example2)");
    it->add_option("--x0", cfg.x0, "starting point");
    add_metric_flags(it, cfg);
    add_iteration_flags(it, cfg);
    it->add_option("--out", cfg.out, "output path prefix");

    auto* ivp = app.add_subcommand("solve-ivp", "second-order IVP solver");
    ivp->add_option("--family", cfg.family,
                    "ivp-homogeneous | ivp-manufactured");
    ivp->add_option("--g", cfg.g_expr, "forcing expression in y, u");
    ivp->add_option("--w", cfg.w, "angular frequency");
    ivp->add_option("--l1", cfg.l1, "Y(0)");
    ivp->add_option("--l2", cfg.l2, "Y'(0)");
    ivp->add_option("--S", cfg.S, "interval length");
    ivp->add_option("--n", cfg.n, "grid size");
    ivp->add_option("--mode", cfg.mode, "consistent | verbatim");
    ivp->add_option("--phi-factor", cfg.phi_factor, "gauge slope for the condition check");
    ivp->add_option("--solve-tol", cfg.solve_tol, "convergence tolerance");
    add_iteration_flags(ivp, cfg);
    add_sampler_flags(ivp, cfg);
    ivp->add_option("--out", cfg.out, "output path prefix");

    auto* pbvp = app.add_subcommand("solve-pbvp", "first-order periodic BVP solver");
    pbvp->add_option("--family", cfg.family, "pbvp-constant | pbvp-sinusoid");
    pbvp->add_option("--F", cfg.F_expr, "right-hand side expression in y, u");
    pbvp->add_option("--a", cfg.a, "shift coefficient");
    pbvp->add_option("--b", cfg.b, "one-sided slope bound (b < a)");
    pbvp->add_option("--S", cfg.S, "period");
    pbvp->add_option("--n", cfg.n, "grid size");
    pbvp->add_option("--start", cfg.start_const, "constant starting iterate");
    pbvp->add_option("--solve-tol", cfg.solve_tol, "convergence tolerance");
    add_iteration_flags(pbvp, cfg);
    add_sampler_flags(pbvp, cfg);
    pbvp->add_option("--out", cfg.out, "output path prefix");

    auto* repro = app.add_subcommand("reproduce-example2",
                                     "emit the scalar example's H/G tables");
    repro->add_option("--t-fixed", cfg.t_fixed, "fixed t values for the x sweep");
    repro->add_option("--x-fixed", cfg.x_fixed, "fixed x values for the t sweep");
    repro->add_option("--x-max", cfg.x_max, "x sweep upper bound");
    repro->add_option("--t-min", cfg.t_min, "t sweep lower bound");
    repro->add_option("--t-max", cfg.t_max, "t sweep upper bound");
    repro->add_option("--steps", cfg.steps, "rows per sweep");
    repro->add_option("--out", cfg.out, "output path prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check_op->parsed()) return cmd_check_op(cfg);
        if (check_metric->parsed()) return cmd_check_metric(cfg);
        if (check_contr->parsed()) return cmd_check_contraction(cfg);
        if (it->parsed()) return cmd_iterate(cfg);
        if (ivp->parsed()) return cmd_solve_ivp(cfg);
        if (pbvp->parsed()) return cmd_solve_pbvp(cfg);
        if (repro->parsed()) return cmd_reproduce_example2(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
