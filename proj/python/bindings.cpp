// Python bindings for the core operations: metrics, axiom checks, scalar
// iteration, and the two Green's-kernel ODE solvers.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "gpmfix/checks.hpp"
#include "gpmfix/engine.hpp"
#include "gpmfix/grid_function.hpp"
#include "gpmfix/ivp.hpp"
#include "gpmfix/pbvp.hpp"

namespace py = pybind11;
using namespace gpmfix;

namespace {

Sampler make_sampler(std::size_t samples, std::uint64_t seed, double point_lo,
                     double point_hi, double t_lo, double t_hi) {
    Sampler s;
    s.count = samples;
    s.seed = seed;
    s.point_lo = point_lo;
    s.point_hi = point_hi;
    s.t_lo = t_lo;
    s.t_hi = t_hi;
    s.validate();
    return s;
}

py::dict report_dict(const CheckReport& report) {
    py::module json = py::module::import("json");
    return json.attr("loads")(report.to_json());
}

template <class Point>
py::dict trace_dict(const IterationTrace<Point>& trace) {
    py::dict d;
    d["status"] = to_string(trace.status);
    d["iterations"] = trace.iteration_count();
    d["converged_at"] = trace.converged_at;
    d["t_grid"] = trace.t_grid;
    d["residuals"] = trace.residuals;
    if (trace.monotone_nondecreasing)
        d["monotone_nondecreasing"] = *trace.monotone_nondecreasing;
    if (trace.monotone_nonincreasing)
        d["monotone_nonincreasing"] = *trace.monotone_nonincreasing;
    d["warnings"] = trace.warnings;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gpmfix, m) {
    m.doc() = "fixed-point machinery for generalized parametric metric spaces";

    py::class_<ParametricMetric<double>>(m, "ScalarMetric")
        .def("__call__", &ParametricMetric<double>::operator(), py::arg("x"),
             py::arg("y"), py::arg("t"));

    m.def("power_metric", &power_metric, py::arg("p"),
          "rho(x, y, t) = |x - y|^p / t for 0 < p < 1");
    m.def("sqrt_metric", &sqrt_metric, "rho(x, y, t) = sqrt(|x - y|) / t");

    m.def(
        "check_metric_axioms",
        [](const ParametricMetric<double>& metric, std::size_t samples,
           std::uint64_t seed, double tol, double point_lo, double point_hi,
           double t_lo, double t_hi) {
            auto s = make_sampler(samples, seed, point_lo, point_hi, t_lo, t_hi);
            return report_dict(check_metric_axioms(metric, s, tol));
        },
        py::arg("metric"), py::arg("samples") = 1000, py::arg("seed") = 1,
        py::arg("tol") = 1e-9, py::arg("point_lo") = -10.0,
        py::arg("point_hi") = 10.0, py::arg("t_lo") = 0.01,
        py::arg("t_hi") = 10.0);

    m.def(
        "check_combine_axioms",
        [](const std::string& op, std::size_t samples, std::uint64_t seed,
           double tol) {
            CombineOp combine =
                op == "max" ? CombineOp::max_op() : CombineOp::sum_op();
            if (op != "max" && op != "sum")
                throw py::value_error("op must be 'max' or 'sum'");
            Sampler s;
            s.count = samples;
            s.seed = seed;
            return report_dict(check_combine_axioms(combine, s, tol));
        },
        py::arg("op"), py::arg("samples") = 1000, py::arg("seed") = 1,
        py::arg("tol") = 1e-9);

    m.def(
        "check_contraction",
        [](const std::function<double(double)>& map,
           const ParametricMetric<double>& metric, std::optional<double> kappa,
           double phi_factor, std::size_t samples, std::uint64_t seed, double tol,
           double point_lo, double point_hi) {
            ContractionSpec spec =
                kappa ? ContractionSpec::banach(*kappa)
                      : ContractionSpec::boyd_wong(GaugeFunction::linear(phi_factor));
            auto s = make_sampler(samples, seed, point_lo, point_hi, 0.01, 10.0);
            return report_dict(check_contraction(map, metric, spec, s, tol));
        },
        py::arg("map"), py::arg("metric"), py::arg("kappa") = std::nullopt,
        py::arg("phi_factor") = 0.5, py::arg("samples") = 1000,
        py::arg("seed") = 1, py::arg("tol") = 1e-9, py::arg("point_lo") = -10.0,
        py::arg("point_hi") = 10.0);

    m.def(
        "iterate",
        [](const std::function<double(double)>& map, double x0,
           const ParametricMetric<double>& metric, std::vector<double> t_grid,
           double tol, std::size_t max_iter) {
            auto trace = iterate(map, x0, metric, std::move(t_grid), tol, max_iter);
            py::dict d = trace_dict(trace);
            d["iterates"] = trace.iterates;
            try {
                d["estimated_factor"] = estimate_contraction_factor(trace);
            } catch (const std::domain_error&) {
                d["estimated_factor"] = py::none();
            }
            return d;
        },
        py::arg("map"), py::arg("x0"), py::arg("metric"),
        py::arg("t_grid") = std::vector<double>{0.5, 1.0, 2.0},
        py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init<double, std::vector<double>>(), py::arg("s_max"),
             py::arg("values"))
        .def_static("constant", &GridFunction::constant, py::arg("s_max"),
                    py::arg("n"), py::arg("value"))
        .def_static(
            "sample",
            [](double s_max, std::size_t n, const std::function<double(double)>& fn) {
                return GridFunction::sample(s_max, n, fn);
            },
            py::arg("s_max"), py::arg("n"), py::arg("fn"))
        .def_property_readonly("s_max", &GridFunction::s_max)
        .def_property_readonly("n", &GridFunction::n)
        .def_property_readonly("values", &GridFunction::values)
        .def("node", &GridFunction::node, py::arg("i"))
        .def("__call__", &GridFunction::eval_interp, py::arg("y"))
        .def("sup_diff", &GridFunction::sup_diff, py::arg("other"))
        .def("to_csv", &GridFunction::to_csv);

    m.def("greens_ivp", &greens_ivp, py::arg("eta"), py::arg("u"), py::arg("w"),
          "sinusoidal IVP kernel (1/w) sin(w (eta - u)) for u <= eta");
    m.def("greens_periodic", &greens_periodic, py::arg("y"), py::arg("z"),
          py::arg("a"), py::arg("S"), "periodic exponential BVP kernel");

    m.def(
        "solve_ivp",
        [](double w, double l1, double l2, double S,
           const std::function<double(double, double)>& g, std::size_t n,
           double tol, const std::string& mode) {
            IVPProblem p;
            p.w = w;
            p.l1 = l1;
            p.l2 = l2;
            p.S = S;
            p.g = g;
            p.n = n;
            p.mode = mode == "verbatim" ? HomogeneousMode::Verbatim
                                        : HomogeneousMode::Consistent;
            auto res = solve_ivp(p, std::nullopt, tol);
            auto resid = ode_residual(p, res.solution);
            py::dict info = trace_dict(res.trace);
            info["ode_residual"] = resid.interior_max;
            return py::make_tuple(res.solution, info);
        },
        py::arg("w"), py::arg("l1"), py::arg("l2"), py::arg("S"), py::arg("g"),
        py::arg("n") = 1000, py::arg("tol") = 1e-8,
        py::arg("mode") = "consistent",
        "Solve Y'' + w^2 Y = g(y, Y), Y(0) = l1, Y'(0) = l2 on [0, S]; "
        "returns (solution, info)");

    m.def(
        "solve_pbvp",
        [](double S, double a, double b,
           const std::function<double(double, double)>& F, std::size_t n,
           double start, double tol) {
            PBVPProblem p;
            p.S = S;
            p.a = a;
            p.b = b;
            p.F = F;
            p.n = n;
            auto res = solve_pbvp(p, GridFunction::constant(S, n, start), tol);
            py::dict info = trace_dict(res.trace);
            if (res.estimated_factor)
                info["estimated_factor"] = *res.estimated_factor;
            info["pbvp_residual"] = pbvp_residual(p, res.solution);
            return py::make_tuple(res.solution, info);
        },
        py::arg("S"), py::arg("a"), py::arg("b"), py::arg("F"),
        py::arg("n") = 1000, py::arg("start") = 0.0, py::arg("tol") = 1e-8,
        "Solve u' = F(y, u) with u(0) = u(S) from a constant starting iterate "
        "comparable with its image; returns (solution, info)");

    py::register_exception<IncomparableStartError>(m, "IncomparableStartError");
}
