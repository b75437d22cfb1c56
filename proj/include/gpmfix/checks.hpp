#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "gpmfix/combine.hpp"
#include "gpmfix/contraction.hpp"
#include "gpmfix/metric.hpp"
#include "gpmfix/report.hpp"
#include "gpmfix/sampler.hpp"

namespace gpmfix {

inline constexpr const char* kSampledContinuityNote =
    "continuity checked along sampled convergent sequences only: a "
    "necessary-condition check, not a proof";

/// Tests the combine-operation axioms on sampled nonnegative triples:
/// identity, monotonicity, commutativity, associativity, sampled sequential
/// continuity, strict joint monotonicity, and a o a >= a. Max's failure of
/// the shared-operand strictness variant on ties is recorded as a note, not
/// a violation.
CheckReport check_combine_axioms(const CombineOp& op, const Sampler& s, double tol);

namespace detail {
inline std::vector<double> no_description() { return {}; }
}  // namespace detail

/// Tests the generalized-parametric-metric axioms over sampled triples:
/// rho(x,x,t) = 0, symmetry, the split triangle inequality, and
/// non-increase in t. The converse of rho1 (rho = 0 implies x = y) is not
/// sample-checkable and is flagged as a note.
template <class Point, class Gen, class Desc>
CheckReport check_metric_axioms(const ParametricMetric<Point>& m, const Sampler& s,
                                double tol, Gen&& gen, Desc&& describe) {
    s.validate();
    CheckReport report;
    report.axiom = "metric-axioms";
    report.samples = s.count;
    report.tol = tol;
    report.notes.push_back(
        "rho1 checked one-directionally; rho = 0 => x = y is not sample-checkable");

    auto rng = s.rng();
    for (std::size_t i = 0; i < s.count; ++i) {
        Point x = gen(rng);
        Point y = gen(rng);
        Point z = gen(rng);
        double t = rng.uniform(s.t_lo, s.t_hi);
        double t1 = rng.uniform(s.t_lo, s.t_hi);
        double t2 = rng.uniform(s.t_lo, s.t_hi);

        auto inputs = [&](std::initializer_list<double> ts) {
            std::vector<double> v = describe(x, y, z);
            v.insert(v.end(), ts);
            return v;
        };

        double self = m(x, x, t);
        if (self > tol) report.record("rho1", inputs({t}), self, 0.0);

        double dxy = m(x, y, t);
        double dyx = m(y, x, t);
        if (std::abs(dxy - dyx) > tol)
            report.record("rho2", inputs({t}), dxy, dyx);

        double lhs = m(x, y, t1 + t2);
        double rhs = m.combine()(m(x, z, t1), m(y, z, t2));
        if (lhs > rhs + tol) report.record("rho3", inputs({t1, t2}), lhs, rhs);

        double ta = std::min(t1, t2);
        double tb = std::max(t1, t2);
        if (ta < tb) {
            double da = m(x, y, ta);
            double db = m(x, y, tb);
            if (db > da + tol)
                report.record("t-monotone", inputs({ta, tb}), db, da);
        }
    }
    return report;
}

/// Scalar-domain convenience: points drawn from the sampler's box.
inline CheckReport check_metric_axioms(const ParametricMetric<double>& m,
                                       const Sampler& s, double tol) {
    return check_metric_axioms(
        m, s, tol,
        [&s](SplitMix64& rng) { return rng.uniform(s.point_lo, s.point_hi); },
        [](double x, double y, double z) { return std::vector<double>{x, y, z}; });
}

/// Tests a contraction hypothesis on sampled pairs: for Banach{kappa},
/// rho(Tx, Ty, t) <= kappa * rho(x, y, t); for BoydWong{phi},
/// rho(Tx, Ty, t) <= phi(rho(x, y, t)) along with phi(s) < s on the induced
/// distances. Records the maximum observed lhs/rhs ratio.
template <class Point, class Map, class Gen, class Desc>
CheckReport check_contraction(Map&& map, const ParametricMetric<Point>& m,
                              const ContractionSpec& spec, const Sampler& s,
                              double tol, Gen&& gen, Desc&& describe) {
    s.validate();
    CheckReport report;
    report.axiom = spec.is_banach() ? "banach-contraction" : "boyd-wong-contraction";
    report.samples = s.count;
    report.tol = tol;

    auto rng = s.rng();
    double max_ratio = 0.0;
    bool any_ratio = false;
    for (std::size_t i = 0; i < s.count; ++i) {
        Point x = gen(rng);
        Point y = gen(rng);
        double t = rng.uniform(s.t_lo, s.t_hi);

        double dist = m(x, y, t);
        double lhs = m(map(x), map(y), t);
        double rhs = spec.bound(dist);

        std::vector<double> in = describe(x, y, x);
        in.push_back(t);
        if (lhs > rhs + tol) report.record("contraction", in, lhs, rhs);
        if (rhs > 0.0) {
            max_ratio = std::max(max_ratio, lhs / rhs);
            any_ratio = true;
        } else if (lhs > tol) {
            report.record("contraction", in, lhs, rhs);
        }
        if (!spec.is_banach() && dist > tol) {
            double phi = spec.gauge()(dist);
            if (!(phi < dist))
                report.record("gauge-below-identity", in, phi, dist);
        }
    }
    if (any_ratio) report.max_ratio = max_ratio;
    return report;
}

/// Scalar-domain convenience.
template <class Map>
CheckReport check_contraction(Map&& map, const ParametricMetric<double>& m,
                              const ContractionSpec& spec, const Sampler& s,
                              double tol) {
    return check_contraction(
        std::forward<Map>(map), m, spec, s, tol,
        [&s](SplitMix64& rng) { return rng.uniform(s.point_lo, s.point_hi); },
        [](double x, double y, double) { return std::vector<double>{x, y}; });
}

}  // namespace gpmfix
