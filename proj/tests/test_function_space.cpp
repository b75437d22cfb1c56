#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpmfix/checks.hpp"
#include "gpmfix/grid_function.hpp"

using namespace gpmfix;

TEST_CASE("grid function construction and nodes") {
    auto f = GridFunction::sample(1.0, 10, [](double y) { return y; });
    CHECK(f.n() == 10);
    CHECK(f.node(0) == 0.0);
    CHECK(f.node(10) == 1.0);
    CHECK(f[5] == doctest::Approx(0.5));
    CHECK_THROWS_AS(GridFunction(1.0, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(GridFunction(0.0, {0.0, 0.5, 1.0}), std::domain_error);
}

TEST_CASE("sup metric on grid functions") {
    auto m = sup_parametric_metric(1.0, 10);
    auto one = GridFunction::constant(1.0, 10, 1.0);
    auto zero = GridFunction::constant(1.0, 10, 0.0);
    CHECK(m(one, zero, 2.0) == doctest::Approx(0.5));
    CHECK(m(one, one, 3.0) == 0.0);
    auto ramp = GridFunction::sample(1.0, 10, [](double y) { return y; });
    CHECK(m(ramp, zero, 1.0) == doctest::Approx(1.0));

    auto other = GridFunction::constant(2.0, 10, 0.0);
    CHECK_THROWS_AS(m(one, other, 1.0), std::domain_error);
}

TEST_CASE("sup metric satisfies the max-combine metric axioms") {
    Sampler s;
    s.count = 2000;
    s.seed = 11;
    auto m = sup_parametric_metric(1.0, 16);
    auto gen = [](SplitMix64& rng) {
        std::vector<double> v(17);
        for (auto& x : v) x = rng.uniform(-5.0, 5.0);
        return GridFunction(1.0, std::move(v));
    };
    auto desc = [](const GridFunction&, const GridFunction&, const GridFunction&) {
        return std::vector<double>{};
    };
    auto rep = check_metric_axioms(m, s, 1e-12, gen, desc);
    CHECK(rep.pass());
}

TEST_CASE("pointwise order: leq, crossing functions, meet/join") {
    auto order = pointwise_order(1.0, 10);
    auto zero = GridFunction::constant(1.0, 10, 0.0);
    auto one = GridFunction::constant(1.0, 10, 1.0);
    CHECK(order.leq(zero, one));
    CHECK_FALSE(order.leq(one, zero));

    auto up = GridFunction::sample(1.0, 10, [](double y) { return y; });
    auto down = GridFunction::sample(1.0, 10, [](double y) { return 1.0 - y; });
    CHECK_FALSE(order.leq(up, down));
    CHECK_FALSE(order.leq(down, up));

    auto j = order.join(up, down);
    auto mt = order.meet(up, down);
    for (std::size_t i = 0; i <= 10; ++i) {
        CHECK(j[i] == std::max(up[i], down[i]));
        CHECK(mt[i] == std::min(up[i], down[i]));
        CHECK(mt[i] <= up[i]);
        CHECK(up[i] <= j[i]);
    }
    // idempotence
    auto mm = order.meet(up, up);
    CHECK(mm.sup_diff(up) == 0.0);
}

TEST_CASE("order/metric compatibility: mutual leq means distance zero") {
    auto order = pointwise_order(1.0, 8);
    auto m = sup_parametric_metric(1.0, 8);
    auto f = GridFunction::sample(1.0, 8, [](double y) { return std::sin(y); });
    auto g = f;
    CHECK(order.leq(f, g));
    CHECK(order.leq(g, f));
    CHECK(m(f, g, 1.0) == 0.0);
}

TEST_CASE("interpolation") {
    auto f = GridFunction::sample(1.0, 2, [](double y) { return y; });
    CHECK(f.eval_interp(0.25) == doctest::Approx(0.25));
    CHECK(f.eval_interp(0.5) == doctest::Approx(0.5));

    auto q = GridFunction::sample(1.0, 100, [](double y) { return y * y; });
    CHECK(std::abs(q.eval_interp(0.505) - 0.255025) < 1e-4);
    CHECK(q.eval_interp(q.node(37)) == q[37]);
    CHECK_THROWS_AS(q.eval_interp(-0.1), std::domain_error);
    CHECK_THROWS_AS(q.eval_interp(1.1), std::domain_error);
}

TEST_CASE("serialization round trip") {
    auto f = GridFunction::sample(2.0, 5, [](double y) { return 3.0 * y - 1.0; });
    auto g = GridFunction::from_json(f.to_json());
    CHECK(g.same_grid(f));
    CHECK(g.sup_diff(f) == 0.0);
    auto csv = f.to_csv();
    CHECK(csv.rfind("y,value\n", 0) == 0);
}
