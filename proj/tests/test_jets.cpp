#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seglie/jets.hpp"
#include "test_util.hpp"

using namespace seglie;

TEST_CASE("total derivative on basic expressions") {
    auto jc = JetContext::make(1, 1, 1);
    Series u = Series::variable(jc->vars(), jc->u_index(1));
    Series du = total_derivative(jc, u, 1);
    auto jc2 = JetContext::make(1, 1, 2);
    CHECK(du == Series::variable(jc2->vars(), jc2->fiber_index(1, {1})));

    auto jcb = JetContext::make(2, 1, 1);
    Series u12 = Series::variable(jcb->vars(), jcb->fiber_index(1, {2}));
    Series d1 = total_derivative(jcb, u12, 1);
    auto jcb2 = JetContext::make(2, 1, 2);
    CHECK(d1 == Series::variable(jcb2->vars(), jcb2->fiber_index(1, {1, 2})));

    // Leibniz: D_x(x * u_1) = u_1 + x * u_11
    Series x = Series::variable(jc->vars(), jc->x_index(1));
    Series u1 = Series::variable(jc->vars(), jc->fiber_index(1, {1}));
    Series got = total_derivative(jc, x * u1, 1);
    Series expect = Series::variable(jc2->vars(), jc2->fiber_index(1, {1})) +
                    Series::variable(jc2->vars(), jc2->x_index(1)) *
                        Series::variable(jc2->vars(), jc2->fiber_index(1, {1, 1}));
    CHECK(got == expect);

    CHECK_THROWS_AS(total_derivative(jc, u, 2), std::invalid_argument);
}

TEST_CASE("total derivatives commute and are linear") {
    testutil::Rng rng(0x51);
    auto jc = JetContext::make(2, 2, 2);
    auto jc3 = JetContext::make(2, 2, 3);
    for (int t = 0; t < 50; ++t) {
        Series e = testutil::random_series(rng, jc->vars(), 3, 5);
        Series f = testutil::random_series(rng, jc->vars(), 3, 5);
        Series d12 = total_derivative(jc3, total_derivative(jc, e, 1), 2);
        Series d21 = total_derivative(jc3, total_derivative(jc, e, 2), 1);
        CHECK(d12 == d21);

        Rational a = rng.rational(), b = rng.rational();
        Series lhs = total_derivative(jc, e.scaled(a) + f.scaled(b), 1);
        Series rhs = total_derivative(jc, e, 1).scaled(a) + total_derivative(jc, f, 1).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("fiber index tuples are order-insensitive") {
    auto jc = JetContext::make(3, 2, 3);
    CHECK(jc->fiber_index(2, {3, 1, 2}) == jc->fiber_index(2, {1, 2, 3}));
    CHECK(jc->fiber_index(1, {2, 1}) == jc->fiber_index(1, {1, 2}));
    CHECK_THROWS_AS(jc->fiber_index(1, {4}), std::invalid_argument);
}

TEST_CASE("jet dimensions") {
    // J^2(1,1): chart (x, u, u_1, u_11)
    JetDims d = jet_dimensions(1, 1, 2);
    CHECK(d.total == 4);
    auto jc = JetContext::make(1, 1, 2);
    CHECK(jc->vars()->size() == 4);
    CHECK(jc->vars()->name(0) == "x1");
    CHECK(jc->vars()->name(1) == "u1");
    CHECK(jc->vars()->name(2) == "u1_1");
    CHECK(jc->vars()->name(3) == "u1_11");

    CHECK(jet_dimensions(2, 2, 1).total == 8);
    CHECK(jet_dimensions(2, 2, 2).total == 14);
}
