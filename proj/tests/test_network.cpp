#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "fracnn/network.hpp"
#include "test_support.hpp"

using namespace fracnn;
using fracnn::testing::close;
using fracnn::testing::fd4;
using fracnn::testing::fd4_param;
using fracnn::testing::random_params;
using fracnn::testing::rel_error;

TEST_CASE("sigmoid and its derivatives") {
    CHECK(sigmoid(0.0) == 0.5);
    CHECK(sigmoid_d1(0.0) == 0.25);
    CHECK(sigmoid_d2(0.0) == 0.0);
    CHECK(sigmoid(1.0) == doctest::Approx(0.7310585786300049).epsilon(1e-15));
    CHECK(sigmoid_d1(1.0) == doctest::Approx(0.19661193324148185).epsilon(1e-14));
    CHECK(sigmoid_d2(1.0) == doctest::Approx(-0.09085774767294842).epsilon(1e-13));

    // Saturation without overflow.
    CHECK(sigmoid(800.0) == 1.0);
    CHECK(sigmoid(-800.0) == 0.0);
    CHECK(std::isfinite(sigmoid_d2(-800.0)));

    for (double z = -5.0; z <= 5.0; z += 0.25) {
        CHECK(close(sigmoid_d1(z), fd4([](double s) { return sigmoid(s); }, z), 1e-7, 1e-12));
        CHECK(close(sigmoid_d2(z), fd4([](double s) { return sigmoid_d1(s); }, z), 1e-7, 1e-11));
    }
}

TEST_CASE("NetParams shape and addressing") {
    CHECK_THROWS_AS(NetParams({1.0}, {1.0, 2.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(NetParams({}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(NetParams({NAN}, {1.0}, {0.0}), std::invalid_argument);

    NetParams p({1, 2}, {3, 4}, {5, 6});
    CHECK(p.component_count() == 6);
    CHECK(p.component(0) == 1);
    CHECK(p.component(3) == 4);
    CHECK(p.component(5) == 6);
    CHECK(p.index_of(4).to_string() == "u[0]");
    CHECK_THROWS_AS(p.component(6), std::out_of_range);
}

TEST_CASE("forward examples") {
    CHECK(forward(NetParams({0.0}, {1.0}, {0.0}), 123.0) == 0.5);
    CHECK(forward(NetParams({1, 2, 3}, {0, 0, 0}, {1, 1, 1}), 0.4) == 0.0);
    CHECK(forward(NetParams({1, -1}, {1, 1}, {0, 0}), 0.0) == 1.0);
}

TEST_CASE("forward is bounded by the output weights") {
    std::mt19937_64 gen(7);
    for (int draw = 0; draw < 50; ++draw) {
        const NetParams p = random_params(gen, 5, 3.0);
        const double bound = std::accumulate(p.v.begin(), p.v.end(), 0.0,
                                             [](double s, double v) { return s + std::abs(v); });
        for (double x : {-10.0, -1.0, 0.0, 0.5, 1.0, 50.0}) {
            CHECK(std::abs(forward(p, x)) <= bound);
        }
    }
}

TEST_CASE("n_beta") {
    CHECK(n_beta(NetParams({1, 2}, {0, 0}, {0, 1}), 0.3, Alpha(0.5)) == 0.0);
    CHECK(n_beta(NetParams({1.0}, {1.0}, {0.0}), 1.0, Alpha(1.0)) ==
          doctest::Approx(0.19661193324148185).epsilon(1e-14));

    std::mt19937_64 gen(11);
    for (int draw = 0; draw < 20; ++draw) {
        const NetParams p = random_params(gen);
        const auto net = [&](double x) { return forward(p, x); };

        // Operator cross-check at alpha = 0.5, x = 0.49.
        const ScalarFn as_fn{net, {}};
        CHECK(std::abs(n_beta(p, 0.49, Alpha(0.5)) - conformable_deriv(as_fn, Alpha(0.5), 0.49)) <=
              1e-6);

        // alpha = 1 is the ordinary derivative.
        for (double x : {0.1, 0.5, 0.9}) {
            CHECK(close(n_beta(p, x, Alpha(1.0)), fd4(net, x), 1e-6, 1e-10));
        }
    }
}

TEST_CASE("n_beta_param_grads") {
    SUBCASE("w = 0 kills the v and u partials") {
        const NetParams p({0.0}, {0.7}, {-0.3});
        const auto g = n_beta_param_grads(p, 0.6, Alpha(0.5));
        CHECK(g.v[0] == 0.0);
        CHECK(g.u[0] == 0.0);
        CHECK(g.w[0] == doctest::Approx(0.7 * std::sqrt(0.6) * sigmoid_d1(-0.3)));
    }
    SUBCASE("bias partial at the unit point") {
        const auto g = n_beta_param_grads(NetParams({1.0}, {1.0}, {0.0}), 1.0, Alpha(1.0));
        CHECK(g.u[0] == doctest::Approx(-0.0908577).epsilon(1e-6));
    }
    SUBCASE("finite-difference oracle") {
        std::mt19937_64 gen(13);
        std::uniform_real_distribution<double> xs(0.05, 1.0);
        std::uniform_int_distribution<int> alpha_pick(0, 3);
        const double alphas[] = {0.5, 0.75, 0.85, 1.0};
        for (int draw = 0; draw < 100; ++draw) {
            const NetParams p = random_params(gen);
            const double x = draw == 0 ? 0.7 : xs(gen);
            const Alpha a(draw == 0 ? 0.75 : alphas[alpha_pick(gen)]);
            const auto g = n_beta_param_grads(p, x, a);
            for (std::size_t k = 0; k < p.component_count(); ++k) {
                const double fd =
                    fd4_param([&](const NetParams& q) { return n_beta(q, x, a); }, p, k);
                CHECK(close(g.component(k), fd, 1e-5, 1e-9));
            }
        }
    }
}

TEST_CASE("n_param_grads") {
    const auto at_zero = n_param_grads(NetParams({1, -2, 3}, {1, 1, 1}, {0, 0, 0}), 0.0);
    for (double w : at_zero.w) CHECK(w == 0.0);

    CHECK(n_param_grads(NetParams({0.0}, {2.0}, {0.0}), 0.8).v[0] == 0.5);

    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    for (int draw = 0; draw < 100; ++draw) {
        const NetParams p = random_params(gen);
        const double x = xs(gen);
        const auto g = n_param_grads(p, x);
        for (std::size_t k = 0; k < p.component_count(); ++k) {
            const double fd = fd4_param([&](const NetParams& q) { return forward(q, x); }, p, k);
            CHECK(close(g.component(k), fd, 1e-5, 1e-9));
        }
    }
}
