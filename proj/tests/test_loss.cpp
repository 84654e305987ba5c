#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "fracnn/loss.hpp"
#include "fracnn/problems.hpp"
#include "fracnn/trainer.hpp"
#include "fracnn/trial.hpp"
#include "test_support.hpp"

using namespace fracnn;
using fracnn::testing::close;
using fracnn::testing::fd4_param;
using fracnn::testing::random_params;
using fracnn::testing::rel_error;

namespace {

std::vector<Problem> all_problems() {
    std::vector<Problem> out;
    for (double a : {0.5, 0.75, 0.85, 1.0}) out.push_back(example1(Alpha(a)));
    out.push_back(example2());
    for (double a : {0.5, 0.75, 0.85, 1.0}) out.push_back(example3(Alpha(a)));
    return out;
}

const Grid ten = Grid::uniform({0.0, 1.0}, 10, false);

}  // namespace

TEST_CASE("grid construction") {
    CHECK(ten.size() == 10);
    CHECK(ten.points().front() == doctest::Approx(0.1));
    CHECK(ten.points().back() == 1.0);
    CHECK(Grid::uniform({0.0, 1.0}, 10, true).size() == 11);
    CHECK_THROWS_AS(Grid({}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({0.3, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({0.5, 1.5}).check_within({0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("problem validation") {
    Problem p = example1(Alpha(0.5));
    p.domain = {0.1, 1.0};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    Problem q = example2();
    q.rhs_dy = nullptr;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}

TEST_CASE("residual") {
    SUBCASE("example2 closed form through the conformable operator") {
        const Problem p = example2();
        for (int i = 1; i <= 20; ++i) {
            const double x = i / 20.0;
            const double r = conformable_deriv(*p.exact_conformable, p.alpha, x) -
                             p.rhs(x, (*p.exact_conformable)(x));
            CHECK(std::abs(r) <= 1e-12);
        }
    }
    SUBCASE("zero network on example1") {
        const NetParams silent({1, 2, 3, 4, 5}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0});
        CHECK(residual(example1(Alpha(0.5)), silent, 0.5) == -0.5);
    }
    SUBCASE("trained example3 at alpha = 1 has small residuals on the grid") {
        const Problem p = example3(Alpha(1.0));
        TrainConfig config;
        config.seed = 3;
        const auto run = train(p, config);
        double sum = 0.0;
        for (double x : ten.points()) sum += residual(p, run.params, x) * residual(p, run.params, x);
        CHECK(sum == doctest::Approx(run.report.final_loss).epsilon(1e-12));
        CHECK(run.report.final_loss < 2e-3);
    }
}

TEST_CASE("loss_value") {
    const Problem p = example1(Alpha(0.5));
    std::mt19937_64 gen(21);
    const NetParams q = random_params(gen);

    const Grid single({0.4});
    const double r = residual(p, q, 0.4);
    CHECK(loss_value(p, q, single) == r * r);

    double sum = 0.0, worst = 0.0;
    for (double x : ten.points()) {
        const double ri = residual(p, q, x);
        sum += ri * ri;
        worst = std::max(worst, ri * ri);
    }
    const double loss = loss_value(p, q, ten);
    CHECK(loss == doctest::Approx(sum).epsilon(1e-14));
    CHECK(loss >= worst);

    // A problem whose right-hand side is built to match y_N exactly.
    Problem fitted = p;
    fitted.rhs = [q, a = p.alpha](double x, double) {
        return trial_frac_deriv({q, 0.0, 0.0, a}, x);
    };
    CHECK(loss_value(fitted, q, ten) == 0.0);
    const auto g = loss_grad(fitted, q, ten);
    for (std::size_t k = 0; k < g.component_count(); ++k) CHECK(g.component(k) == 0.0);

    Problem broken = p;
    broken.rhs = [](double, double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(loss_value(broken, q, ten), NumericalError);
    CHECK_THROWS_AS(loss_grad(broken, q, ten), NumericalError);
    CHECK_THROWS_AS(loss_and_grad(broken, q, ten), NumericalError);
}

TEST_CASE("loss_grad against finite differences, example1 alpha = 0.5") {
    const Problem p = example1(Alpha(0.5));
    std::mt19937_64 gen(23);
    for (int draw = 0; draw < 10; ++draw) {
        const NetParams q = random_params(gen);
        const auto g = loss_grad(p, q, ten);
        for (std::size_t k = 0; k < q.component_count(); ++k) {
            const double fd =
                fd4_param([&](const NetParams& r) { return loss_value(p, r, ten); }, q, k);
            const double mag = std::max(std::abs(g.component(k)), std::abs(fd));
            if (mag < 1e-3) {
                CHECK(std::abs(g.component(k) - fd) <= 1e-8);
            } else {
                CHECK(rel_error(g.component(k), fd) <= 1e-5);
            }
        }
    }
}

TEST_CASE("loss_grad against finite differences, all problems and orders") {
    std::mt19937_64 gen(29);
    for (const Problem& p : all_problems()) {
        for (int draw = 0; draw < 50; ++draw) {
            const NetParams q = random_params(gen, 5, 1.0);
            const auto g = loss_grad(p, q, ten);
            for (std::size_t k = 0; k < q.component_count(); ++k) {
                const double fd =
                    fd4_param([&](const NetParams& r) { return loss_value(p, r, ten); }, q, k);
                CHECK(close(g.component(k), fd, 1e-5, 1e-8));
            }
        }
    }
}

TEST_CASE("example1 gradient reduces to 2 sum r dD/dp") {
    const Problem p = example1(Alpha(0.5));
    std::mt19937_64 gen(31);
    const NetParams q = random_params(gen);
    ParamGrads reduced(q.hidden());
    for (double x : ten.points()) {
        const TrialSolution ts{q, 0.0, 0.0, p.alpha};
        const double r = trial_frac_deriv(ts, x) - x;
        const auto dd = trial_frac_deriv_param_grads(ts, x);
        for (std::size_t k = 0; k < q.component_count(); ++k) {
            reduced.component(k) += 2.0 * r * dd.component(k);
        }
    }
    const auto g = loss_grad(p, q, ten);
    for (std::size_t k = 0; k < q.component_count(); ++k) {
        CHECK(std::abs(g.component(k) - reduced.component(k)) <= 1e-12);
    }
}

TEST_CASE("fused loss_and_grad agrees with the composed route") {
    std::mt19937_64 gen(37);
    const Grid with_start = Grid::uniform({0.0, 1.0}, 10, true);
    for (const Problem& p : all_problems()) {
        for (int draw = 0; draw < 10; ++draw) {
            const NetParams q = random_params(gen);
            const auto fused = loss_and_grad(p, q, with_start);
            CHECK(rel_error(fused.loss, loss_value(p, q, with_start)) <= 1e-13);
            const auto g = loss_grad(p, q, with_start);
            for (std::size_t k = 0; k < q.component_count(); ++k) {
                CHECK(close(fused.grad.component(k), g.component(k), 1e-12, 1e-14));
            }
        }
    }
}

TEST_CASE("rhs_dy is the y-partial of rhs") {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> xs(0.0, 1.0), ys(-2.0, 2.0);
    for (const Problem& p : all_problems()) {
        for (int i = 0; i < 20; ++i) {
            const double x = xs(gen), y = ys(gen);
            const double fd = fracnn::testing::fd4([&](double s) { return p.rhs(x, s); }, y);
            CHECK(close(p.rhs_dy(x, y), fd, 1e-5, 1e-9));
        }
    }
}
