#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracnn/conformable.hpp"

using namespace fracnn;

namespace {

ScalarFn power_fn(double p, bool analytic) {
    ScalarFn f{[p](double t) { return std::pow(t, p); }, {}};
    if (analytic) f.derivative = [p](double t) { return p * std::pow(t, p - 1.0); };
    return f;
}

std::vector<double> tenths() {
    std::vector<double> pts;
    for (int i = 1; i <= 10; ++i) pts.push_back(i / 10.0);
    return pts;
}

}  // namespace

TEST_CASE("alpha is restricted to (0, 1]") {
    CHECK_NOTHROW(Alpha(1.0));
    CHECK_NOTHROW(Alpha(1e-3));
    CHECK_THROWS_AS(Alpha(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Alpha(1.0000001), std::invalid_argument);
    CHECK_THROWS_AS(Alpha(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(Alpha(std::nan("")), std::invalid_argument);
}

TEST_CASE("zero-power convention") {
    CHECK(power0(0.0, 0.5) == 0.0);
    CHECK(power0(0.0, 0.0) == 1.0);
    CHECK(power0(4.0, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("conformable_power examples") {
    CHECK(conformable_power(1.0, Alpha(0.5), 0.25) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(conformable_power(2.0, Alpha(0.5), 1.0) == 2.0);
    CHECK(conformable_power(0.5, Alpha(0.5), 0.81) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(conformable_power(2.0, Alpha(0.5), 0.0), std::domain_error);
    CHECK_THROWS_AS(conformable_power(2.0, Alpha(0.5), -1.0), std::domain_error);
}

TEST_CASE("conformable_deriv examples") {
    CHECK(conformable_deriv(power_fn(2.0, true), Alpha(0.5), 1.0) == doctest::Approx(2.0));

    const ScalarFn constant{[](double) { return 4.2; }, [](double) { return 0.0; }};
    CHECK(conformable_deriv(constant, Alpha(0.7), 0.3) == 0.0);

    // Oracle: b x^(1-a) cos(b x) with b = 3.
    const double expected = std::sqrt(0.5) * 3.0 * std::cos(1.5);
    CHECK(expected == doctest::Approx(0.1500563).epsilon(1e-6));
    const ScalarFn sine3{[](double t) { return std::sin(3 * t); },
                         [](double t) { return 3 * std::cos(3 * t); }};
    CHECK(conformable_deriv(sine3, Alpha(0.5), 0.5) == doctest::Approx(expected).epsilon(1e-14));
    ScalarFn sine3_fd = sine3;
    sine3_fd.derivative = {};
    CHECK(std::abs(conformable_deriv(sine3_fd, Alpha(0.5), 0.5) - expected) < 1e-8);

    CHECK_THROWS_AS(conformable_deriv(sine3, Alpha(0.5), 0.0), std::domain_error);
}

TEST_CASE("finite-difference path rejects non-finite probes") {
    const ScalarFn blowup{[](double t) { return t > 0.5 ? INFINITY : t; }, {}};
    CHECK_THROWS_AS(conformable_deriv(blowup, Alpha(0.5), 0.5), std::runtime_error);
}

TEST_CASE("fd step policy") {
    CHECK(fd_step(0.1) == 1e-6);
    CHECK(fd_step(10.0) == doctest::Approx(1e-5));
}

TEST_CASE("power rule consistency across p, alpha and t") {
    for (double p : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (double a : {0.5, 0.75, 0.85, 1.0}) {
            for (double t : tenths()) {
                const double expected = conformable_power(p, Alpha(a), t);
                CHECK(std::abs(conformable_deriv(power_fn(p, true), Alpha(a), t) - expected) <=
                      1e-12);
                CHECK(std::abs(conformable_deriv(power_fn(p, false), Alpha(a), t) - expected) <=
                      1e-6);
            }
        }
    }
}

TEST_CASE("linearity on the analytic path") {
    const ScalarFn f{[](double t) { return std::exp(t); }, [](double t) { return std::exp(t); }};
    const ScalarFn g{[](double t) { return std::sin(2 * t); },
                     [](double t) { return 2 * std::cos(2 * t); }};
    const double a = 2.0, b = -3.0;
    const ScalarFn combo{[&](double t) { return a * f(t) + b * g(t); },
                         [&](double t) { return a * f.derivative(t) + b * g.derivative(t); }};
    for (double alpha : {0.5, 0.75, 1.0}) {
        for (double t : tenths()) {
            const double lhs = conformable_deriv(combo, Alpha(alpha), t);
            const double rhs = a * conformable_deriv(f, Alpha(alpha), t) +
                               b * conformable_deriv(g, Alpha(alpha), t);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("alpha = 1 reduces to the ordinary derivative") {
    const ScalarFn f{[](double t) { return std::log(1 + t) * t; },
                     [](double t) { return std::log(1 + t) + t / (1 + t); }};
    for (double t : tenths()) {
        CHECK(conformable_deriv(f, Alpha(1.0), t) == doctest::Approx(f.derivative(t)));
        CHECK(std::abs(conformable_deriv_fd(f, Alpha(1.0), t) - f.derivative(t)) < 1e-8);
    }
}

TEST_CASE("property suite") {
    SUBCASE("alpha = 1 passes at analytic tolerance") {
        const auto report = property_suite(Alpha(1.0), tenths());
        for (const auto& d : report.deviations) {
            CHECK(d.analytic <= 1e-12);
            CHECK(d.fd <= 1e-6);
        }
    }
    SUBCASE("property V at alpha = 0.5, t = 0.64") {
        const double pts[] = {0.64};
        const auto report = property_suite(Alpha(0.5), pts);
        CHECK(report.deviations[static_cast<int>(Property::alpha_power)].analytic <= 1e-12);
    }
    SUBCASE("product rule at alpha = 0.75, t = 0.5") {
        const double pts[] = {0.5};
        const auto report = property_suite(Alpha(0.75), pts);
        const auto& d = report.deviations[static_cast<int>(Property::product_rule)];
        CHECK(d.analytic <= 1e-12);
        CHECK(d.fd <= 1e-6);
    }
    SUBCASE("all properties for fractional orders") {
        for (double a : {0.5, 0.75, 0.85}) {
            CHECK(property_suite(Alpha(a), tenths()).passes(1e-10, 1e-4));
        }
    }
    SUBCASE("sample points outside (0, 1] are rejected") {
        const double bad[] = {0.5, 1.5};
        CHECK_THROWS_AS(property_suite(Alpha(0.5), bad), std::domain_error);
        const double zero[] = {0.0};
        CHECK_THROWS_AS(property_suite(Alpha(0.5), zero), std::domain_error);
    }
}
