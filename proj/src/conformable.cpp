#include "fracnn/conformable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracnn {

Alpha::Alpha(double value) : value_(value) {
    if (!(value > 0.0 && value <= 1.0)) {
        throw std::invalid_argument("fractional order must lie in (0, 1], got " +
                                    std::to_string(value));
    }
}

double power0(double base, double exponent) {
    if (base == 0.0) {
        return exponent == 0.0 ? 1.0 : 0.0;
    }
    return std::pow(base, exponent);
}

double fd_step(double t) noexcept { return std::max(1e-6, 1e-6 * std::abs(t)); }

double central_difference(const std::function<double(double)>& f, double t) {
    const double h = fd_step(t);
    const double hi = f(t + h);
    const double lo = f(t - h);
    if (!std::isfinite(hi) || !std::isfinite(lo)) {
        throw std::runtime_error("non-finite function value near t = " + std::to_string(t));
    }
    return (hi - lo) / (2.0 * h);
}

namespace {

void require_positive(double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("conformable derivative requires t > 0, got " +
                                std::to_string(t));
    }
}

}  // namespace

double conformable_power(double p, Alpha alpha, double t) {
    require_positive(t);
    return p * std::pow(t, p - alpha.value());
}

double conformable_deriv(const ScalarFn& f, Alpha alpha, double t) {
    if (!f.has_derivative()) {
        return conformable_deriv_fd(f, alpha, t);
    }
    require_positive(t);
    const double df = f.derivative(t);
    if (df == 0.0) {
        return 0.0;
    }
    return std::pow(t, 1.0 - alpha.value()) * df;
}

double conformable_deriv_fd(const ScalarFn& f, Alpha alpha, double t) {
    require_positive(t);
    return std::pow(t, 1.0 - alpha.value()) * central_difference(f.value, t);
}

std::string_view property_name(Property p) noexcept {
    switch (p) {
        case Property::power_rule: return "I power rule";
        case Property::constant: return "II constants";
        case Property::product_rule: return "III product rule";
        case Property::differentiable_form: return "IV t^(1-a) f'";
        case Property::alpha_power: return "V t^a/a";
        case Property::exponential: return "VI exponential";
        case Property::sine: return "VII sine";
    }
    return "?";
}

bool PropertyReport::passes(double analytic_tol, double fd_tol) const noexcept {
    return std::all_of(deviations.begin(), deviations.end(), [&](const PropertyDeviation& d) {
        return d.analytic <= analytic_tol && d.fd <= fd_tol;
    });
}

PropertyReport property_suite(Alpha alpha, std::span<const double> sample_points) {
    const double a = alpha.value();
    for (double t : sample_points) {
        if (!(t > 0.0 && t <= 1.0)) {
            throw std::domain_error("property sample points must lie in (0, 1]");
        }
    }

    PropertyReport report{a, {}};
    for (std::size_t k = 0; k < property_count; ++k) {
        report.deviations[k] = {static_cast<Property>(k), 0.0, 0.0};
    }
    auto record = [&](Property p, double analytic, double fd) {
        auto& d = report.deviations[static_cast<std::size_t>(p)];
        d.analytic = std::max(d.analytic, analytic);
        d.fd = std::max(d.fd, fd);
    };

    const ScalarFn square{[](double t) { return t * t; }, [](double t) { return 2.0 * t; }};
    const ScalarFn sine{[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); }};
    const ScalarFn exponential{[](double t) { return std::exp(t); },
                               [](double t) { return std::exp(t); }};
    const ScalarFn constant{[](double) { return 3.7; }, [](double) { return 0.0; }};
    const ScalarFn alpha_power{[a](double t) { return std::pow(t, a) / a; },
                               [a](double t) { return std::pow(t, a - 1.0); }};
    const ScalarFn product{
        [](double t) { return t * t * std::sin(t); },
        [](double t) { return 2.0 * t * std::sin(t) + t * t * std::cos(t); }};
    // Arbitrary smooth function for the differentiable-form check.
    const ScalarFn mixed{[](double t) { return std::exp(-t) * std::cos(2.0 * t) + t * t * t; },
                         [](double t) {
                             return -std::exp(-t) * (std::cos(2.0 * t) + 2.0 * std::sin(2.0 * t)) +
                                    3.0 * t * t;
                         }};

    constexpr double powers[] = {0.5, 1.0, 1.5, 2.0, 3.0};

    for (double t : sample_points) {
        const double lift = std::pow(t, 1.0 - a);

        for (double p : powers) {
            const ScalarFn fn{[p](double s) { return std::pow(s, p); },
                              [p](double s) { return p * std::pow(s, p - 1.0); }};
            const double expected = conformable_power(p, alpha, t);
            record(Property::power_rule, std::abs(conformable_deriv(fn, alpha, t) - expected),
                   std::abs(conformable_deriv_fd(fn, alpha, t) - expected));
        }

        record(Property::constant, std::abs(conformable_deriv(constant, alpha, t)),
               std::abs(conformable_deriv_fd(constant, alpha, t)));

        {
            const double f = square(t);
            const double g = sine(t);
            const double exact = f * conformable_deriv(sine, alpha, t) +
                                 g * conformable_deriv(square, alpha, t);
            const double via_fd = f * conformable_deriv_fd(sine, alpha, t) +
                                  g * conformable_deriv_fd(square, alpha, t);
            record(Property::product_rule, std::abs(conformable_deriv(product, alpha, t) - exact),
                   std::abs(conformable_deriv_fd(product, alpha, t) - via_fd));
        }

        {
            const double expected = lift * mixed.derivative(t);
            record(Property::differentiable_form,
                   std::abs(conformable_deriv(mixed, alpha, t) - expected),
                   std::abs(conformable_deriv_fd(mixed, alpha, t) - expected));
        }

        record(Property::alpha_power, std::abs(conformable_deriv(alpha_power, alpha, t) - 1.0),
               std::abs(conformable_deriv_fd(alpha_power, alpha, t) - 1.0));

        {
            const double expected = lift * std::exp(t);
            record(Property::exponential,
                   std::abs(conformable_deriv(exponential, alpha, t) - expected),
                   std::abs(conformable_deriv_fd(exponential, alpha, t) - expected));
        }

        {
            const double expected = lift * std::cos(t);
            record(Property::sine, std::abs(conformable_deriv(sine, alpha, t) - expected),
                   std::abs(conformable_deriv_fd(sine, alpha, t) - expected));
        }
    }
    return report;
}

}  // namespace fracnn
