#pragma once

// Conformable fractional derivative of order alpha in (0, 1].
//
// For a differentiable f and t > 0 the operator reduces to
//     T_alpha f(t) = t^(1 - alpha) * f'(t),
// which is the only form used here. Functions carry an optional analytic
// first derivative; without one a central finite difference is used.

#include <array>
#include <functional>
#include <span>
#include <string_view>

namespace fracnn {

/// Fractional order, validated to lie in (0, 1].
class Alpha {
public:
    explicit Alpha(double value);

    double value() const noexcept { return value_; }

    friend bool operator==(Alpha, Alpha) = default;

private:
    double value_;
};

/// Scalar function of one variable with an optional closed-form derivative.
struct ScalarFn {
    std::function<double(double)> value;
    std::function<double(double)> derivative;  // may be empty

    double operator()(double t) const { return value(t); }
    bool has_derivative() const noexcept { return static_cast<bool>(derivative); }
};

/// base^exponent for base >= 0 with 0^q = 0 (q > 0) and 0^0 = 1.
double power0(double base, double exponent);

/// Step used by every central difference in the library: max(1e-6, 1e-6 |t|).
double fd_step(double t) noexcept;

/// Central difference (f(t+h) - f(t-h)) / 2h with h = fd_step(t).
/// Throws std::runtime_error if f is non-finite at a probe point.
double central_difference(const std::function<double(double)>& f, double t);

/// T_alpha(t^p) = p t^(p - alpha). Requires t > 0.
double conformable_power(double p, Alpha alpha, double t);

/// t^(1-alpha) f'(t), using f.derivative when present and a central
/// difference otherwise. Requires t > 0.
double conformable_deriv(const ScalarFn& f, Alpha alpha, double t);

/// Same as conformable_deriv but always through the finite-difference path.
double conformable_deriv_fd(const ScalarFn& f, Alpha alpha, double t);

enum class Property {
    power_rule,
    constant,
    product_rule,
    differentiable_form,
    alpha_power,
    exponential,
    sine,
};

inline constexpr std::size_t property_count = 7;

std::string_view property_name(Property p) noexcept;

struct PropertyDeviation {
    Property property;
    double analytic;  // worst |lhs - rhs| with closed-form derivatives
    double fd;        // worst |lhs - rhs| with finite-difference derivatives
};

struct PropertyReport {
    double alpha;
    std::array<PropertyDeviation, property_count> deviations;

    bool passes(double analytic_tol, double fd_tol) const noexcept;
};

/// Checks properties I-VII of the conformable derivative at every sample
/// point. Points must lie in (0, 1].
PropertyReport property_suite(Alpha alpha, std::span<const double> sample_points);

}  // namespace fracnn
