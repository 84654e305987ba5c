#pragma once

// Finite-difference oracles for the analytic loss gradient.

#include <functional>
#include <optional>
#include <vector>

#include "fracnn/loss.hpp"
#include "fracnn/network.hpp"

namespace fracnn {

using ParamObjective = std::function<double(const NetParams&)>;

/// Central difference (J(p + h e_k) - J(p - h e_k)) / 2h for every component.
/// Throws NumericalError if J is non-finite at a probe point.
ParamGrads fd_gradient(const ParamObjective& objective, const NetParams& params, double step);

struct ComponentCheck {
    ParamIndex index;
    double analytic;
    double fd;
    double abs_error;
    double rel_error;  // |a - f| / max(|a|, |f|), 0 when both vanish
    bool pass;
};

struct GradCheckReport {
    std::vector<ComponentCheck> components;
    std::size_t worst = 0;  // index into components with the largest rel_error
    bool pass = true;

    const ComponentCheck& worst_component() const { return components.at(worst); }
    /// First failing component, if any.
    std::optional<ParamIndex> first_failure() const;
};

struct GradCheckTolerance {
    double step = 1e-6;
    double rel_tol = 1e-5;
    double abs_floor = 1e-8;
};

/// Component passes when rel_error <= rel_tol or both |analytic| and |fd|
/// are at most abs_floor. The rule is symmetric in its two inputs.
GradCheckReport compare_gradients(const ParamGrads& analytic, const ParamGrads& fd,
                                  double rel_tol, double abs_floor);

/// loss_grad against fd_gradient of loss_value.
GradCheckReport gradient_check(const Problem& problem, const NetParams& params, const Grid& grid,
                               const GradCheckTolerance& tol = {});

}  // namespace fracnn
