#pragma once

// Trial solution y_N(x) = y0 + (x - x0) N(x). It meets the initial condition
// for every parameter value, so training only has to fit the equation.

#include "fracnn/conformable.hpp"
#include "fracnn/network.hpp"

namespace fracnn {

/// Non-owning view: the referenced parameters must outlive the view.
struct TrialSolution {
    const NetParams& params;
    double x0;
    double y0;
    Alpha alpha;
};

double trial_eval(const TrialSolution& ts, double x);

/// (x - x0)^(1-alpha) N(x) + (x - x0) n_beta(x). Throws std::domain_error
/// for x < x0.
///
/// The first factor is (x - x0)^(1-alpha) rather than x^(1-alpha); the two
/// agree when x0 = 0, which is the only case the operator cross-checks use.
double trial_frac_deriv(const TrialSolution& ts, double x);

/// (x - x0) times each component of n_param_grads.
ParamGrads trial_param_grads(const TrialSolution& ts, double x);

/// Parameter partials of trial_frac_deriv. Throws std::domain_error for x < x0.
ParamGrads trial_frac_deriv_param_grads(const TrialSolution& ts, double x);

}  // namespace fracnn
