#include "fracnn/trial.hpp"

#include <stdexcept>
#include <string>

namespace fracnn {

namespace {

void require_not_before_start(const TrialSolution& ts, double x) {
    if (x < ts.x0) {
        throw std::domain_error("trial derivative undefined for x < x0 (x = " +
                                std::to_string(x) + ")");
    }
}

}  // namespace

double trial_eval(const TrialSolution& ts, double x) {
    const double dx = x - ts.x0;
    if (dx == 0.0) {
        return ts.y0;
    }
    return ts.y0 + dx * forward(ts.params, x);
}

double trial_frac_deriv(const TrialSolution& ts, double x) {
    require_not_before_start(ts, x);
    const double dx = x - ts.x0;
    return power0(dx, 1.0 - ts.alpha.value()) * forward(ts.params, x) +
           dx * n_beta(ts.params, x, ts.alpha);
}

ParamGrads trial_param_grads(const TrialSolution& ts, double x) {
    ParamGrads g = n_param_grads(ts.params, x);
    const double dx = x - ts.x0;
    for (std::size_t k = 0; k < g.component_count(); ++k) {
        g.component(k) *= dx;
    }
    return g;
}

ParamGrads trial_frac_deriv_param_grads(const TrialSolution& ts, double x) {
    require_not_before_start(ts, x);
    const double dx = x - ts.x0;
    const double lift = power0(dx, 1.0 - ts.alpha.value());
    const ParamGrads dn = n_param_grads(ts.params, x);
    ParamGrads g = n_beta_param_grads(ts.params, x, ts.alpha);
    for (std::size_t k = 0; k < g.component_count(); ++k) {
        g.component(k) = lift * dn.component(k) + dx * g.component(k);
    }
    return g;
}

}  // namespace fracnn
