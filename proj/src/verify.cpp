#include "fracnn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracnn {

ParamGrads fd_gradient(const ParamObjective& objective, const NetParams& params, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    ParamGrads grad(params.hidden());
    NetParams probe = params;
    for (std::size_t k = 0; k < params.component_count(); ++k) {
        const double base = params.component(k);
        probe.component(k) = base + step;
        const double hi = objective(probe);
        probe.component(k) = base - step;
        const double lo = objective(probe);
        probe.component(k) = base;
        if (!std::isfinite(hi) || !std::isfinite(lo)) {
            throw NumericalError("non-finite objective while probing " +
                                 params.index_of(k).to_string());
        }
        grad.component(k) = (hi - lo) / (2.0 * step);
    }
    return grad;
}

std::optional<ParamIndex> GradCheckReport::first_failure() const {
    for (const auto& c : components) {
        if (!c.pass) {
            return c.index;
        }
    }
    return std::nullopt;
}

GradCheckReport compare_gradients(const ParamGrads& analytic, const ParamGrads& fd,
                                  double rel_tol, double abs_floor) {
    if (analytic.component_count() != fd.component_count()) {
        throw std::invalid_argument("gradient shapes differ");
    }
    GradCheckReport report;
    report.components.reserve(analytic.component_count());
    for (std::size_t k = 0; k < analytic.component_count(); ++k) {
        const double a = analytic.component(k);
        const double f = fd.component(k);
        const double err = std::abs(a - f);
        const double scale = std::max(std::abs(a), std::abs(f));
        const double rel = scale > 0.0 ? err / scale : 0.0;
        const bool ok = rel <= rel_tol || scale <= abs_floor;
        report.components.push_back({analytic.index_of(k), a, f, err, rel, ok});
        report.pass = report.pass && ok;
        if (rel > report.components[report.worst].rel_error) {
            report.worst = k;
        }
    }
    return report;
}

GradCheckReport gradient_check(const Problem& problem, const NetParams& params, const Grid& grid,
                               const GradCheckTolerance& tol) {
    const ParamGrads analytic = loss_grad(problem, params, grid);
    const ParamGrads fd = fd_gradient(
        [&](const NetParams& p) { return loss_value(problem, p, grid); }, params, tol.step);
    return compare_gradients(analytic, fd, tol.rel_tol, tol.abs_floor);
}

}  // namespace fracnn
