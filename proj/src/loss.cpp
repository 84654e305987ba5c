#include "fracnn/loss.hpp"

#include <cmath>
#include <string>

#include "fracnn/trial.hpp"

namespace fracnn {

std::optional<double> ReferenceData::at(double x) const {
    for (const auto& [rx, value] : rows) {
        if (std::abs(rx - x) <= 1e-9) {
            return value;
        }
    }
    return std::nullopt;
}

void ReferenceData::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double x = rows[i].first;
        if (!(x >= 0.0 && x <= 1.0)) {
            throw std::invalid_argument(label + ": abscissa outside [0, 1]");
        }
        if (i > 0 && !(x > rows[i - 1].first)) {
            throw std::invalid_argument(label + ": abscissae not strictly increasing");
        }
    }
}

void Problem::validate() const {
    if (!rhs || !rhs_dy) {
        throw std::invalid_argument(name + ": right-hand side and its y-partial are required");
    }
    if (domain.lo != x0 || !(domain.hi > domain.lo)) {
        throw std::invalid_argument(name + ": domain must be [x0, b] with b > x0");
    }
    for (const auto& table : reference_tables) {
        table.validate();
    }
}

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw std::invalid_argument("grid must contain at least one point");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i])) {
            throw std::invalid_argument("grid points must be finite");
        }
        if (i > 0 && !(points_[i] > points_[i - 1])) {
            throw std::invalid_argument("grid points must be strictly increasing");
        }
    }
}

Grid Grid::uniform(Interval domain, std::size_t n, bool include_start) {
    if (n == 0) {
        throw std::invalid_argument("grid needs at least one interval");
    }
    std::vector<double> pts;
    pts.reserve(n + 1);
    const double width = domain.hi - domain.lo;
    for (std::size_t i = include_start ? 0 : 1; i <= n; ++i) {
        pts.push_back(domain.lo + width * static_cast<double>(i) / static_cast<double>(n));
    }
    return Grid(std::move(pts));
}

void Grid::check_within(const Interval& domain) const {
    for (double x : points_) {
        if (!domain.contains(x)) {
            throw std::invalid_argument("grid point " + std::to_string(x) +
                                        " outside the problem domain");
        }
    }
}

double residual(const Problem& problem, const NetParams& params, double x) {
    const TrialSolution ts{params, problem.x0, problem.y0, problem.alpha};
    return trial_frac_deriv(ts, x) - problem.rhs(x, trial_eval(ts, x));
}

double loss_value(const Problem& problem, const NetParams& params, const Grid& grid) {
    double sum = 0.0;
    for (double x : grid.points()) {
        const double r = residual(problem, params, x);
        if (!std::isfinite(r)) {
            throw NumericalError("non-finite residual at x = " + std::to_string(x));
        }
        sum += r * r;
    }
    if (!std::isfinite(sum)) {
        throw NumericalError("loss overflowed");
    }
    return sum;
}

ParamGrads loss_grad(const Problem& problem, const NetParams& params, const Grid& grid) {
    const TrialSolution ts{params, problem.x0, problem.y0, problem.alpha};
    ParamGrads total(params.hidden());
    for (double x : grid.points()) {
        const double y = trial_eval(ts, x);
        const double r = trial_frac_deriv(ts, x) - problem.rhs(x, y);
        const double fy = problem.rhs_dy(x, y);
        const ParamGrads dd = trial_frac_deriv_param_grads(ts, x);
        const ParamGrads dy = trial_param_grads(ts, x);
        for (std::size_t k = 0; k < total.component_count(); ++k) {
            total.component(k) += 2.0 * r * (dd.component(k) - fy * dy.component(k));
        }
    }
    if (!total.all_finite()) {
        throw NumericalError("non-finite loss gradient");
    }
    return total;
}

LossAndGrad loss_and_grad(const Problem& problem, const NetParams& params, const Grid& grid) {
    const std::size_t m = params.hidden();
    const double order = problem.alpha.value();

    LossAndGrad out{0.0, ParamGrads(m)};
    std::vector<double> s(m), d1(m), d2(m);

    for (double x : grid.points()) {
        const double dx = x - problem.x0;
        if (dx < 0.0) {
            throw std::domain_error("grid point precedes x0");
        }
        const double lift_dx = power0(dx, 1.0 - order);
        const double lift_x = power0(x, 1.0 - order);

        double n = 0.0;
        double slope = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double z = params.w[j] * x + params.u[j];
            s[j] = sigmoid(z);
            d1[j] = s[j] * (1.0 - s[j]);
            d2[j] = d1[j] * (1.0 - 2.0 * s[j]);
            n += params.v[j] * s[j];
            slope += params.v[j] * d1[j] * params.w[j];
        }

        const double y = problem.y0 + dx * n;
        const double r = lift_dx * n + dx * lift_x * slope - problem.rhs(x, y);
        const double fy = problem.rhs_dy(x, y);
        out.loss += r * r;

        const double scale = 2.0 * r;
        const double dxx = dx * lift_x;
        for (std::size_t j = 0; j < m; ++j) {
            const double w = params.w[j];
            const double v = params.v[j];
            const double dd_w = lift_dx * v * d1[j] * x + dxx * v * (d1[j] + d2[j] * w * x);
            const double dd_v = lift_dx * s[j] + dxx * w * d1[j];
            const double dd_u = lift_dx * v * d1[j] + dxx * w * v * d2[j];
            const double dy_w = dx * v * d1[j] * x;
            const double dy_v = dx * s[j];
            const double dy_u = dx * v * d1[j];
            out.grad.w[j] += scale * (dd_w - fy * dy_w);
            out.grad.v[j] += scale * (dd_v - fy * dy_v);
            out.grad.u[j] += scale * (dd_u - fy * dy_u);
        }
    }
    if (!std::isfinite(out.loss)) {
        throw NumericalError("non-finite loss");
    }
    if (!out.grad.all_finite()) {
        throw NumericalError("non-finite loss gradient");
    }
    return out;
}

}  // namespace fracnn
