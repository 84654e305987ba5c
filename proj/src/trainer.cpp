#include "fracnn/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fracnn/trial.hpp"

namespace fracnn {

void TrainConfig::validate() const {
    if (hidden == 0) {
        throw std::invalid_argument("hidden node count must be at least 1");
    }
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("learning rate must be positive");
    }
    if (max_epochs == 0) {
        throw std::invalid_argument("epoch budget must be at least 1");
    }
    if (!(loss_tol >= 0.0)) {
        throw std::invalid_argument("loss tolerance must be nonnegative");
    }
    if (!(init_halfwidth > 0.0) || !std::isfinite(init_halfwidth)) {
        throw std::invalid_argument("initialisation half-width must be positive");
    }
    if (history_every == 0) {
        throw std::invalid_argument("history stride must be at least 1");
    }
}

Grid TrainConfig::grid_for(const Problem& problem) const {
    Grid g = grid ? *grid : Grid::uniform(problem.domain, 10, false);
    g.check_within(problem.domain);
    return g;
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
        case Termination::converged: return "converged";
        case Termination::epoch_budget: return "epoch_budget";
        case Termination::diverged: return "diverged";
    }
    return "?";
}

NetParams init_params(std::uint64_t seed, std::size_t hidden, double halfwidth) {
    if (hidden == 0) {
        throw std::invalid_argument("hidden node count must be at least 1");
    }
    std::mt19937_64 gen(seed);
    auto draw = [&] {
        const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return -halfwidth + 2.0 * halfwidth * unit;
    };
    NetParams p(hidden);
    for (double& x : p.w) x = draw();
    for (double& x : p.v) x = draw();
    for (double& x : p.u) x = draw();
    return p;
}

TrainResult train(const Problem& problem, const TrainConfig& config) {
    config.validate();
    return train_from(problem, config,
                      init_params(config.seed, config.hidden, config.init_halfwidth));
}

TrainResult train_from(const Problem& problem, const TrainConfig& config, NetParams start) {
    config.validate();
    start.validate();
    const Grid grid = config.grid_for(problem);

    TrainResult result{std::move(start), {}};
    NetParams& params = result.params;
    TrainReport& report = result.report;

    LossAndGrad current = loss_and_grad(problem, params, grid);
    report.initial_loss = current.loss;
    report.loss_history.emplace_back(0, current.loss);

    NetParams candidate = params;
    for (;;) {
        if (current.loss <= config.loss_tol) {
            report.termination = Termination::converged;
            break;
        }
        if (report.epochs_run == config.max_epochs) {
            report.termination = Termination::epoch_budget;
            break;
        }
        for (std::size_t k = 0; k < params.hidden(); ++k) {
            candidate.w[k] = params.w[k] - config.eta * current.grad.w[k];
            candidate.v[k] = params.v[k] - config.eta * current.grad.v[k];
            candidate.u[k] = params.u[k] - config.eta * current.grad.u[k];
        }
        if (!candidate.all_finite()) {
            report.termination = Termination::diverged;
            break;
        }
        try {
            current = loss_and_grad(problem, candidate, grid);
        } catch (const NumericalError&) {
            report.termination = Termination::diverged;
            break;
        }
        std::swap(params, candidate);
        ++report.epochs_run;
        if (report.epochs_run % config.history_every == 0) {
            report.loss_history.emplace_back(report.epochs_run, current.loss);
        }
    }

    report.final_loss = current.loss;
    if (report.loss_history.back().first != report.epochs_run) {
        report.loss_history.emplace_back(report.epochs_run, current.loss);
    }
    if (report.termination != Termination::diverged && report.final_loss > report.initial_loss) {
        report.termination = Termination::diverged;
    }
    return result;
}

std::optional<double> SolutionTable::abs_error(std::size_t row, std::size_t col) const {
    const auto& r = rows.at(row);
    const auto& ref = r.refs.at(col);
    if (!ref) {
        return std::nullopt;
    }
    return std::abs(r.ann - *ref);
}

double SolutionTable::max_abs_error(std::size_t col) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (auto e = abs_error(i, col)) {
            worst = std::max(worst, *e);
        }
    }
    return worst;
}

std::optional<std::size_t> SolutionTable::column(std::string_view label) const {
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] == label) {
            return k;
        }
    }
    return std::nullopt;
}

SolutionTable evaluate(const Problem& problem, const NetParams& params, const Grid& eval_points) {
    eval_points.check_within(problem.domain);

    SolutionTable table;
    if (problem.exact_conformable) table.labels.emplace_back("exact_conformable");
    if (problem.reference_caputo) table.labels.emplace_back("caputo");
    for (const auto& ref : problem.reference_tables) table.labels.push_back(ref.label);

    const TrialSolution ts{params, problem.x0, problem.y0, problem.alpha};
    for (double x : eval_points.points()) {
        SolutionRow row{x, trial_eval(ts, x), {}};
        if (problem.exact_conformable) row.refs.emplace_back((*problem.exact_conformable)(x));
        if (problem.reference_caputo) row.refs.emplace_back((*problem.reference_caputo)(x));
        for (const auto& ref : problem.reference_tables) row.refs.push_back(ref.at(x));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Grid default_eval_grid(const Problem& problem) {
    return Grid::uniform(problem.domain, 10, true);
}

}  // namespace fracnn
