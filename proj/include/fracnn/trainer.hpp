#pragma once

// Full-batch gradient descent on the collocation error, plus evaluation of a
// trained network against the references a problem carries.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracnn/loss.hpp"
#include "fracnn/network.hpp"

namespace fracnn {

/// Name of the generator behind init_params; printed with every run.
inline constexpr std::string_view prng_name = "mt19937_64";

struct TrainConfig {
    std::size_t hidden = 5;
    double eta = 0.03;
    std::size_t max_epochs = 50000;
    double loss_tol = 1e-8;
    std::uint64_t seed = 1;
    double init_halfwidth = 0.5;
    std::optional<Grid> grid;       // default: i/10, i = 1..10 over the domain
    std::size_t history_every = 100;  // loss_history sampling stride

    /// Throws std::invalid_argument on non-positive eta, zero epochs/hidden, etc.
    void validate() const;

    /// The configured grid, or the default ten-point grid over the domain.
    Grid grid_for(const Problem& problem) const;
};

enum class Termination { converged, epoch_budget, diverged };

std::string_view to_string(Termination t) noexcept;

struct TrainReport {
    double initial_loss = 0.0;
    double final_loss = 0.0;
    std::size_t epochs_run = 0;
    Termination termination = Termination::epoch_budget;
    std::vector<std::pair<std::size_t, double>> loss_history;
};

/// w, v and u drawn independently and uniformly from [-halfwidth, halfwidth].
/// The seed-to-value mapping is fixed: 53 high bits of mt19937_64 output
/// scaled to [0, 1), so results do not depend on the standard library.
NetParams init_params(std::uint64_t seed, std::size_t hidden, double halfwidth);

struct TrainResult {
    NetParams params;
    TrainReport report;
};

/// Repeats p <- p - eta dE/dp for all of w, v and u until the loss drops to
/// loss_tol, the epoch budget runs out, or the loss stops being finite or ends
/// above its starting value (reported as diverged; the last finite state is
/// returned).
TrainResult train(const Problem& problem, const TrainConfig& config);

/// Same loop from a caller-supplied starting point.
TrainResult train_from(const Problem& problem, const TrainConfig& config, NetParams start);

struct SolutionRow {
    double x;
    double ann;
    std::vector<std::optional<double>> refs;  // parallel to SolutionTable::labels
};

struct SolutionTable {
    std::vector<std::string> labels;
    std::vector<SolutionRow> rows;

    /// |ann - reference| for column k of row i; empty if the reference has no
    /// value there.
    std::optional<double> abs_error(std::size_t row, std::size_t column) const;

    /// Largest abs_error over all rows for column k (0 if none present).
    double max_abs_error(std::size_t column) const;

    /// Column index for label, or nullopt.
    std::optional<std::size_t> column(std::string_view label) const;
};

/// Evaluates the trained trial solution at each point alongside every
/// reference the problem carries: exact_conformable, caputo, then tables.
SolutionTable evaluate(const Problem& problem, const NetParams& params, const Grid& eval_points);

/// i/10 over the domain for i = 0..10.
Grid default_eval_grid(const Problem& problem);

}  // namespace fracnn
