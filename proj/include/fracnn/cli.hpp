#pragma once

// Command implementations behind the fracnn executable. Each command writes
// to caller-supplied streams and returns the process exit status.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fracnn/trainer.hpp"

namespace fracnn::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failure = 2;

/// Invalid configuration key or value.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string problem = "example1";
    double alpha = 0.5;
    std::size_t hidden = 5;
    double eta = 0.03;
    std::size_t epochs = 50000;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::size_t train_points = 10;
    std::string out_path;  // empty: CSV goes to the output stream

    TrainConfig train_config(const Problem& problem) const;
};

/// Sets one key (problem, alpha, hidden, eta, epochs, seed, tol,
/// train_points, out_path). Throws ConfigError for unknown keys or values
/// that do not parse.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat "key = value" lines; '#' starts a comment. Later keys win.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Every effective setting, one "# key = value" line each, plus the PRNG name.
void print_config(std::ostream& out, const RunConfig& config);

/// Header x,ann,<labels...>,abs_err_<labels...>; six decimals, '.' decimal
/// point, '\n' line ends. Missing reference values are left empty.
void write_csv(std::ostream& out, const SolutionTable& table);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ReproduceOptions {
    int table = 2;
    std::size_t seeds = 10;
    std::size_t hidden = 5;
    double eta = 0.03;
    std::size_t epochs = 50000;
    double tol = 1e-8;
    std::filesystem::path out_dir = ".";
};

int cmd_reproduce_table(const ReproduceOptions& options, std::ostream& out, std::ostream& err);

struct GradientCheckOptions {
    std::size_t seeds = 20;
    bool inject_fault = false;
};

int cmd_check_gradients(const GradientCheckOptions& options, std::ostream& out);

int cmd_properties(const std::vector<double>& alphas, std::ostream& out, std::ostream& err);

/// Trains seeds 1..count (concurrently) and returns the run with the
/// smallest final loss among those that did not diverge; ties go to the
/// lower seed. Throws NumericalError if every seed diverged.
struct SeedRun {
    std::uint64_t seed;
    TrainResult result;
};
SeedRun best_of_seeds(const Problem& problem, TrainConfig config, std::size_t count);

}  // namespace fracnn::cli
