// fracnn: train trial-solution networks on fractional initial value problems.
//
//   fracnn solve --problem example2 --alpha 0.5 --seed 3 --out run.csv
//   fracnn reproduce-table --table 3 --seeds 10 --out results/
//   fracnn check-gradients --seeds 20
//   fracnn properties --alpha 0.5 0.75 0.85 1

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fracnn/cli.hpp"

namespace {

using fracnn::cli::RunConfig;

// Flags are kept as text and routed through the same validation as
// configuration files so that "--eta x" and "eta = x" behave identically.
struct SolveFlags {
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    std::string config_path;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trial-solution neural network solver for conformable fractional IVPs"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Train on one problem and emit a solution table");
    SolveFlags flags;
    const std::vector<std::pair<std::string, std::string>> solve_keys = {
        {"--problem", "problem"}, {"--alpha", "alpha"},   {"--hidden", "hidden"},
        {"--eta", "eta"},         {"--epochs", "epochs"}, {"--seed", "seed"},
        {"--tol", "tol"},         {"--train-points", "train_points"},
        {"--out", "out_path"},
    };
    flags.values.resize(solve_keys.size());
    for (std::size_t i = 0; i < solve_keys.size(); ++i) {
        flags.values[i].first = solve_keys[i].second;
        flags.options.emplace_back(solve_keys[i].second,
                                   solve->add_option(solve_keys[i].first, flags.values[i].second,
                                                     "sets '" + solve_keys[i].second + "'"));
    }
    solve->add_option("--config", flags.config_path, "key = value file; flags override it");

    // reproduce-table
    auto* reproduce =
        app.add_subcommand("reproduce-table", "Rerun a published results table over a seed sweep");
    fracnn::cli::ReproduceOptions repro;
    std::string repro_out = ".";
    reproduce->add_option("--table", repro.table, "1, 2 or 3")->required();
    reproduce->add_option("--seeds", repro.seeds, "number of seeds (1..N)")
        ->check(CLI::PositiveNumber);
    reproduce->add_option("--hidden", repro.hidden)->check(CLI::PositiveNumber);
    reproduce->add_option("--eta", repro.eta)->check(CLI::PositiveNumber);
    reproduce->add_option("--epochs", repro.epochs)->check(CLI::PositiveNumber);
    reproduce->add_option("--tol", repro.tol)->check(CLI::NonNegativeNumber);
    reproduce->add_option("--out", repro_out, "directory for the per-alpha CSV files");

    // check-gradients
    auto* check = app.add_subcommand("check-gradients",
                                     "Compare the analytic loss gradient with finite differences");
    fracnn::cli::GradientCheckOptions grad_opts;
    check->add_option("--seeds", grad_opts.seeds, "random parameter draws per cell")
        ->check(CLI::PositiveNumber);
    check->add_flag("--inject-fault", grad_opts.inject_fault,
                    "scale one analytic component by 1.01 (self-test; must fail)");

    // properties
    auto* props = app.add_subcommand("properties", "Check the conformable derivative properties");
    std::vector<double> alphas = {0.5, 0.75, 0.85, 1.0};
    props->add_option("--alpha", alphas, "orders to check")->expected(1, -1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fracnn::cli::exit_usage;
    }

    if (solve->parsed()) {
        RunConfig config;
        try {
            if (!flags.config_path.empty()) {
                fracnn::cli::apply_config_file(config, flags.config_path);
            }
            for (std::size_t i = 0; i < flags.values.size(); ++i) {
                if (flags.options[i].second->count() > 0) {
                    fracnn::cli::apply_setting(config, flags.values[i].first,
                                               flags.values[i].second);
                }
            }
        } catch (const fracnn::cli::ConfigError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return fracnn::cli::exit_usage;
        }
        return fracnn::cli::cmd_solve(config, std::cout, std::cerr);
    }
    if (reproduce->parsed()) {
        repro.out_dir = repro_out;
        return fracnn::cli::cmd_reproduce_table(repro, std::cout, std::cerr);
    }
    if (check->parsed()) {
        return fracnn::cli::cmd_check_gradients(grad_opts, std::cout);
    }
    return fracnn::cli::cmd_properties(alphas, std::cout, std::cerr);
}
