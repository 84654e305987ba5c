#include "fracnn/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

#include "fracnn/conformable.hpp"
#include "fracnn/problems.hpp"
#include "fracnn/verify.hpp"

namespace fracnn::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    const auto n = parse_number<std::uint64_t>(key, text);
    if (n == 0) {
        throw ConfigError(std::string(key) + " must be at least 1");
    }
    return static_cast<std::size_t>(n);
}

// Fixed six-decimal formatting independent of the global locale.
class Fixed {
public:
    Fixed() {
        os_.imbue(std::locale::classic());
        os_ << std::fixed << std::setprecision(6);
    }
    std::string operator()(double x) {
        os_.str({});
        os_ << x;
        return os_.str();
    }

private:
    std::ostringstream os_;
};

std::string short_num(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(6) << x;
    return os.str();
}

}  // namespace

TrainConfig RunConfig::train_config(const Problem& problem) const {
    TrainConfig c;
    c.hidden = hidden;
    c.eta = eta;
    c.max_epochs = epochs;
    c.loss_tol = tol;
    c.seed = seed;
    c.grid = Grid::uniform(problem.domain, train_points, false);
    return c;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "problem") {
        if (value != "example1" && value != "example2" && value != "example3") {
            throw ConfigError("problem must be example1, example2 or example3");
        }
        config.problem = std::string(value);
    } else if (key == "alpha") {
        config.alpha = parse_number<double>(key, value);
        if (!(config.alpha > 0.0 && config.alpha <= 1.0)) {
            throw ConfigError("alpha must lie in (0, 1]");
        }
    } else if (key == "hidden") {
        config.hidden = parse_count(key, value);
    } else if (key == "eta") {
        config.eta = parse_number<double>(key, value);
        if (!(config.eta > 0.0)) {
            throw ConfigError("eta must be positive");
        }
    } else if (key == "epochs") {
        config.epochs = parse_count(key, value);
    } else if (key == "seed") {
        config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "tol") {
        config.tol = parse_number<double>(key, value);
        if (!(config.tol >= 0.0)) {
            throw ConfigError("tol must be nonnegative");
        }
    } else if (key == "train_points") {
        config.train_points = parse_count(key, value);
    } else if (key == "out_path") {
        config.out_path = std::string(value);
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

void apply_config_text(RunConfig& config, std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(config, buffer.str());
}

void print_config(std::ostream& out, const RunConfig& config) {
    out << "# problem = " << config.problem << '\n'
        << "# alpha = " << short_num(config.alpha) << '\n'
        << "# hidden = " << config.hidden << '\n'
        << "# eta = " << short_num(config.eta) << '\n'
        << "# epochs = " << config.epochs << '\n'
        << "# seed = " << config.seed << '\n'
        << "# tol = " << short_num(config.tol) << '\n'
        << "# train_points = " << config.train_points << '\n'
        << "# out_path = " << (config.out_path.empty() ? "-" : config.out_path) << '\n'
        << "# prng = " << prng_name << '\n';
}

void write_csv(std::ostream& out, const SolutionTable& table) {
    Fixed fmt;
    std::string text = "x,ann";
    for (const auto& label : table.labels) text += "," + label;
    for (const auto& label : table.labels) text += ",abs_err_" + label;
    text += '\n';
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        text += fmt(row.x) + "," + fmt(row.ann);
        for (const auto& ref : row.refs) {
            text += ",";
            if (ref) text += fmt(*ref);
        }
        for (std::size_t k = 0; k < table.labels.size(); ++k) {
            text += ",";
            if (auto e = table.abs_error(i, k)) text += fmt(*e);
        }
        text += '\n';
    }
    out << text;
}

SeedRun best_of_seeds(const Problem& problem, TrainConfig config, std::size_t count) {
    std::vector<std::future<TrainResult>> runs;
    runs.reserve(count);
    for (std::size_t s = 1; s <= count; ++s) {
        TrainConfig c = config;
        c.seed = s;
        runs.push_back(std::async(std::launch::async, [&problem, c] { return train(problem, c); }));
    }
    std::optional<SeedRun> best;
    for (std::size_t s = 1; s <= count; ++s) {
        TrainResult r = runs[s - 1].get();
        if (r.report.termination == Termination::diverged) {
            continue;
        }
        if (!best || r.report.final_loss < best->result.report.final_loss) {
            best = SeedRun{s, std::move(r)};
        }
    }
    if (!best) {
        throw NumericalError("no seed trained without diverging");
    }
    return std::move(*best);
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const Problem problem = make_problem(config.problem, Alpha(config.alpha));
        const TrainConfig tc = config.train_config(problem);
        print_config(out, config);

        const TrainResult run = train(problem, tc);
        const auto& report = run.report;
        out << "# termination = " << to_string(report.termination) << '\n'
            << "# epochs_run = " << report.epochs_run << '\n'
            << "# initial_loss = " << short_num(report.initial_loss) << '\n'
            << "# final_loss = " << short_num(report.final_loss) << '\n';

        const SolutionTable table = evaluate(problem, run.params, default_eval_grid(problem));
        for (std::size_t k = 0; k < table.labels.size(); ++k) {
            out << "# max_abs_err_" << table.labels[k] << " = "
                << short_num(table.max_abs_error(k)) << '\n';
        }

        if (config.out_path.empty()) {
            write_csv(out, table);
        } else {
            std::ofstream file(config.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot write " << config.out_path << '\n';
                return exit_usage;
            }
            write_csv(file, table);
        }

        if (report.termination == Termination::diverged) {
            err << "error: training diverged after " << report.epochs_run << " epochs\n";
            return exit_failure;
        }
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

namespace {

enum class Verdict { gated, informational, cross_operator };

struct Comparison {
    std::string label;
    Verdict verdict;
    double bound;  // only meaningful for gated
};

struct TableCase {
    Problem problem;
    Grid eval_grid;
    std::vector<Comparison> comparisons;
    // Published ANN column and the column it was compared against.
    const ReferenceData* published_ann = nullptr;
    const ReferenceData* published_ref = nullptr;
};

std::vector<double> table_alphas(int table) {
    switch (table) {
        case 1: return {0.5, 0.75, 0.85};
        case 2: return {0.5};
        case 3: return {0.5, 0.75, 1.0};
    }
    throw ConfigError("table must be 1, 2 or 3");
}

TableCase table_case(int table, double alpha) {
    if (table == 1) {
        Problem p = example1(Alpha(alpha));
        TableCase c{p, default_eval_grid(p), {}};
        c.comparisons.push_back({"exact_conformable", Verdict::gated, 3e-2});
        c.comparisons.push_back({"caputo", Verdict::cross_operator, 0.0});
        if (alpha == 0.5) {
            c.comparisons.push_back({"table1_analytical", Verdict::cross_operator, 0.0});
            c.published_ann = &tables::example1_ann();
            c.published_ref = &tables::example1_analytical();
        }
        return c;
    }
    if (table == 2) {
        Problem p = example2();
        TableCase c{p, default_eval_grid(p), {}};
        c.comparisons.push_back({"exact_conformable", Verdict::gated, 3e-2});
        c.comparisons.push_back({"table2_analytical", Verdict::gated, 3e-2});
        c.published_ann = &tables::example2_ann();
        c.published_ref = &tables::example2_analytical();
        return c;
    }
    Problem p = example3(Alpha(alpha));
    // The published Riccati table stops at x = 0.9.
    TableCase c{p, Grid::uniform({0.0, 0.9}, 9, true), {}};
    if (alpha == 1.0) {
        c.comparisons.push_back({"exact_conformable", Verdict::gated, 1e-2});
        c.comparisons.push_back({"table3_cwm", Verdict::informational, 0.0});
        c.comparisons.push_back({"table3_prior", Verdict::informational, 0.0});
    } else {
        c.comparisons.push_back({"exact_conformable", Verdict::informational, 0.0});
        c.comparisons.push_back({"table3_cwm", Verdict::cross_operator, 0.0});
        c.comparisons.push_back({"table3_prior", Verdict::cross_operator, 0.0});
    }
    c.published_ann = tables::example3_ann(alpha);
    c.published_ref = tables::example3_cwm(alpha);
    return c;
}

double published_deviation(const ReferenceData& ann, const ReferenceData& ref) {
    double worst = 0.0;
    for (const auto& [x, value] : ann.rows) {
        if (auto r = ref.at(x)) {
            worst = std::max(worst, std::abs(value - *r));
        }
    }
    return worst;
}

std::string alpha_tag(double alpha) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << alpha;
    return os.str();
}

}  // namespace

int cmd_reproduce_table(const ReproduceOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<double> alphas;
    try {
        alphas = table_alphas(options.table);
        if (options.seeds == 0) {
            throw ConfigError("seed count must be at least 1");
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) {
        err << "error: cannot create " << options.out_dir.string() << '\n';
        return exit_usage;
    }

    out << "# table = " << options.table << '\n'
        << "# seeds = 1.." << options.seeds << " (best by final loss)\n"
        << "# hidden = " << options.hidden << '\n'
        << "# eta = " << short_num(options.eta) << '\n'
        << "# epochs = " << options.epochs << '\n'
        << "# tol = " << short_num(options.tol) << '\n'
        << "# train_points = 10\n"
        << "# prng = " << prng_name << '\n';

    bool all_pass = true;
    bool any_cross = false;
    for (double alpha : alphas) {
        TableCase tc = table_case(options.table, alpha);
        TrainConfig config;
        config.hidden = options.hidden;
        config.eta = options.eta;
        config.max_epochs = options.epochs;
        config.loss_tol = options.tol;

        SeedRun best;
        try {
            best = best_of_seeds(tc.problem, config, options.seeds);
        } catch (const NumericalError& e) {
            err << "error: table " << options.table << " alpha=" << alpha_tag(alpha) << ": "
                << e.what() << '\n';
            return exit_failure;
        }

        const SolutionTable table = evaluate(tc.problem, best.result.params, tc.eval_grid);
        const auto csv_path = options.out_dir / ("table" + std::to_string(options.table) +
                                                 "_alpha" + alpha_tag(alpha) + ".csv");
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << csv_path.string() << '\n';
            return exit_usage;
        }
        write_csv(file, table);

        out << "table " << options.table << " alpha=" << alpha_tag(alpha)
            << " best_seed=" << best.seed
            << " final_loss=" << short_num(best.result.report.final_loss)
            << " termination=" << to_string(best.result.report.termination)
            << " csv=" << csv_path.string() << '\n';

        for (const auto& cmp : tc.comparisons) {
            const auto col = table.column(cmp.label);
            if (!col) {
                continue;
            }
            const double worst = table.max_abs_error(*col);
            out << "  " << std::left << std::setw(20) << cmp.label
                << " max_abs_err=" << Fixed{}(worst);
            switch (cmp.verdict) {
                case Verdict::gated: {
                    const bool ok = worst <= cmp.bound;
                    all_pass = all_pass && ok;
                    out << " bound=" << short_num(cmp.bound) << (ok ? " PASS" : " FAIL");
                    break;
                }
                case Verdict::informational:
                    out << " informational";
                    break;
                case Verdict::cross_operator:
                    any_cross = true;
                    out << " cross-operator (informational)";
                    break;
            }
            out << '\n';
        }
        if (tc.published_ann && tc.published_ref) {
            out << "  published ANN vs " << tc.published_ref->label
                << " max_abs_err=" << Fixed{}(published_deviation(*tc.published_ann, *tc.published_ref))
                << '\n';
        }
    }
    if (any_cross) {
        out << "note: cross-operator columns are Caputo-derivative solutions; training here "
               "minimises the conformable residual, whose exact solution differs for alpha < 1, "
               "so the published ANN values that track those columns are not attainable by "
               "this algorithm.\n";
    }
    return all_pass ? exit_ok : exit_failure;
}

int cmd_check_gradients(const GradientCheckOptions& options, std::ostream& out) {
    struct Cell {
        std::string problem;
        double alpha;
    };
    std::vector<Cell> cells;
    for (double a : {0.5, 0.75, 0.85, 1.0}) cells.push_back({"example1", a});
    cells.push_back({"example2", 0.5});
    for (double a : {0.5, 0.75, 0.85, 1.0}) cells.push_back({"example3", a});

    const GradCheckTolerance tol;
    bool all_pass = true;
    double worst_rel = 0.0;
    std::string worst_where = "-";
    std::size_t checks = 0;

    for (const auto& cell : cells) {
        const Problem problem = make_problem(cell.problem, Alpha(cell.alpha));
        const Grid grid = Grid::uniform(problem.domain, 10, false);
        for (std::size_t s = 1; s <= options.seeds; ++s) {
            const NetParams params = init_params(1000 + s, 5, 1.0);
            ParamGrads analytic = loss_grad(problem, params, grid);
            if (options.inject_fault && s == 1) {
                analytic.v[2] *= 1.01;
            }
            const ParamGrads fd = fd_gradient(
                [&](const NetParams& p) { return loss_value(problem, p, grid); }, params,
                tol.step);
            const auto report = compare_gradients(analytic, fd, tol.rel_tol, tol.abs_floor);
            ++checks;

            const auto& w = report.worst_component();
            if (w.rel_error > worst_rel) {
                worst_rel = w.rel_error;
                worst_where = cell.problem + " alpha=" + alpha_tag(cell.alpha) + " draw " +
                              std::to_string(s) + " " + w.index.to_string();
            }
            if (!report.pass) {
                all_pass = false;
                out << "FAIL " << cell.problem << " alpha=" << alpha_tag(cell.alpha) << " draw "
                    << s << " component " << report.first_failure()->to_string() << '\n';
            }
        }
    }
    out << "gradient checks: " << checks << " draws over " << cells.size()
        << " (problem, alpha) cells, step=" << short_num(tol.step)
        << " rel_tol=" << short_num(tol.rel_tol) << " abs_floor=" << short_num(tol.abs_floor)
        << '\n'
        << "worst relative error: " << short_num(worst_rel) << " at " << worst_where << '\n'
        << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? exit_ok : exit_failure;
}

int cmd_properties(const std::vector<double>& alphas, std::ostream& out, std::ostream& err) {
    constexpr double analytic_tol = 1e-10;
    constexpr double fd_tol = 1e-4;
    std::vector<double> points;
    for (int i = 1; i <= 10; ++i) points.push_back(i / 10.0);

    bool all_pass = true;
    for (double a : alphas) {
        std::optional<PropertyReport> report;
        try {
            report = property_suite(Alpha(a), points);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        out << "alpha=" << alpha_tag(a) << '\n';
        for (const auto& d : report->deviations) {
            const bool ok = d.analytic <= analytic_tol && d.fd <= fd_tol;
            all_pass = all_pass && ok;
            out << "  " << std::left << std::setw(18) << property_name(d.property)
                << " analytic=" << std::setw(12) << short_num(d.analytic)
                << " fd=" << std::setw(12) << short_num(d.fd) << (ok ? " PASS" : " FAIL") << '\n';
        }
    }
    out << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? exit_ok : exit_failure;
}

}  // namespace fracnn::cli
