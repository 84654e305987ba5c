#pragma once

// Fractional initial value problem D^alpha y = f(x, y), y(x0) = y0, and the
// collocation error E = sum_i r_i^2 with r_i = D^alpha y_N(x_i) - f(x_i, y_N(x_i)).

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracnn/conformable.hpp"
#include "fracnn/network.hpp"

namespace fracnn {

/// Raised when a residual, loss or gradient evaluates to a non-finite value.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Interval {
    double lo;
    double hi;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Published (x, value) column, e.g. one column of a results table.
struct ReferenceData {
    std::string label;
    std::vector<std::pair<double, double>> rows;

    /// Value tabulated at x (matched to within 1e-9), if any.
    std::optional<double> at(double x) const;

    /// Throws std::invalid_argument unless x is strictly increasing in [0, 1].
    void validate() const;
};

using Rhs = std::function<double(double x, double y)>;

struct Problem {
    std::string name;
    Alpha alpha;
    double x0;
    double y0;
    Rhs rhs;
    Rhs rhs_dy;  // partial of rhs in y
    Interval domain;
    std::optional<ScalarFn> exact_conformable;
    std::optional<ScalarFn> reference_caputo;
    std::vector<ReferenceData> reference_tables;

    /// Throws std::invalid_argument if domain.lo != x0 or callables are missing.
    void validate() const;
};

/// Strictly increasing collocation points.
class Grid {
public:
    explicit Grid(std::vector<double> points);

    /// n points (hi - lo) i / n + lo for i = first..n.
    static Grid uniform(Interval domain, std::size_t n, bool include_start);

    std::span<const double> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    /// Throws std::invalid_argument if any point lies outside the domain.
    void check_within(const Interval& domain) const;

private:
    std::vector<double> points_;
};

double residual(const Problem& problem, const NetParams& params, double x);

/// Sum (not mean) of squared residuals. Throws NumericalError if non-finite.
double loss_value(const Problem& problem, const NetParams& params, const Grid& grid);

/// dE/dp = 2 sum_i r_i [d(D^alpha y_N)/dp - f_y(x_i, y_N) dy_N/dp].
ParamGrads loss_grad(const Problem& problem, const NetParams& params, const Grid& grid);

struct LossAndGrad {
    double loss;
    ParamGrads grad;
};

/// loss_value and loss_grad from a single pass that shares the sigmoid
/// evaluations; used by the training loop.
LossAndGrad loss_and_grad(const Problem& problem, const NetParams& params, const Grid& grid);

}  // namespace fracnn
