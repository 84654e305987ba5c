#pragma once

// Single-input, single-output network with one hidden sigmoid layer:
//     N(x) = sum_j v_j * sigmoid(w_j x + u_j)

#include <cstddef>
#include <string>
#include <vector>

#include "fracnn/conformable.hpp"

namespace fracnn {

double sigmoid(double z) noexcept;
double sigmoid_d1(double z) noexcept;
double sigmoid_d2(double z) noexcept;

/// Which of the three per-node parameter families a component belongs to.
enum class ParamGroup { w, v, u };

/// Addresses one scalar component inside a NetParams value.
struct ParamIndex {
    ParamGroup group;
    std::size_t node;

    std::string to_string() const;
    friend bool operator==(const ParamIndex&, const ParamIndex&) = default;
};

/// Input weights w, output weights v and hidden biases u, one entry per
/// hidden node. Gradients with respect to the parameters share this shape.
struct NetParams {
    std::vector<double> w;
    std::vector<double> v;
    std::vector<double> u;

    NetParams() = default;
    explicit NetParams(std::size_t hidden);
    NetParams(std::vector<double> w_, std::vector<double> v_, std::vector<double> u_);

    std::size_t hidden() const noexcept { return w.size(); }
    std::size_t component_count() const noexcept { return 3 * w.size(); }

    // Flat addressing: [w_0..w_{m-1}, v_0.., u_0..].
    double& component(std::size_t k);
    double component(std::size_t k) const;
    ParamIndex index_of(std::size_t k) const;

    std::vector<double>& group(ParamGroup g);
    const std::vector<double>& group(ParamGroup g) const;

    bool all_finite() const noexcept;

    /// Throws std::invalid_argument unless the three vectors are non-empty,
    /// equally sized and finite.
    void validate() const;

    friend bool operator==(const NetParams&, const NetParams&) = default;
};

using ParamGrads = NetParams;

double forward(const NetParams& params, double x);

/// Conformable derivative of the network output in its input:
/// x^(1-alpha) * sum_j v_j sigmoid'(z_j) w_j.
double n_beta(const NetParams& params, double x, Alpha alpha);

/// Partials of n_beta with respect to w_j, v_j and u_j.
ParamGrads n_beta_param_grads(const NetParams& params, double x, Alpha alpha);

/// Partials of forward with respect to w_j, v_j and u_j.
ParamGrads n_param_grads(const NetParams& params, double x);

}  // namespace fracnn
