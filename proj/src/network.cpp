#include "fracnn/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracnn {

double sigmoid(double z) noexcept {
    // Evaluated on the side that cannot overflow exp.
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double sigmoid_d1(double z) noexcept {
    const double s = sigmoid(z);
    return s * (1.0 - s);
}

double sigmoid_d2(double z) noexcept {
    const double s = sigmoid(z);
    return s * (1.0 - s) * (1.0 - 2.0 * s);
}

std::string ParamIndex::to_string() const {
    const char* name = group == ParamGroup::w ? "w" : group == ParamGroup::v ? "v" : "u";
    return std::string(name) + "[" + std::to_string(node) + "]";
}

NetParams::NetParams(std::size_t hidden) : w(hidden, 0.0), v(hidden, 0.0), u(hidden, 0.0) {}

NetParams::NetParams(std::vector<double> w_, std::vector<double> v_, std::vector<double> u_)
    : w(std::move(w_)), v(std::move(v_)), u(std::move(u_)) {
    validate();
}

double& NetParams::component(std::size_t k) {
    const auto idx = index_of(k);
    return group(idx.group)[idx.node];
}

double NetParams::component(std::size_t k) const {
    const auto idx = index_of(k);
    return group(idx.group)[idx.node];
}

ParamIndex NetParams::index_of(std::size_t k) const {
    const std::size_t m = hidden();
    if (k >= 3 * m) {
        throw std::out_of_range("parameter component index out of range");
    }
    return {static_cast<ParamGroup>(k / m), k % m};
}

std::vector<double>& NetParams::group(ParamGroup g) {
    switch (g) {
        case ParamGroup::w: return w;
        case ParamGroup::v: return v;
        case ParamGroup::u: return u;
    }
    throw std::logic_error("bad parameter group");
}

const std::vector<double>& NetParams::group(ParamGroup g) const {
    return const_cast<NetParams*>(this)->group(g);
}

bool NetParams::all_finite() const noexcept {
    auto finite = [](const std::vector<double>& xs) {
        return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
    };
    return finite(w) && finite(v) && finite(u);
}

void NetParams::validate() const {
    if (w.empty()) {
        throw std::invalid_argument("network needs at least one hidden node");
    }
    if (v.size() != w.size() || u.size() != w.size()) {
        throw std::invalid_argument("w, v and u must have the same length");
    }
    if (!all_finite()) {
        throw std::invalid_argument("network parameters must be finite");
    }
}

double forward(const NetParams& params, double x) {
    double sum = 0.0;
    for (std::size_t j = 0; j < params.hidden(); ++j) {
        sum += params.v[j] * sigmoid(params.w[j] * x + params.u[j]);
    }
    return sum;
}

double n_beta(const NetParams& params, double x, Alpha alpha) {
    double sum = 0.0;
    for (std::size_t j = 0; j < params.hidden(); ++j) {
        sum += params.v[j] * sigmoid_d1(params.w[j] * x + params.u[j]) * params.w[j];
    }
    return power0(x, 1.0 - alpha.value()) * sum;
}

ParamGrads n_beta_param_grads(const NetParams& params, double x, Alpha alpha) {
    const std::size_t m = params.hidden();
    const double lift = power0(x, 1.0 - alpha.value());
    ParamGrads g(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double z = params.w[j] * x + params.u[j];
        const double d1 = sigmoid_d1(z);
        const double d2 = sigmoid_d2(z);
        g.w[j] = params.v[j] * lift * (d1 + d2 * params.w[j] * x);
        g.v[j] = params.w[j] * lift * d1;
        g.u[j] = params.w[j] * params.v[j] * lift * d2;
    }
    return g;
}

ParamGrads n_param_grads(const NetParams& params, double x) {
    const std::size_t m = params.hidden();
    ParamGrads g(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double z = params.w[j] * x + params.u[j];
        const double d1 = sigmoid_d1(z);
        g.w[j] = params.v[j] * d1 * x;
        g.v[j] = sigmoid(z);
        g.u[j] = params.v[j] * d1;
    }
    return g;
}

}  // namespace fracnn
