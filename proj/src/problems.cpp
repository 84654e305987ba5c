#include "fracnn/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracnn {

double gamma(double z) {
    if (!(z > 0.0)) {
        throw std::domain_error("gamma implemented for z > 0 only, got " + std::to_string(z));
    }
    if (z < 0.5) {
        // Reflection keeps the series argument in its accurate range.
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma(1.0 - z));
    }
    static constexpr double g = 7.0;
    static constexpr std::array<double, 9> coeff = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    const double x = z - 1.0;
    double series = coeff[0];
    for (std::size_t i = 1; i < coeff.size(); ++i) {
        series += coeff[i] / (x + static_cast<double>(i));
    }
    const double t = x + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * series;
}

namespace tables {

namespace {

ReferenceData column(std::string label, std::initializer_list<double> values) {
    ReferenceData data{std::move(label), {}};
    int i = 0;
    for (double v : values) {
        data.rows.emplace_back(i / 10.0, v);
        ++i;
    }
    data.validate();
    return data;
}

}  // namespace

const ReferenceData& example1_analytical() {
    static const ReferenceData data = column(
        "table1_analytical",
        {0, 0.0238, 0.0673, 0.1236, 0.1903, 0.2660, 0.3496, 0.4406, 0.5383, 0.6423, 0.7523});
    return data;
}

const ReferenceData& example1_ann() {
    static const ReferenceData data = column(
        "table1_ann",
        {0, 0.0235, 0.0663, 0.1285, 0.1900, 0.2676, 0.3287, 0.4389, 0.5481, 0.6595, 0.7595});
    return data;
}

const ReferenceData& example2_analytical() {
    static const ReferenceData data = column(
        "table2_analytical",
        {0, 0.0100, 0.0400, 0.0900, 0.1600, 0.2500, 0.3600, 0.4900, 0.6400, 0.8100, 1.0000});
    return data;
}

const ReferenceData& example2_ann() {
    static const ReferenceData data = column(
        "table2_ann",
        {0, 0.0130, 0.0405, 0.0903, 0.1608, 0.2534, 0.3513, 0.4889, 0.6469, 0.8270, 0.9926});
    return data;
}

namespace {

enum class Riccati { half, three_quarters, one, none };

Riccati riccati_order(double alpha) {
    if (alpha == 0.5) return Riccati::half;
    if (alpha == 0.75) return Riccati::three_quarters;
    if (alpha == 1.0) return Riccati::one;
    return Riccati::none;
}

}  // namespace

// Rows x = 0, 0.1, ..., 0.9.
const ReferenceData* example3_cwm(double alpha) {
    static const ReferenceData half = column(
        "table3_cwm",
        {0, 0.3301, 0.4367, 0.5048, 0.5538, 0.5912, 0.6210, 0.6454, 0.6601, 0.6835});
    static const ReferenceData three_quarters = column(
        "table3_cwm",
        {0, 0.1901, 0.3098, 0.4046, 0.4817, 0.5451, 0.5977, 0.6419, 0.6789, 0.7101});
    static const ReferenceData one = column(
        "table3_cwm",
        {0, 0.0997, 0.1974, 0.2913, 0.3799, 0.46211, 0.5370, 0.6044, 0.6641, 0.7162});
    switch (riccati_order(alpha)) {
        case Riccati::half: return &half;
        case Riccati::three_quarters: return &three_quarters;
        case Riccati::one: return &one;
        case Riccati::none: break;
    }
    return nullptr;
}

const ReferenceData* example3_prior(double alpha) {
    static const ReferenceData half = column(
        "table3_prior",
        {0, 0.3214, 0.4326, 0.5178, 0.5540, 0.6088, 0.6381, 0.6464, 0.6584, 0.6589});
    static const ReferenceData three_quarters = column(
        "table3_prior",
        {0, 0.1893, 0.3112, 0.4078, 0.4853, 0.5175, 0.5977, 0.6385, 0.6726, 0.7028});
    static const ReferenceData one = column(
        "table3_prior",
        {0, 0.0996, 0.1973, 0.2913, 0.3799, 0.4622, 0.5371, 0.6043, 0.6638, 0.7156});
    switch (riccati_order(alpha)) {
        case Riccati::half: return &half;
        case Riccati::three_quarters: return &three_quarters;
        case Riccati::one: return &one;
        case Riccati::none: break;
    }
    return nullptr;
}

const ReferenceData* example3_ann(double alpha) {
    static const ReferenceData half = column(
        "table3_ann",
        {0, 0.3299, 0.4352, 0.5040, 0.5521, 0.5919, 0.6290, 0.6486, 0.6581, 0.6891});
    static const ReferenceData three_quarters = column(
        "table3_ann",
        {0, 0.1911, 0.3102, 0.4116, 0.4837, 0.5390, 0.5929, 0.6401, 0.6609, 0.7121});
    static const ReferenceData one = column(
        "table3_ann",
        {0, 0.0995, 0.1974, 0.2909, 0.3796, 0.4622, 0.5372, 0.6044, 0.6640, 0.7163});
    switch (riccati_order(alpha)) {
        case Riccati::half: return &half;
        case Riccati::three_quarters: return &three_quarters;
        case Riccati::one: return &one;
        case Riccati::none: break;
    }
    return nullptr;
}

}  // namespace tables

Problem example1(Alpha alpha) {
    const double a = alpha.value();
    const double caputo_scale = 1.0 / gamma(2.0 + a);
    Problem p{
        .name = "example1",
        .alpha = alpha,
        .x0 = 0.0,
        .y0 = 0.0,
        .rhs = [](double x, double) { return x; },
        .rhs_dy = [](double, double) { return 0.0; },
        .domain = {0.0, 1.0},
        .exact_conformable = ScalarFn{[a](double x) { return power0(x, 1.0 + a) / (1.0 + a); },
                                      [a](double x) { return power0(x, a); }},
        .reference_caputo =
            ScalarFn{[a, caputo_scale](double x) { return caputo_scale * power0(x, 1.0 + a); },
                     [a, caputo_scale](double x) {
                         return caputo_scale * (1.0 + a) * power0(x, a);
                     }},
        .reference_tables = {},
    };
    if (a == 0.5) {
        p.reference_tables.push_back(tables::example1_analytical());
    }
    p.validate();
    return p;
}

Problem example2() {
    Problem p{
        .name = "example2",
        .alpha = Alpha(0.5),
        .x0 = 0.0,
        .y0 = 0.0,
        .rhs = [](double x, double y) { return x * x + 2.0 * power0(x, 1.5) - y; },
        .rhs_dy = [](double, double) { return -1.0; },
        .domain = {0.0, 1.0},
        .exact_conformable = ScalarFn{[](double x) { return x * x; },
                                      [](double x) { return 2.0 * x; }},
        .reference_caputo = std::nullopt,
        .reference_tables = {tables::example2_analytical()},
    };
    p.validate();
    return p;
}

Problem example3(Alpha alpha) {
    const double a = alpha.value();
    Problem p{
        .name = "example3",
        .alpha = alpha,
        .x0 = 0.0,
        .y0 = 0.0,
        .rhs = [](double, double y) { return 1.0 - y * y; },
        .rhs_dy = [](double, double y) { return -2.0 * y; },
        .domain = {0.0, 1.0},
        // (e^{2 x^a / a} - 1) / (e^{2 x^a / a} + 1) == tanh(x^a / a)
        .exact_conformable = ScalarFn{[a](double x) { return std::tanh(power0(x, a) / a); },
                                      [a](double x) {
                                          const double c = std::cosh(power0(x, a) / a);
                                          return std::pow(x, a - 1.0) / (c * c);
                                      }},
        .reference_caputo = std::nullopt,
        .reference_tables = {},
    };
    if (const auto* cwm = tables::example3_cwm(a)) {
        p.reference_tables.push_back(*cwm);
        p.reference_tables.push_back(*tables::example3_prior(a));
    }
    p.validate();
    return p;
}

Problem make_problem(std::string_view name, Alpha alpha) {
    if (name == "example1") {
        return example1(alpha);
    }
    if (name == "example2") {
        if (alpha.value() != 0.5) {
            throw std::invalid_argument("example2 is only defined for alpha = 0.5");
        }
        return example2();
    }
    if (name == "example3") {
        return example3(alpha);
    }
    throw std::invalid_argument("unknown problem '" + std::string(name) +
                                "' (expected example1, example2 or example3)");
}

}  // namespace fracnn
