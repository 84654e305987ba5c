#pragma once

// Built-in benchmark problems on [0, 1] with y(0) = 0:
//   example1: D^a y = x
//   example2: D^0.5 y = x^2 + 2 x^1.5 - y        (solution x^2)
//   example3: D^a y = 1 - y^2                    (fractional Riccati)

#include <string_view>

#include "fracnn/loss.hpp"

namespace fracnn {

/// Gamma function for z > 0 (Lanczos, g = 7, nine coefficients; relative
/// error around 1e-15 in double). Throws std::domain_error for z <= 0.
double gamma(double z);

Problem example1(Alpha alpha);

/// Only defined at alpha = 0.5; the closed form x^2 solves the equation
/// under the conformable operator at that order alone.
Problem example2();

Problem example3(Alpha alpha);

/// Builds a problem by name ("example1", "example2", "example3").
/// Throws std::invalid_argument for unknown names or example2 with alpha != 0.5.
Problem make_problem(std::string_view name, Alpha alpha);

namespace tables {

/// Analytical column of the published example 1 table (alpha = 0.5).
const ReferenceData& example1_analytical();
/// Analytical and ANN columns of the published example 2 table.
const ReferenceData& example2_analytical();
const ReferenceData& example2_ann();
const ReferenceData& example1_ann();

/// Chebyshev wavelet, power-series (prior) and ANN columns published for the
/// Riccati example at alpha in {0.5, 0.75, 1}. Returns nullptr for any
/// other alpha.
const ReferenceData* example3_cwm(double alpha);
const ReferenceData* example3_prior(double alpha);
const ReferenceData* example3_ann(double alpha);

}  // namespace tables

}  // namespace fracnn
