#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"
#include "mother.hpp"
#include "quadrature.hpp"
#include "uncertainty.hpp"

namespace bsl {

struct VerifyRow {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    // Residuals of the textbook variants of the reflection sign, the scaling
    // exponent and the window homogeneity; reported, never gating.
    bool informational = false;
};

// Covariance / equivalence suite on seeded signals: linearity, window
// conjugate-linearity, translation, reflection, scaling, the three transform
// paths against each other, and the group-energy identity.
std::vector<VerifyRow> run_verify_suite(const GridSpec& grid, Cone cone, double scale_center,
                                        double scale_width, double rapidity_width, uint64_t seed);

}  // namespace bsl
