#pragma once

#include <complex>
#include <utility>

namespace bsl {

// Closed-form transform of exp(||mu||^2) against the complex-Gaussian window
// exp{-(s^2 - (1 - i eps) t^2)/2}. The displayed expressions are formal
// analytic continuations; this evaluator reproduces them verbatim, principal
// branch for the complex square root.
struct ClosedFormInputs {
    double c = 0.5;
    double alpha = 0.0;
    double tau_s = 0.0;
    double tau_t = 0.0;
    double epsilon = 0.1;
};

struct ClosedFormIntermediates {
    std::complex<double> q1_ss{0.0, 0.0};  // 1 - 2c^2
    std::complex<double> q1_tt{0.0, 0.0};  // 2c^2 - 1 - i eps
    double L_s = 0.0;
    double L_t = 0.0;
    double L_s1 = 0.0;
    double L_t1 = 0.0;
    double C = 0.0;  // tau_s^2 - tau_t^2
};

ClosedFormIntermediates example_intermediates(const ClosedFormInputs& in);

std::pair<std::complex<double>, std::complex<double>> example_cbt(const ClosedFormInputs& in);

// |2c^2 - 1| below this is treated as sitting on the prefactor pole.
inline constexpr double kPoleMargin = 1e-9;

}  // namespace bsl
