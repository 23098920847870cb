#pragma once

namespace bsl {

// Digamma for x > 0, ~1e-14 relative (recurrence below 10, then the
// asymptotic Bernoulli series).
double digamma(double x);

// Gamma'(1/2)/Gamma(1/2) = -euler_gamma - 2 ln 2.
double digamma_half();

// Weighted-norm constant pi^lambda [Gamma((2-lambda)/4)/Gamma((2+lambda)/4)]^2,
// defined for 0 <= lambda < 2.
double pitt_constant(double lambda);

}  // namespace bsl
