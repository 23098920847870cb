#include "specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace bsl {

double digamma(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw InvalidArgument("digamma implemented for x > 0 only");
    }
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    const double z = 1.0 / (x * x);
    static const double coef[] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0,        -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    double zk = z;
    double tail = 0.0;
    for (double c : coef) {
        tail += c * zk;
        zk *= z;
    }
    return result + std::log(x) - 0.5 / x - tail;
}

double digamma_half() { return digamma(0.5); }

double pitt_constant(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0 || lambda >= 2.0) {
        throw InvalidArgument("lambda must lie in [0, 2), got " + std::to_string(lambda));
    }
    const double r = std::tgamma((2.0 - lambda) / 4.0) / std::tgamma((2.0 + lambda) / 4.0);
    return std::pow(std::numbers::pi, lambda) * r * r;
}

}  // namespace bsl
