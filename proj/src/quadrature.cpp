#include "quadrature.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace bsl {

bool QuadSpec::same_ranges(const QuadSpec& o, double rel) const {
    auto close = [rel](double a, double b) {
        return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
    };
    return close(c_min, o.c_min) && close(c_max, o.c_max) && close(alpha_min, o.alpha_min) &&
           close(alpha_max, o.alpha_max);
}

std::string QuadSpec::id() const {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "c%.6g:%.6gx%d_a%.6g:%.6gx%d", c_min, c_max, n_c, alpha_min,
                  alpha_max, n_alpha);
    return buf;
}

void validate_quad_spec(const QuadSpec& q, int min_nodes) {
    if (!(q.c_min > 0.0) || !(q.c_max > q.c_min) || !std::isfinite(q.c_max)) {
        throw InvalidArgument("c range must satisfy 0 < c_min < c_max");
    }
    if (!(q.alpha_max > q.alpha_min) || !std::isfinite(q.alpha_min) ||
        !std::isfinite(q.alpha_max)) {
        throw InvalidArgument("alpha range must satisfy alpha_min < alpha_max");
    }
    if (q.n_c < min_nodes || q.n_alpha < min_nodes) {
        throw InvalidArgument("quadrature needs at least " + std::to_string(min_nodes) +
                              " nodes per axis");
    }
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> x(n);
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) x[i] = a + i * h;
    x.back() = b;
    return x;
}

std::vector<double> trapezoid_weights(double a, double b, int n) {
    const double h = (b - a) / (n - 1);
    std::vector<double> w(n, h);
    w.front() = 0.5 * h;
    w.back() = 0.5 * h;
    return w;
}

GroupQuadrature make_group_quadrature(const QuadSpec& spec) {
    validate_quad_spec(spec);
    GroupQuadrature q;
    q.spec = spec;
    const auto x = linspace(std::log(spec.c_min), std::log(spec.c_max), spec.n_c);
    const auto tx = trapezoid_weights(std::log(spec.c_min), std::log(spec.c_max), spec.n_c);
    q.c_nodes.resize(spec.n_c);
    q.c_weights.resize(spec.n_c);
    for (int i = 0; i < spec.n_c; ++i) {
        q.c_nodes[i] = std::exp(x[i]);
        // dc/c^3 = e^{-2x} dx on the log lattice
        q.c_weights[i] = tx[i] * std::exp(-2.0 * x[i]);
    }
    q.alpha_nodes = linspace(spec.alpha_min, spec.alpha_max, spec.n_alpha);
    q.alpha_weights = trapezoid_weights(spec.alpha_min, spec.alpha_max, spec.n_alpha);
    return q;
}

double GroupQuadrature::total_measure() const {
    double cm = 0.0;
    for (double w : c_weights) cm += w;
    double am = 0.0;
    for (double w : alpha_weights) am += w;
    return cm * am;
}

}  // namespace bsl
