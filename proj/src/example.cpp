#include "example.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace bsl {

namespace {

void validate(const ClosedFormInputs& in) {
    if (!std::isfinite(in.c) || in.c <= 0.0) throw InvalidArgument("c must be positive");
    if (!std::isfinite(in.epsilon) || in.epsilon <= 0.0) {
        throw InvalidArgument("epsilon must be positive");
    }
    if (!std::isfinite(in.alpha) || !std::isfinite(in.tau_s) || !std::isfinite(in.tau_t)) {
        throw InvalidArgument("inputs must be finite");
    }
    if (std::abs(2.0 * in.c * in.c - 1.0) < kPoleMargin) {
        throw InvalidArgument("c is within 1e-9 of the prefactor pole at 1/sqrt(2)");
    }
}

}  // namespace

ClosedFormIntermediates example_intermediates(const ClosedFormInputs& in) {
    validate(in);
    const double ch = std::cosh(in.alpha);
    const double sh = std::sinh(in.alpha);
    ClosedFormIntermediates out;
    out.q1_ss = {1.0 - 2.0 * in.c * in.c, 0.0};
    out.q1_tt = {2.0 * in.c * in.c - 1.0, -in.epsilon};
    out.L_s = ch * in.tau_s + sh * in.tau_t;
    out.L_t = -sh * in.tau_s - ch * in.tau_t;
    out.L_s1 = -ch * in.tau_s + sh * in.tau_t;
    out.L_t1 = sh * in.tau_s + ch * in.tau_t;
    out.C = in.tau_s * in.tau_s - in.tau_t * in.tau_t;
    return out;
}

std::pair<std::complex<double>, std::complex<double>> example_cbt(const ClosedFormInputs& in) {
    const ClosedFormIntermediates v = example_intermediates(in);
    const std::complex<double> pref =
        in.c * 2.0 * std::numbers::pi / std::sqrt(v.q1_ss * v.q1_tt);
    const double cc2 = 2.0 * in.c * in.c;
    const std::complex<double> first =
        pref * std::exp(std::complex<double>{v.C, 0.0} +
                        cc2 * (v.L_s * v.L_s / v.q1_ss + v.L_t * v.L_t / v.q1_tt));
    const std::complex<double> second =
        pref * std::exp(std::complex<double>{-v.C, 0.0} +
                        cc2 * (v.L_s1 * v.L_s1 / v.q1_ss + v.L_t1 * v.L_t1 / v.q1_tt));
    return {first, second};
}

}  // namespace bsl
