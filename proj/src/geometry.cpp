#include "geometry.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace bsl {

namespace {

void check_rapidity(double alpha) {
    if (!std::isfinite(alpha)) {
        throw InvalidArgument("rapidity must be finite");
    }
    if (std::abs(alpha) > kMaxRapidity) {
        throw InvalidArgument("rapidity " + std::to_string(alpha) + " exceeds |alpha| <= " +
                              std::to_string(kMaxRapidity));
    }
}

void check_dilation(double c) {
    if (!std::isfinite(c) || c <= 0.0) {
        throw InvalidArgument("dilation must be finite and strictly positive, got " +
                              std::to_string(c));
    }
}

}  // namespace

Matrix2 boost_matrix(double alpha) {
    check_rapidity(alpha);
    const double ch = std::cosh(alpha);
    const double sh = std::sinh(alpha);
    return {ch, -sh, -sh, ch};
}

Matrix2 dilation_matrix(double c) {
    check_dilation(c);
    return {c, 0.0, 0.0, c};
}

Matrix2 boost_dilation(double c, double alpha) {
    check_dilation(c);
    check_rapidity(alpha);
    const double ch = c * std::cosh(alpha);
    const double sh = c * std::sinh(alpha);
    return {ch, -sh, -sh, ch};
}

Matrix2 invert_boost_dilation(double c, double alpha) {
    check_dilation(c);
    check_rapidity(alpha);
    return boost_dilation(1.0 / c, -alpha);
}

double minkowski_quadratic(const SpaceTimePoint& p) {
    if (!std::isfinite(p.s) || !std::isfinite(p.t)) {
        throw InvalidArgument("space-time point must be finite");
    }
    return p.s * p.s - p.t * p.t;
}

GroupElement group_identity() { return {1.0, 0.0, 0.0, 0.0}; }

void validate_group_element(const GroupElement& g) {
    check_dilation(g.c);
    check_rapidity(g.alpha);
    if (!std::isfinite(g.tau_s) || !std::isfinite(g.tau_t)) {
        throw InvalidArgument("translation must be finite");
    }
}

GroupElement group_product(const GroupElement& g1, const GroupElement& g2) {
    validate_group_element(g1);
    validate_group_element(g2);
    // (c, a, tau) . (c', a', tau') = (c c', a + a', tau + B_a D_c tau')
    const Matrix2 m = boost_dilation(g1.c, g1.alpha);
    const SpaceTimePoint shifted = apply(m, {g2.tau_s, g2.tau_t});
    GroupElement out{g1.c * g2.c, g1.alpha + g2.alpha, g1.tau_s + shifted.s, g1.tau_t + shifted.t};
    validate_group_element(out);
    return out;
}

GroupElement group_inverse(const GroupElement& g) {
    validate_group_element(g);
    const Matrix2 m = invert_boost_dilation(g.c, g.alpha);
    const SpaceTimePoint back = apply(m, {g.tau_s, g.tau_t});
    return {1.0 / g.c, -g.alpha, -back.s, -back.t};
}

}  // namespace bsl
