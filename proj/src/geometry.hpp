#pragma once

#include <cmath>

namespace bsl {

// Hyperbolic rotations mix space and time; cosh overflows double long before
// the formulas stop being useful, so rapidities are capped hard.
inline constexpr double kMaxRapidity = 20.0;

struct Matrix2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    double det() const { return a11 * a22 - a12 * a21; }
    Matrix2 transpose() const { return {a11, a21, a12, a22}; }

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
};

inline constexpr Matrix2 kIdentity2{1.0, 0.0, 0.0, 1.0};
// Minkowski metric diag(1, -1); the invariant quadratic form is s^2 - t^2.
inline constexpr Matrix2 kMinkowskiEta{1.0, 0.0, 0.0, -1.0};

struct SpaceTimePoint {
    double s = 0.0;
    double t = 0.0;
};

inline SpaceTimePoint apply(const Matrix2& m, const SpaceTimePoint& p) {
    return {m.a11 * p.s + m.a12 * p.t, m.a21 * p.s + m.a22 * p.t};
}

// A point (c, alpha, tau) of the boost-dilation-translation group. tau stays
// un-quantized real; grids enter only when fields are sampled.
struct GroupElement {
    double c = 1.0;
    double alpha = 0.0;
    double tau_s = 0.0;
    double tau_t = 0.0;
};

Matrix2 boost_matrix(double alpha);
Matrix2 dilation_matrix(double c);
Matrix2 boost_dilation(double c, double alpha);
Matrix2 invert_boost_dilation(double c, double alpha);

double minkowski_quadratic(const SpaceTimePoint& p);

GroupElement group_identity();
GroupElement group_product(const GroupElement& g1, const GroupElement& g2);
GroupElement group_inverse(const GroupElement& g);
void validate_group_element(const GroupElement& g);

}  // namespace bsl
