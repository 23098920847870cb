#include "cbt.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace bsl {

namespace {

void check_transform_params(double c, double alpha) {
    if (!std::isfinite(c) || c <= 0.0) throw InvalidArgument("dilation must be positive");
    if (!std::isfinite(alpha) || std::abs(alpha) > kMaxRapidity) {
        throw InvalidArgument("rapidity out of range");
    }
}

void check_grids(const Field2D& f, const MotherBoostlet& m) {
    if (!(f.grid == m.grid())) throw ShapeError("field and window grids differ");
}

// The atom's spectral support is the mother's support mapped through
// M_{1/c,-alpha}: rho scales by 1/c, the rapidity interval widens by |alpha|.
void check_atom_band(const MotherBoostlet& m, double c, double alpha) {
    const double rho_hi = m.rho_max() / c;
    const double beta_hi = std::abs(alpha) + m.beta_max();
    const double axial = rho_hi * std::cosh(beta_hi);
    const double trans = rho_hi * std::sinh(beta_hi);
    const GridSpec& g = m.grid();
    const double nyq_axial = (m.cone() == Cone::Supersonic) ? g.nyquist_s() : g.nyquist_t();
    const double nyq_trans = (m.cone() == Cone::Supersonic) ? g.nyquist_t() : g.nyquist_s();
    if (axial >= nyq_axial || trans >= nyq_trans) {
        throw AliasingError("atom at (c=" + std::to_string(c) + ", alpha=" +
                            std::to_string(alpha) + ") needs band |w_axial| < " +
                            std::to_string(axial) + ", |w_trans| < " + std::to_string(trans) +
                            " but the grid provides " + std::to_string(nyq_axial) + " x " +
                            std::to_string(nyq_trans));
    }
}

}  // namespace

Field2D atom(const MotherBoostlet& m, const GroupElement& g) {
    validate_group_element(g);
    check_atom_band(m, g.c, g.alpha);
    const GridSpec& grid = m.grid();
    const double ch = std::cosh(g.alpha);
    const double sh = std::sinh(g.alpha);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    Spectrum2D spec(grid);
    for (int k = 0; k < grid.n_s; ++k) {
        const double ws = grid.omega_s(k);
        for (int l = 0; l < grid.n_t; ++l) {
            const double wt = grid.omega_t(l);
            const Complex v = m.evaluate(g.c * (ch * ws - sh * wt), g.c * (-sh * ws + ch * wt));
            if (v == Complex{}) {
                spec.at(k, l) = {};
                continue;
            }
            const double phase = -two_pi * (g.tau_s * ws + g.tau_t * wt);
            spec.at(k, l) = g.c * v * Complex{std::cos(phase), std::sin(phase)};
        }
    }
    return dft_inverse(spec);
}

std::pair<Complex, Complex> cbt_point(const Field2D& f, const MotherBoostlet& m,
                                      const GroupElement& g) {
    check_grids(f, m);
    const Field2D a = atom(m, g);
    // <f, phi*_{g}> = sum f.a since conjugating the window twice cancels
    Complex second{0.0, 0.0};
    for (size_t i = 0; i < f.values.size(); ++i) second += f.values[i] * a.values[i];
    return {inner_product(f, a), second * f.grid.cell_area()};
}

CbtCoefficients cbt_slice(const Field2D& f, const MotherBoostlet& m, double c, double alpha) {
    check_grids(f, m);
    check_transform_params(c, alpha);
    const GridSpec& grid = f.grid;
    const MotherBoostlet refl = m.reflected();
    const Spectrum2D F = dft_forward(f);
    const double ch = std::cosh(alpha);
    const double sh = std::sinh(alpha);

    Spectrum2D s1(grid), s2(grid);
    for (int k = 0; k < grid.n_s; ++k) {
        const double ws = grid.omega_s(k);
        for (int l = 0; l < grid.n_t; ++l) {
            const double wt = grid.omega_t(l);
            const double bs = c * (ch * ws - sh * wt);
            const double bt = c * (-sh * ws + ch * wt);
            const Complex fv = F.at(k, l);
            s1.at(k, l) = c * fv * std::conj(m.evaluate(bs, bt));
            s2.at(k, l) = c * fv * refl.evaluate(bs, bt);
        }
    }
    CbtCoefficients out;
    out.c = c;
    out.alpha = alpha;
    out.plane1 = dft_inverse(s1);
    out.plane2 = dft_inverse(s2);
    return out;
}

CbtCoefficients convolution_form(const Field2D& f, const MotherBoostlet& m, double c,
                                 double alpha) {
    check_grids(f, m);
    check_transform_params(c, alpha);
    const Field2D a0 = atom(m, GroupElement{c, alpha, 0.0, 0.0});

    Field2D k1 = circular_reflect(a0);
    Field2D k2 = k1;
    for (auto& v : k1.values) v = std::conj(v);

    const Spectrum2D F = dft_forward(f);
    Spectrum2D K1 = dft_forward(k1);
    Spectrum2D K2 = dft_forward(k2);
    for (size_t i = 0; i < F.values.size(); ++i) {
        K1.values[i] *= F.values[i];
        K2.values[i] *= F.values[i];
    }
    CbtCoefficients out;
    out.c = c;
    out.alpha = alpha;
    out.plane1 = dft_inverse(K1);
    out.plane2 = dft_inverse(K2);
    return out;
}

}  // namespace bsl
