#include "suite.hpp"

#include <cmath>
#include <numbers>

#include "cbt.hpp"
#include "rng.hpp"
#include "signals.hpp"

namespace bsl {

namespace {

double max_abs(const Field2D& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const Field2D& a, const Field2D& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    }
    return m;
}

// max |a - b| over both planes, relative to the largest reference magnitude
double plane_residual(const CbtCoefficients& a, const CbtCoefficients& b) {
    const double scale = std::max({max_abs(a.plane1), max_abs(a.plane2), 1e-300});
    return std::max(max_abs_diff(a.plane1, b.plane1), max_abs_diff(a.plane2, b.plane2)) / scale;
}

Field2D lincomb(Complex l, const Field2D& f1, Complex m, const Field2D& f2) {
    Field2D out(f1.grid);
    for (size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = l * f1.values[i] + m * f2.values[i];
    }
    return out;
}

Field2D scale_field(const Field2D& f, Complex a) {
    Field2D out = f;
    for (auto& v : out.values) v *= a;
    return out;
}

CbtCoefficients map_planes(const CbtCoefficients& s, Complex a1, Complex a2) {
    CbtCoefficients out;
    out.c = s.c;
    out.alpha = s.alpha;
    out.plane1 = scale_field(s.plane1, a1);
    out.plane2 = scale_field(s.plane2, a2);
    return out;
}

}  // namespace

std::vector<VerifyRow> run_verify_suite(const GridSpec& grid, Cone cone, double scale_center,
                                        double scale_width, double rapidity_width,
                                        uint64_t seed) {
    std::vector<VerifyRow> rows;
    auto add = [&rows](const std::string& name, double residual, double tol,
                       bool informational = false) {
        rows.push_back({name, residual, tol, informational || residual < tol, informational});
    };

    const MotherBoostlet m =
        default_mother(grid, cone, scale_center, scale_width, rapidity_width);
    const Field2D f1 = suite_signal(grid, m, seed, 1);
    const Field2D f2 = suite_signal(grid, m, seed, 2);
    const double c = 1.1;
    const double alpha = 0.2;
    const CbtCoefficients s1 = cbt_slice(f1, m, c, alpha);
    const CbtCoefficients s2 = cbt_slice(f2, m, c, alpha);

    {
        const Complex l{0.7, -0.3}, mm{-0.2, 1.1};
        const CbtCoefficients mixed = cbt_slice(lincomb(l, f1, mm, f2), m, c, alpha);
        CbtCoefficients expect;
        expect.plane1 = lincomb(l, s1.plane1, mm, s2.plane1);
        expect.plane2 = lincomb(l, s1.plane2, mm, s2.plane2);
        add("linearity", plane_residual(mixed, expect), 1e-12);
    }

    {
        const Complex a{0.8, 0.6};
        const CbtCoefficients with_scaled = cbt_slice(f1, m.scaled(a), c, alpha);
        // first component picks up conj(a), second picks up a
        add("window_conjugate_linearity",
            plane_residual(with_scaled, map_planes(s1, std::conj(a), a)), 1e-12);
        // textbook form multiplies both components by |a|^2
        add("homogeneity_paper_variant",
            plane_residual(with_scaled, map_planes(s1, std::norm(a), std::norm(a))), 0.0, true);
    }

    {
        const int ks = 3, kt = 5;
        const CbtCoefficients shifted = cbt_slice(circular_translate(f1, ks, kt), m, c, alpha);
        CbtCoefficients expect;
        expect.plane1 = circular_translate(s1.plane1, ks, kt);
        expect.plane2 = circular_translate(s1.plane2, ks, kt);
        add("translation_covariance", plane_residual(shifted, expect), 1e-10);
    }

    {
        const CbtCoefficients refl = cbt_slice(circular_reflect(f1), m, c, alpha);
        const CbtCoefficients with_refl = cbt_slice(f1, m.reflected(), c, alpha);
        CbtCoefficients expect;
        expect.plane1 = circular_reflect(with_refl.plane1);
        expect.plane2 = circular_reflect(with_refl.plane2);
        add("reflection_identity", plane_residual(refl, expect), 1e-10);
        const CbtCoefficients negated = map_planes(expect, -1.0, -1.0);
        add("reflection_paper_signed_variant", plane_residual(refl, negated), 0.0, true);
    }

    {
        // f(lambda mu) against the window dilated by lambda, lambda = 2:
        // the first form equals lambda^{-2} times the second at tau scaled up.
        const double lambda = 2.0;
        SplitMix64 rng(seed ^ 0x5ca1ab1eull);
        struct Packet {
            double ws, wt, width;
            Complex amp;
        };
        Packet pk[2];
        for (auto& p : pk) {
            const double rho = rng.range(0.8, 1.0);
            const double beta = rng.range(-0.2, 0.2);
            const int branch = rng.pick(2) == 0 ? +1 : -1;
            double axial = branch * rho * std::cosh(beta);
            double trans = branch * rho * std::sinh(beta);
            if (cone == Cone::Subsonic) std::swap(axial, trans);
            p = {axial, trans, 1.5, std::polar(rng.range(0.5, 1.0), rng.range(0.0, 6.28))};
        }
        auto packet_fn = [&pk](double s, double t) {
            Complex v{0.0, 0.0};
            constexpr double two_pi = 2.0 * std::numbers::pi;
            for (const auto& p : pk) {
                const double ph = two_pi * (p.ws * s + p.wt * t);
                v += p.amp * std::exp(-(s * s + t * t) / (2.0 * p.width * p.width)) *
                     Complex{std::cos(ph), std::sin(ph)};
            }
            return v;
        };
        const Field2D f = sample_function(packet_fn, grid);
        const Field2D f_scaled = sample_function(
            [&](double s, double t) { return packet_fn(lambda * s, lambda * t); }, grid);

        const CbtCoefficients lhs = cbt_slice(f_scaled, m, c, alpha);
        const CbtCoefficients rhs = cbt_slice(f, m.dilated(lambda), c, alpha);

        // compare on the central window where lambda*tau stays on the grid
        double resid2 = 0.0, resid1 = 0.0, scale = 0.0;
        for (int i = grid.n_s / 4; i < 3 * grid.n_s / 4; ++i) {
            const int i2 = 2 * i - grid.n_s / 2;
            for (int j = grid.n_t / 4; j < 3 * grid.n_t / 4; ++j) {
                const int j2 = 2 * j - grid.n_t / 2;
                for (int comp = 0; comp < 2; ++comp) {
                    const Field2D& lp = comp == 0 ? lhs.plane1 : lhs.plane2;
                    const Field2D& rp = comp == 0 ? rhs.plane1 : rhs.plane2;
                    const Complex got = lp.at(i, j);
                    const Complex ref = rp.at(i2, j2);
                    scale = std::max(scale, std::abs(got));
                    resid2 = std::max(resid2, std::abs(got - ref / (lambda * lambda)));
                    resid1 = std::max(resid1, std::abs(got - ref / lambda));
                }
            }
        }
        add("scaling_lambda_squared", resid2 / scale, 1e-4);
        add("scaling_paper_lambda_variant", resid1 / scale, 0.0, true);
    }

    {
        SplitMix64 rng(seed ^ 0x7a7e5eedull);
        double resid = 0.0;
        const double scale = std::max({max_abs(s1.plane1), max_abs(s1.plane2), 1e-300});
        for (int trial = 0; trial < 16; ++trial) {
            const int i = rng.pick(grid.n_s);
            const int j = rng.pick(grid.n_t);
            const GroupElement g{c, alpha, grid.s(i), grid.t(j)};
            const auto [p1, p2] = cbt_point(f1, m, g);
            resid = std::max(resid, std::abs(p1 - s1.plane1.at(i, j)));
            resid = std::max(resid, std::abs(p2 - s1.plane2.at(i, j)));
        }
        add("path_point_vs_slice", resid / scale, 1e-10);
    }

    add("path_convolution_vs_slice", plane_residual(convolution_form(f1, m, c, alpha), s1),
        1e-10);

    {
        const QuadSpec spec = default_quadrature(m, 48, 48);
        const GroupQuadrature q = make_group_quadrature(spec);
        const AdmissibilityResult adm = admissibility(m, default_omega_samples(m, 32), spec);
        const double energy = group_energy(f1, m, q);
        const double n = l2_norm(f1);
        const double expect = adm.delta * n * n;
        add("group_energy_identity", std::abs(energy - expect) / expect, 0.05);
    }

    return rows;
}

}  // namespace bsl
