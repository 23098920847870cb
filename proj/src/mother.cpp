#include "mother.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace bsl {

double bump(double x) {
    const double x2 = x * x;
    if (x2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - x2));
}

double lightcone_distance(double w_s, double w_t) {
    return std::min(std::abs(w_s - w_t), std::abs(w_s + w_t)) / std::sqrt(2.0);
}

HyperbolicCoords cone_coords(Cone cone, double w_s, double w_t) {
    const double axial = (cone == Cone::Supersonic) ? w_s : w_t;
    const double trans = (cone == Cone::Supersonic) ? w_t : w_s;
    if (std::abs(axial) <= std::abs(trans) || axial == 0.0) {
        return {};  // outside the open cone
    }
    HyperbolicCoords hc;
    hc.branch = axial > 0.0 ? +1 : -1;
    hc.rho = std::sqrt((axial - trans) * (axial + trans));
    hc.beta = std::atanh(trans / axial);
    return hc;
}

Complex MotherBoostlet::evaluate(double w_s, double w_t) const {
    const HyperbolicCoords hc = cone_coords(cone_, w_s, w_t);
    if (hc.branch != branch_) return {0.0, 0.0};
    if (lightcone_distance(w_s, w_t) < guard_) return {0.0, 0.0};
    const double wv = bump((std::log(hc.rho) - scale_.center) / scale_.width);
    if (wv == 0.0) return {0.0, 0.0};
    const double vv = bump((hc.beta - rapidity_.center) / rapidity_.width);
    if (vv == 0.0) return {0.0, 0.0};
    return amplitude_ * (wv * vv);
}

void MotherBoostlet::resample() {
    spectrum_ = Spectrum2D(grid_);
    double acc = 0.0;
    for (int k = 0; k < grid_.n_s; ++k) {
        const double ws = grid_.omega_s(k);
        for (int l = 0; l < grid_.n_t; ++l) {
            const Complex v = evaluate(ws, grid_.omega_t(l));
            spectrum_.at(k, l) = v;
            acc += std::norm(v);
        }
    }
    norm_ = std::sqrt(acc * grid_.freq_cell_area());
}

MotherBoostlet MotherBoostlet::make(const GridSpec& grid, Cone cone, double scale_center,
                                    double scale_width, double rapidity_width) {
    if (!std::isfinite(scale_center) || scale_center <= 0.0) {
        throw InvalidArgument("scale_center must be finite and positive");
    }
    if (!std::isfinite(scale_width) || scale_width <= 0.0 || !std::isfinite(rapidity_width) ||
        rapidity_width <= 0.0) {
        throw DegenerateWindowError("profile widths must be strictly positive");
    }

    MotherBoostlet m;
    m.grid_ = grid;
    m.cone_ = cone;
    m.scale_ = {std::log(scale_center), scale_width};
    m.rapidity_ = {0.0, rapidity_width};
    m.guard_ = 3.0 * std::max(grid.domega_s(), grid.domega_t());
    m.branch_ = +1;
    m.amplitude_ = {1.0, 0.0};

    // Support bounding box in frequency, exact from the profiles.
    const double rho_hi = m.rho_max();
    const double axial_max = rho_hi * std::cosh(rapidity_width);
    const double trans_max = rho_hi * std::sinh(rapidity_width);
    const double nyq_axial = (cone == Cone::Supersonic) ? grid.nyquist_s() : grid.nyquist_t();
    const double nyq_trans = (cone == Cone::Supersonic) ? grid.nyquist_t() : grid.nyquist_s();
    if (axial_max >= nyq_axial || trans_max >= nyq_trans) {
        throw AliasingError("window support needs band |w_axial| < " + std::to_string(axial_max) +
                            ", |w_trans| < " + std::to_string(trans_max) +
                            " but the grid provides " + std::to_string(nyq_axial) + " x " +
                            std::to_string(nyq_trans));
    }

    m.resample();
    if (!(m.norm_ > 0.0)) {
        throw DegenerateWindowError("window has empty effective support on this grid");
    }
    return m;
}

MotherBoostlet default_mother(const GridSpec& grid, Cone cone, double scale_center,
                              double scale_width, double rapidity_width) {
    return MotherBoostlet::make(grid, cone, scale_center, scale_width, rapidity_width);
}

MotherBoostlet MotherBoostlet::conjugated() const {
    MotherBoostlet m(*this);
    m.amplitude_ = std::conj(m.amplitude_);
    m.branch_ = -m.branch_;
    m.resample();
    return m;
}

MotherBoostlet MotherBoostlet::reflected() const {
    MotherBoostlet m(*this);
    m.branch_ = -m.branch_;
    m.resample();
    return m;
}

MotherBoostlet MotherBoostlet::scaled(Complex a) const {
    MotherBoostlet m(*this);
    m.amplitude_ *= a;
    m.resample();
    return m;
}

MotherBoostlet MotherBoostlet::dilated(double lambda) const {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw InvalidArgument("dilation factor must be finite and positive");
    }
    MotherBoostlet m(*this);
    // mu -> phi(mu/lambda) means w -> lambda^2 phi_hat(lambda w); the guard
    // band transforms with the window so the view is the exact dilation.
    m.scale_.center -= std::log(lambda);
    m.amplitude_ *= lambda * lambda;
    m.guard_ /= lambda;
    m.resample();
    return m;
}

Field2D MotherBoostlet::space_samples() const { return dft_inverse(spectrum_); }

QuadSpec default_quadrature(const MotherBoostlet& m, int n_c, int n_alpha) {
    QuadSpec q;
    const double uw = m.scale_profile().width;
    const double bw = m.rapidity_profile().width;
    q.c_min = std::exp(-5.0 * uw);
    q.c_max = std::exp(5.0 * uw);
    q.alpha_min = -5.0 * bw;
    q.alpha_max = 5.0 * bw;
    q.n_c = n_c;
    q.n_alpha = n_alpha;
    return q;
}

std::vector<std::array<double, 2>> default_omega_samples(const MotherBoostlet& m, int n) {
    if (n < 4) throw InvalidArgument("need at least 4 omega samples");
    const double c0 = m.scale_profile().center;
    const double uw = m.scale_profile().width;
    const double bw = m.rapidity_profile().width;
    const int n_rho = std::max(1, n / 4);
    std::vector<std::array<double, 2>> out;
    out.reserve(n);
    int produced = 0;
    for (int ib = 0; ib < 2 && produced < n; ++ib) {
        const int branch = ib == 0 ? +1 : -1;
        for (int jb = 0; jb < 2 && produced < n; ++jb) {
            const double beta = (jb == 0 ? -0.6 : 0.6) * bw;
            for (int ir = 0; ir < n_rho && produced < n; ++ir) {
                const double u =
                    c0 + (n_rho == 1 ? 0.0 : -0.8 * uw + 1.6 * uw * ir / (n_rho - 1.0));
                const double rho = std::exp(u);
                double axial = branch * rho * std::cosh(beta);
                double trans = branch * rho * std::sinh(beta);
                if (m.cone() == Cone::Subsonic) std::swap(axial, trans);
                out.push_back({axial, trans});
                ++produced;
            }
        }
    }
    return out;
}

AdmissibilityResult admissibility(const MotherBoostlet& m,
                                  const std::vector<std::array<double, 2>>& omega_samples,
                                  const QuadSpec& quad) {
    if (omega_samples.empty()) throw InvalidArgument("empty omega sample list");
    validate_quad_spec(quad, 16);
    for (const auto& w : omega_samples) {
        const HyperbolicCoords hc = cone_coords(m.cone(), w[0], w[1]);
        if (hc.branch == 0 || lightcone_distance(w[0], w[1]) < m.guard_width()) {
            throw InvalidArgument("omega sample (" + std::to_string(w[0]) + ", " +
                                  std::to_string(w[1]) +
                                  ") is outside the cone interior or inside the guard band");
        }
    }

    const auto x = linspace(std::log(quad.c_min), std::log(quad.c_max), quad.n_c);
    const auto wx = trapezoid_weights(std::log(quad.c_min), std::log(quad.c_max), quad.n_c);
    const auto alphas = linspace(quad.alpha_min, quad.alpha_max, quad.n_alpha);
    const auto wa = trapezoid_weights(quad.alpha_min, quad.alpha_max, quad.n_alpha);

    const MotherBoostlet conj = m.conjugated();

    AdmissibilityResult res;
    res.omegas = omega_samples;
    res.quadrature = quad;
    res.delta_phi.resize(omega_samples.size());
    res.delta_phi_star.resize(omega_samples.size());

    for (size_t s = 0; s < omega_samples.size(); ++s) {
        const double ws = omega_samples[s][0];
        const double wt = omega_samples[s][1];
        double dphi = 0.0;
        double dstar = 0.0;
        for (int j = 0; j < quad.n_alpha; ++j) {
            const double ch = std::cosh(alphas[j]);
            const double sh = std::sinh(alphas[j]);
            // M_{c,alpha}^T w = M_{c,alpha} w, accumulated with measure dc dalpha / c
            const double bs = ch * ws - sh * wt;
            const double bt = -sh * ws + ch * wt;
            double row_phi = 0.0;
            double row_star = 0.0;
            for (int i = 0; i < quad.n_c; ++i) {
                const double c = std::exp(x[i]);
                row_phi += wx[i] * std::norm(m.evaluate(c * bs, c * bt));
                row_star += wx[i] * std::norm(conj.evaluate(c * bs, c * bt));
            }
            dphi += wa[j] * row_phi;
            dstar += wa[j] * row_star;
        }
        res.delta_phi[s] = dphi;
        res.delta_phi_star[s] = dstar;
    }

    double mean = 0.0;
    for (size_t s = 0; s < omega_samples.size(); ++s) {
        mean += res.delta_phi[s] + res.delta_phi_star[s];
    }
    mean /= static_cast<double>(omega_samples.size());
    res.delta = mean;

    double spread = 0.0;
    if (mean > 0.0) {
        for (size_t s = 0; s < omega_samples.size(); ++s) {
            spread = std::max(
                spread, std::abs(res.delta_phi[s] + res.delta_phi_star[s] - mean) / mean);
        }
    }
    res.relative_spread = spread;
    res.admissible = std::isfinite(mean) && mean > 0.0;

    const double dx = (std::log(quad.c_max) - std::log(quad.c_min)) / (quad.n_c - 1);
    const double da = (quad.alpha_max - quad.alpha_min) / (quad.n_alpha - 1);
    res.resolution_warning =
        dx > m.scale_profile().width / 4.0 || da > m.rapidity_profile().width / 4.0;
    return res;
}

}  // namespace bsl
