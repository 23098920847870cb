#pragma once

#include <array>
#include <complex>
#include <vector>

#include "field.hpp"
#include "quadrature.hpp"

namespace bsl {

// The two open frequency cones delimited by the light-cone lines |w_s| = |w_t|.
enum class Cone { Supersonic, Subsonic };

// Hyperbolic polar coordinates on a cone: rho = sqrt(|w_s^2 - w_t^2|),
// beta = artanh of the transverse/axial ratio. branch is the sign of the
// axial component (+1/-1), or 0 when the point lies outside the cone.
struct HyperbolicCoords {
    double rho = 0.0;
    double beta = 0.0;
    int branch = 0;
};

HyperbolicCoords cone_coords(Cone cone, double w_s, double w_t);

// Euclidean distance from (w_s, w_t) to the nearest light-cone line.
double lightcone_distance(double w_s, double w_t);

struct BumpProfile {
    double center = 0.0;  // in log-rho for the scale profile, 0 for rapidity
    double width = 0.0;
};

// C-infinity compactly supported bump, peak 1 at x = 0, zero for |x| >= 1.
double bump(double x);

// Analyzing window defined natively in the frequency domain: a smooth bump in
// log rho times a smooth bump in rapidity, living on one branch of one cone,
// zeroed on a guard band around the light-cone lines. The conjugate window
// phi* and the reflection phi(-.) are cheap derived views (branch flip and/or
// amplitude conjugation); every spectral evaluation goes through the same
// analytic profiles, so warped evaluations phi_hat(M^T w) are exact.
class MotherBoostlet {
public:
    static MotherBoostlet make(const GridSpec& grid, Cone cone, double scale_center,
                               double scale_width, double rapidity_width);

    // phi_hat at an arbitrary frequency point (not restricted to the lattice).
    Complex evaluate(double w_s, double w_t) const;

    MotherBoostlet conjugated() const;  // spectrum of phi*
    MotherBoostlet reflected() const;   // spectrum of phi(-.)
    MotherBoostlet scaled(Complex a) const;
    MotherBoostlet dilated(double lambda) const;  // window mu -> phi(mu / lambda)

    const GridSpec& grid() const { return grid_; }
    Cone cone() const { return cone_; }
    int branch() const { return branch_; }
    Complex amplitude() const { return amplitude_; }
    const BumpProfile& scale_profile() const { return scale_; }
    const BumpProfile& rapidity_profile() const { return rapidity_; }
    double guard_width() const { return guard_; }
    double norm() const { return norm_; }

    const Spectrum2D& spectrum() const { return spectrum_; }
    Field2D space_samples() const;

    // Support bounds in hyperbolic coordinates (exact, from the profiles).
    double rho_min() const { return std::exp(scale_.center - scale_.width); }
    double rho_max() const { return std::exp(scale_.center + scale_.width); }
    double beta_max() const { return rapidity_.width; }

private:
    MotherBoostlet() = default;
    void resample();

    GridSpec grid_;
    Cone cone_ = Cone::Supersonic;
    BumpProfile scale_;
    BumpProfile rapidity_;
    double guard_ = 0.0;
    Complex amplitude_{1.0, 0.0};
    int branch_ = +1;
    Spectrum2D spectrum_;
    double norm_ = 0.0;
};

MotherBoostlet default_mother(const GridSpec& grid, Cone cone, double scale_center,
                              double scale_width, double rapidity_width);

// Per-frequency-sample admissibility integrals and their pooled constant.
struct AdmissibilityResult {
    std::vector<std::array<double, 2>> omegas;
    std::vector<double> delta_phi;
    std::vector<double> delta_phi_star;
    double delta = 0.0;            // mean over samples of delta_phi + delta_phi_star
    double relative_spread = 0.0;  // max |sum - mean| / mean
    bool admissible = false;
    bool resolution_warning = false;
    QuadSpec quadrature;
};

AdmissibilityResult admissibility(const MotherBoostlet& m,
                                  const std::vector<std::array<double, 2>>& omega_samples,
                                  const QuadSpec& quad);

// Integration box covering the profile supports plus three widths of margin.
QuadSpec default_quadrature(const MotherBoostlet& m, int n_c, int n_alpha);

// Frequency samples spread over the interior of the cone, both branches.
std::vector<std::array<double, 2>> default_omega_samples(const MotherBoostlet& m, int n);

}  // namespace bsl
