#include "signals.hpp"

#include <cmath>
#include <numbers>

#include "rng.hpp"

namespace bsl {

Field2D suite_signal(const GridSpec& grid, const MotherBoostlet& m, uint64_t seed, int index) {
    SplitMix64 rng(seed ^ (static_cast<uint64_t>(index) * 0xd1342543de82ef95ull));

    const double sc = std::exp(m.scale_profile().center);
    const double sw = m.scale_profile().width;
    const double bw = m.rapidity_profile().width;
    const double sigma_cell = std::max(grid.domega_s(), grid.domega_t());

    struct Packet {
        double ws, wt, sigma;
        Complex amp;
    };
    Packet packets[3];
    const int n_packets = 2 + rng.pick(2);
    for (int p = 0; p < n_packets; ++p) {
        const int branch = rng.pick(2) == 0 ? +1 : -1;
        const double rho = sc * std::exp(rng.range(0.0, 0.8 * sw));
        const double beta = rng.range(-0.6 * bw, 0.6 * bw);
        double axial = branch * rho * std::cosh(beta);
        double trans = branch * rho * std::sinh(beta);
        if (m.cone() == Cone::Subsonic) std::swap(axial, trans);
        const double phase = rng.range(0.0, 2.0 * std::numbers::pi);
        packets[p] = {axial, trans, rng.range(1.5, 2.0) * sigma_cell,
                      std::polar(rng.range(0.5, 1.0), phase)};
    }

    Spectrum2D spec(grid);
    for (int k = 0; k < grid.n_s; ++k) {
        const double ws = grid.omega_s(k);
        for (int l = 0; l < grid.n_t; ++l) {
            const double wt = grid.omega_t(l);
            if (cone_coords(m.cone(), ws, wt).branch == 0 ||
                lightcone_distance(ws, wt) < m.guard_width()) {
                continue;
            }
            Complex v{0.0, 0.0};
            for (int p = 0; p < n_packets; ++p) {
                const double d2 = (ws - packets[p].ws) * (ws - packets[p].ws) +
                                  (wt - packets[p].wt) * (wt - packets[p].wt);
                v += packets[p].amp * std::exp(-d2 / (2.0 * packets[p].sigma * packets[p].sigma));
            }
            spec.at(k, l) = v;
        }
    }
    return dft_inverse(spec);
}

}  // namespace bsl
