#include "field.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "fft.hpp"

namespace bsl {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_same_grid(const Field2D& f, const Field2D& g) {
    if (!(f.grid == g.grid)) {
        throw ShapeError("grid mismatch between fields");
    }
}

}  // namespace

GridSpec::GridSpec(int ns, int nt, double es, double et)
    : n_s(ns), n_t(nt), extent_s(es), extent_t(et) {
    if (n_s < 8 || n_t < 8 || !power_of_two(n_s) || !power_of_two(n_t)) {
        throw InvalidArgument("grid sample counts must be powers of two >= 8, got " +
                              std::to_string(n_s) + "x" + std::to_string(n_t));
    }
    if (!std::isfinite(extent_s) || !std::isfinite(extent_t) || extent_s <= 0.0 ||
        extent_t <= 0.0) {
        throw InvalidArgument("grid extents must be finite and positive");
    }
}

Field2D sample_function(const std::function<Complex(double, double)>& fn, const GridSpec& grid) {
    Field2D out(grid);
    for (int i = 0; i < grid.n_s; ++i) {
        const double s = grid.s(i);
        for (int j = 0; j < grid.n_t; ++j) {
            const Complex v = fn(s, grid.t(j));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw SamplingError("non-finite sample at node (s=" + std::to_string(s) +
                                    ", t=" + std::to_string(grid.t(j)) + ")");
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

// With s_i = -E + i ds and w_k = k/(2E) the continuous kernel splits into a
// plain DFT times a checkerboard sign: e^{-2 pi i w_k s_i} = (-1)^k e^{-2 pi i k i / n}.
// n/2 is a multiple of 4 for every admissible grid, so (-1)^k == (-1)^{k_storage}.
Spectrum2D dft_forward(const Field2D& f) {
    const GridSpec& g = f.grid;
    std::vector<Complex> raw(g.size());
    detail::fft2d(g.n_s, g.n_t, f.values.data(), raw.data(), -1);

    Spectrum2D out(g);
    const double scale = g.cell_area();
    for (int k = 0; k < g.n_s; ++k) {
        const int kraw = (k + g.n_s / 2) % g.n_s;
        for (int l = 0; l < g.n_t; ++l) {
            const int lraw = (l + g.n_t / 2) % g.n_t;
            const double sign = ((k + l) & 1) ? -1.0 : 1.0;
            out.at(k, l) = sign * scale * raw[static_cast<size_t>(kraw) * g.n_t + lraw];
        }
    }
    return out;
}

Field2D dft_inverse(const Spectrum2D& spec) {
    const GridSpec& g = spec.grid;
    std::vector<Complex> staged(g.size());
    for (int k = 0; k < g.n_s; ++k) {
        const int kraw = (k + g.n_s / 2) % g.n_s;
        for (int l = 0; l < g.n_t; ++l) {
            const int lraw = (l + g.n_t / 2) % g.n_t;
            const double sign = ((k + l) & 1) ? -1.0 : 1.0;
            staged[static_cast<size_t>(kraw) * g.n_t + lraw] = sign * spec.at(k, l);
        }
    }
    Field2D out(g);
    detail::fft2d(g.n_s, g.n_t, staged.data(), out.values.data(), +1);
    const double scale = g.freq_cell_area();
    for (auto& v : out.values) v *= scale;
    return out;
}

Complex inner_product(const Field2D& f, const Field2D& g) {
    check_same_grid(f, g);
    Complex acc{0.0, 0.0};
    for (size_t i = 0; i < f.values.size(); ++i) {
        acc += f.values[i] * std::conj(g.values[i]);
    }
    return acc * f.grid.cell_area();
}

double l2_norm(const Field2D& f) {
    double acc = 0.0;
    for (const auto& v : f.values) acc += std::norm(v);
    return std::sqrt(acc * f.grid.cell_area());
}

double l2_norm(const Spectrum2D& s) {
    double acc = 0.0;
    for (const auto& v : s.values) acc += std::norm(v);
    return std::sqrt(acc * s.grid.freq_cell_area());
}

Field2D circular_translate(const Field2D& f, int k_s, int k_t) {
    const GridSpec& g = f.grid;
    Field2D out(g);
    const int ms = ((k_s % g.n_s) + g.n_s) % g.n_s;
    const int mt = ((k_t % g.n_t) + g.n_t) % g.n_t;
    for (int i = 0; i < g.n_s; ++i) {
        const int si = (i - ms + g.n_s) % g.n_s;
        for (int j = 0; j < g.n_t; ++j) {
            out.at(i, j) = f.at(si, (j - mt + g.n_t) % g.n_t);
        }
    }
    return out;
}

Field2D circular_reflect(const Field2D& f) {
    const GridSpec& g = f.grid;
    Field2D out(g);
    for (int i = 0; i < g.n_s; ++i) {
        const int ri = (g.n_s - i) % g.n_s;
        for (int j = 0; j < g.n_t; ++j) {
            out.at(i, j) = f.at(ri, (g.n_t - j) % g.n_t);
        }
    }
    return out;
}

}  // namespace bsl
