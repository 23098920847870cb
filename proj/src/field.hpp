#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "geometry.hpp"

namespace bsl {

using Complex = std::complex<double>;

// Uniform grid over [-extent, extent) per axis; sample counts are powers of
// two so the DFT lattice and the slicing arithmetic stay exact.
struct GridSpec {
    int n_s = 0;
    int n_t = 0;
    double extent_s = 0.0;
    double extent_t = 0.0;

    GridSpec() = default;
    GridSpec(int ns, int nt, double es, double et);

    double ds() const { return 2.0 * extent_s / n_s; }
    double dt() const { return 2.0 * extent_t / n_t; }
    double cell_area() const { return ds() * dt(); }

    // Frequency lattice: spacing 1/(2 extent), zero-centred storage.
    double domega_s() const { return 1.0 / (2.0 * extent_s); }
    double domega_t() const { return 1.0 / (2.0 * extent_t); }
    double freq_cell_area() const { return domega_s() * domega_t(); }
    double nyquist_s() const { return n_s / (4.0 * extent_s); }
    double nyquist_t() const { return n_t / (4.0 * extent_t); }

    double s(int i) const { return -extent_s + i * ds(); }
    double t(int j) const { return -extent_t + j * dt(); }
    double omega_s(int k) const { return (k - n_s / 2) * domega_s(); }
    double omega_t(int l) const { return (l - n_t / 2) * domega_t(); }

    size_t size() const { return static_cast<size_t>(n_s) * n_t; }

    bool operator==(const GridSpec& o) const {
        return n_s == o.n_s && n_t == o.n_t && extent_s == o.extent_s && extent_t == o.extent_t;
    }
};

// Sampled complex field, row-major with s as the outer index.
struct Field2D {
    GridSpec grid;
    std::vector<Complex> values;

    Field2D() = default;
    explicit Field2D(const GridSpec& g) : grid(g), values(g.size()) {}

    Complex& at(int i, int j) { return values[static_cast<size_t>(i) * grid.n_t + j]; }
    const Complex& at(int i, int j) const { return values[static_cast<size_t>(i) * grid.n_t + j]; }
};

// Discrete Fourier dual of a Field2D, zero-centred lattice, scaled so values
// approximate the integral transform with the e^{-2 pi i w.mu} kernel.
struct Spectrum2D {
    GridSpec grid;
    std::vector<Complex> values;

    Spectrum2D() = default;
    explicit Spectrum2D(const GridSpec& g) : grid(g), values(g.size()) {}

    Complex& at(int k, int l) { return values[static_cast<size_t>(k) * grid.n_t + l]; }
    const Complex& at(int k, int l) const { return values[static_cast<size_t>(k) * grid.n_t + l]; }
};

Field2D sample_function(const std::function<Complex(double, double)>& fn, const GridSpec& grid);

Spectrum2D dft_forward(const Field2D& f);
Field2D dft_inverse(const Spectrum2D& spec);

Complex inner_product(const Field2D& f, const Field2D& g);
double l2_norm(const Field2D& f);
double l2_norm(const Spectrum2D& s);

Field2D circular_translate(const Field2D& f, int k_s, int k_t);
// mu -> -mu on the periodic grid (index i -> (n - i) mod n).
Field2D circular_reflect(const Field2D& f);

}  // namespace bsl
