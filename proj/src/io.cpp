#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace bsl {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_bsf(const Field2D& f, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw IoError("cannot open for writing: " + path);
    std::fprintf(fp, "BSF1 %d %d %.17g %.17g\n", f.grid.n_s, f.grid.n_t, f.grid.extent_s,
                 f.grid.extent_t);
    for (const auto& v : f.values) {
        std::fprintf(fp, "%.17g %.17g\n", v.real(), v.imag());
    }
    if (std::fclose(fp) != 0) throw IoError("write failed: " + path);
}

Field2D read_bsf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string magic;
    int ns = 0, nt = 0;
    double es = 0.0, et = 0.0;
    if (!(in >> magic >> ns >> nt >> es >> et) || magic != "BSF1") {
        throw IoError("not a BSF1 field file: " + path);
    }
    GridSpec grid;
    try {
        grid = GridSpec(ns, nt, es, et);
    } catch (const Error& e) {
        throw IoError(path + ": " + e.what());
    }
    Field2D f(grid);
    for (size_t i = 0; i < grid.size(); ++i) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im)) {
            throw IoError(path + ": truncated at sample " + std::to_string(i));
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw IoError(path + ": non-finite sample " + std::to_string(i));
        }
        f.values[i] = Complex(re, im);
    }
    return f;
}

void write_pgm_magnitude(const Field2D& f, const std::string& path) {
    const GridSpec& g = f.grid;
    std::vector<double> mag(g.size());
    double lo = std::abs(f.values[0]), hi = lo;
    for (size_t i = 0; i < f.values.size(); ++i) {
        mag[i] = std::abs(f.values[i]);
        lo = std::min(lo, mag[i]);
        hi = std::max(hi, mag[i]);
    }
    const double span = hi - lo;

    std::FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw IoError("cannot open for writing: " + path);
    // rows = s index, columns = t index
    std::fprintf(fp, "P5\n%d %d\n255\n", g.n_t, g.n_s);
    for (size_t i = 0; i < mag.size(); ++i) {
        const double x = span > 0.0 ? (mag[i] - lo) / span : 0.0;
        const unsigned char b = static_cast<unsigned char>(std::lround(x * 255.0));
        std::fputc(b, fp);
    }
    if (std::fclose(fp) != 0) throw IoError("write failed: " + path);

    std::ofstream meta(path + ".meta");
    if (!meta) throw IoError("cannot open for writing: " + path + ".meta");
    meta << "min_magnitude " << format_double(lo) << "\n"
         << "max_magnitude " << format_double(hi) << "\n";
}

}  // namespace bsl
