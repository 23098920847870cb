#pragma once

#include <string>

#include "field.hpp"

namespace bsl {

// .bsf field file: ASCII, line 1 "BSF1 n_s n_t extent_s extent_t", then one
// "re im" pair per sample, row-major with s outer. 17 significant digits so a
// write/read cycle is bit-stable at double precision.
void write_bsf(const Field2D& f, const std::string& path);
Field2D read_bsf(const std::string& path);

// 8-bit binary PGM of |f|, linear between the min and max magnitude; the
// mapping endpoints go to a "<path>.meta" sidecar.
void write_pgm_magnitude(const Field2D& f, const std::string& path);

std::string format_double(double v);  // shortest round-trippable decimal form

}  // namespace bsl
