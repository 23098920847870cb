#pragma once

#include <cstdint>

#include "field.hpp"
#include "mother.hpp"

namespace bsl {

// Deterministic cone-band-limited test signal: a few complex Gaussian bumps
// placed in the interior of the window's cone (both branches), masked to
// vanish outside the cone and inside the guard band, then synthesized by
// inverse DFT. Fully determined by (seed, index) through splitmix64.
Field2D suite_signal(const GridSpec& grid, const MotherBoostlet& m, uint64_t seed, int index);

}  // namespace bsl
