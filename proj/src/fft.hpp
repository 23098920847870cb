#pragma once

#include <complex>

namespace bsl::detail {

// Unnormalized 2D DFT, row-major n0 x n1, sign -1 forward / +1 backward.
// Backed by FFTW with a mutex-guarded plan cache; execution is reentrant, so
// transforms of independent buffers may run concurrently.
void fft2d(int n0, int n1, const std::complex<double>* in, std::complex<double>* out, int sign);

}  // namespace bsl::detail
