#pragma once

#include <utility>

#include "field.hpp"
#include "geometry.hpp"
#include "mother.hpp"

namespace bsl {

// Pair-valued transform output at fixed (c, alpha), both components over the
// full translation grid: plane1 = <f, phi_{c,a,tau}>, plane2 = <f, phi*_{c,a,tau}>.
struct CbtCoefficients {
    double c = 1.0;
    double alpha = 0.0;
    Field2D plane1;
    Field2D plane2;
};

// Sampled atom phi_{c,alpha,tau}, synthesized spectrally from
// c phi_hat(M^T w) e^{-2 pi i tau.w}. Raises AliasingError when the warped
// support cannot be represented inside the grid's Nyquist band.
Field2D atom(const MotherBoostlet& m, const GroupElement& g);

// Direct inner-product evaluation at one group point; tau need not be
// grid-aligned.
std::pair<Complex, Complex> cbt_point(const Field2D& f, const MotherBoostlet& m,
                                      const GroupElement& g);

// Frequency-path evaluation of both coefficient planes for all tau at once.
CbtCoefficients cbt_slice(const Field2D& f, const MotherBoostlet& m, double c, double alpha);

// Convolution-path evaluation: circular convolution of f with the reflected
// conjugate (resp. reflected) atom at tau = 0, through forward DFTs of both
// factors.
CbtCoefficients convolution_form(const Field2D& f, const MotherBoostlet& m, double c,
                                 double alpha);

}  // namespace bsl
