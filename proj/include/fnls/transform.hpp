#pragma once

#include "fnls/field.hpp"

namespace fnls {

// Discrete Fourier analysis of grid samples:
//   coeffs[k] = (1/M^N) * sum_j f(x_j) exp(-i k.x_j)
// exact for fields band-limited to {-M/2,...,M/2-1}^N.
SpectralField forward_transform(const PhysicalField& f);

// Trigonometric synthesis: samples[j] = sum_k coeffs[k] exp(i k.x_j).
PhysicalField inverse_transform(const SpectralField& F);

// Samples of the same trigonometric polynomial on a grid with
// factor*M points per axis (coefficients zero-padded).
PhysicalField oversample(const SpectralField& F, int factor);

// Central-block restriction onto a coarser grid (spectral projection).
SpectralField truncate_to_grid(const SpectralField& fine, const TorusGrid& coarse);

// Evaluate the trigonometric polynomial at an arbitrary point by direct
// summation. O(M^N) per point; used for certification cross-checks.
cplx evaluate_at(const SpectralField& F, const double* x);

}  // namespace fnls
