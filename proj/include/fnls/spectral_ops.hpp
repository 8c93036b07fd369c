#pragma once

#include <vector>

#include "fnls/field.hpp"

namespace fnls {

// Table of |k|^s over the grid's modes (storage order). |0|^s := 0.
std::vector<double> symbol_table(const TorusGrid& grid, double s);

// Fourier multiplier |k|^s: the fractional Laplacian of order s.
SpectralField fractional_laplacian(const SpectralField& F, double s);

// Exact free propagator: coeffs[k] *= exp(-i t |k|^s). Unitary per mode,
// group in t (both signs).
SpectralField free_propagate(const SpectralField& F, double s, double t);

// Partial derivative d^beta via the multiplier (ik)^beta.
SpectralField derivative(const SpectralField& F, const std::vector<int>& beta);

}  // namespace fnls
