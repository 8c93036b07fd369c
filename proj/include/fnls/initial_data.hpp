#pragma once

#include <vector>

#include "fnls/field.hpp"
#include "fnls/rng.hpp"

namespace fnls {

SpectralField constant_field(const TorusGrid& grid, cplx value);

// A exp(i k.x)
SpectralField plane_wave(const TorusGrid& grid, cplx amplitude,
                         const std::vector<int>& mode);

// c0 + sum_{0<|k|<=mode_cutoff} eps_k exp(i k.x) with random phases and a
// 1/<k>^2 amplitude profile, rescaled so that sum |eps_k| = rho*|c0|.
// Guarantees inf |u| >= |c0|(1-rho) pointwise; the certified bound
// approaches that floor under oversampling.
SpectralField perturbed_constant(const TorusGrid& grid, cplx c0, double rho,
                                 int mode_cutoff, Rng& rng);

// Band-limited random field for transforms/norm property tests: modes up
// to |k_d| <= cutoff get independent complex Gaussian coefficients with a
// decay profile <k>^{-decay}.
SpectralField random_field(const TorusGrid& grid, int cutoff, double decay,
                           Rng& rng);

}  // namespace fnls
