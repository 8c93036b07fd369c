#pragma once

#include <vector>

#include "fnls/grid.hpp"

namespace fnls {

// Truncated Fourier coefficients of a complex field on the torus.
// coeffs[a] is the amplitude of exp(i k.x) with k = a - M/2 per axis,
// row-major over axes. This is the solver's canonical state.
struct SpectralField {
  TorusGrid grid;
  std::vector<cplx> coeffs;

  SpectralField() = default;
  explicit SpectralField(const TorusGrid& g) : grid(g), coeffs(g.size(), cplx{}) {}
  SpectralField(const TorusGrid& g, std::vector<cplx> c) : grid(g), coeffs(std::move(c)) {
    if (coeffs.size() != grid.size())
      throw DomainError("SpectralField: coefficient count does not match grid");
  }

  cplx& at_wavenumber(const std::vector<int>& k) {
    return coeffs[flat_index(k)];
  }
  const cplx& at_wavenumber(const std::vector<int>& k) const {
    return coeffs[flat_index(k)];
  }

  std::size_t flat_index(const std::vector<int>& k) const {
    const int m = grid.points_per_dim;
    std::size_t flat = 0;
    for (int d = 0; d < grid.dim; ++d) {
      const int a = k[d] + m / 2;
      if (a < 0 || a >= m) throw DomainError("wavenumber outside truncation");
      flat = flat * m + static_cast<std::size_t>(a);
    }
    return flat;
  }
};

// Pointwise samples over the physical nodes (row-major).
struct PhysicalField {
  TorusGrid grid;
  std::vector<cplx> samples;

  PhysicalField() = default;
  explicit PhysicalField(const TorusGrid& g) : grid(g), samples(g.size(), cplx{}) {}
  PhysicalField(const TorusGrid& g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {
    if (samples.size() != grid.size())
      throw DomainError("PhysicalField: sample count does not match grid");
  }
};

// Small coefficient-space helpers used throughout the solver.
SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(cplx s, const SpectralField& f);
void add_scaled(SpectralField& acc, cplx s, const SpectralField& f);  // acc += s*f

}  // namespace fnls
