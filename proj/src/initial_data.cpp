#include "fnls/initial_data.hpp"

#include <cmath>

namespace fnls {

SpectralField constant_field(const TorusGrid& grid, cplx value) {
  SpectralField f(grid);
  std::vector<int> zero(static_cast<std::size_t>(grid.dim), 0);
  f.at_wavenumber(zero) = value;
  return f;
}

SpectralField plane_wave(const TorusGrid& grid, cplx amplitude,
                         const std::vector<int>& mode) {
  SpectralField f(grid);
  f.at_wavenumber(mode) = amplitude;
  return f;
}

SpectralField perturbed_constant(const TorusGrid& grid, cplx c0, double rho,
                                 int mode_cutoff, Rng& rng) {
  if (rho < 0.0 || rho >= 1.0)
    throw DomainError("perturbed_constant: rho must lie in [0,1)");
  SpectralField f(grid);
  std::vector<int> k(static_cast<std::size_t>(grid.dim), 0);
  f.at_wavenumber(k) = c0;

  double abs_sum = 0.0;
  std::vector<std::size_t> touched;
  for (std::size_t a = 0; a < f.coeffs.size(); ++a) {
    grid.wavenumber(a, k.data());
    double knorm2 = 0.0;
    bool in_range = true;
    for (int d = 0; d < grid.dim; ++d) {
      knorm2 += static_cast<double>(k[d]) * k[d];
      if (std::abs(k[d]) > mode_cutoff) in_range = false;
    }
    if (!in_range || knorm2 == 0.0) continue;
    const cplx eps = rng.unit_phase() / (1.0 + knorm2);
    f.coeffs[a] = eps;
    abs_sum += std::abs(eps);
    touched.push_back(a);
  }

  if (abs_sum > 0.0) {
    const double scale = rho * std::abs(c0) / abs_sum;
    for (std::size_t a : touched) f.coeffs[a] *= scale;
  }
  return f;
}

SpectralField random_field(const TorusGrid& grid, int cutoff, double decay,
                           Rng& rng) {
  SpectralField f(grid);
  std::vector<int> k(static_cast<std::size_t>(grid.dim), 0);
  for (std::size_t a = 0; a < f.coeffs.size(); ++a) {
    grid.wavenumber(a, k.data());
    double knorm2 = 0.0;
    bool in_range = true;
    for (int d = 0; d < grid.dim; ++d) {
      knorm2 += static_cast<double>(k[d]) * k[d];
      if (std::abs(k[d]) > cutoff) in_range = false;
    }
    if (!in_range) continue;
    const double amp = std::pow(1.0 + knorm2, -0.5 * decay);
    f.coeffs[a] = amp * cplx(rng.normal(), rng.normal());
  }
  return f;
}

}  // namespace fnls
