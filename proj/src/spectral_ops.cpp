#include "fnls/spectral_ops.hpp"

#include <cmath>

#include "fnls/kernels.hpp"

namespace fnls {

std::vector<double> symbol_table(const TorusGrid& grid, double s) {
  std::vector<double> table(grid.size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    const double k2 = grid.k_norm_sq(a);
    table[a] = k2 == 0.0 ? 0.0 : std::pow(k2, 0.5 * s);
  }
  return table;
}

SpectralField fractional_laplacian(const SpectralField& F, double s) {
  if (s <= 0.0) throw DomainError("fractional_laplacian: s must be > 0");
  const auto table = symbol_table(F.grid, s);
  SpectralField out(F.grid);
  kernels::multiply_real(table.data(), F.coeffs.data(), out.coeffs.data(),
                         out.coeffs.size());
  return out;
}

SpectralField free_propagate(const SpectralField& F, double s, double t) {
  if (s <= 0.0) throw DomainError("free_propagate: s must be > 0");
  auto theta = symbol_table(F.grid, s);
  for (auto& v : theta) v *= t;
  SpectralField out(F.grid);
  kernels::phase_rotate(theta.data(), F.coeffs.data(), out.coeffs.data(),
                        out.coeffs.size());
  return out;
}

SpectralField derivative(const SpectralField& F, const std::vector<int>& beta) {
  if (static_cast<int>(beta.size()) != F.grid.dim)
    throw DomainError("derivative: multi-index size must equal dim");
  SpectralField out(F.grid);
  std::vector<int> k(static_cast<std::size_t>(F.grid.dim));
  for (std::size_t a = 0; a < out.coeffs.size(); ++a) {
    F.grid.wavenumber(a, k.data());
    cplx mult{1.0, 0.0};
    for (int d = 0; d < F.grid.dim; ++d)
      for (int r = 0; r < beta[d]; ++r) mult *= cplx(0.0, static_cast<double>(k[d]));
    out.coeffs[a] = mult * F.coeffs[a];
  }
  return out;
}

}  // namespace fnls
