#pragma once

#include <cstddef>
#include <vector>

#include "fnls/common.hpp"

namespace fnls {

// Uniform grid on the N-torus [0,2pi)^N with M points per axis.
//
// Physical nodes: x_j = 2*pi*j/M componentwise, j in {0,...,M-1}^N,
// stored row-major (last axis fastest).
// Spectral modes: k in {-M/2,...,M/2-1}^N, stored row-major in that
// symmetric order (axis index a maps to wavenumber a - M/2).
struct TorusGrid {
  int dim = 1;             // N
  int points_per_dim = 4;  // M, even, >= 4

  TorusGrid() = default;
  TorusGrid(int n, int m) : dim(n), points_per_dim(m) {
    if (n < 1) throw DomainError("TorusGrid: dim must be >= 1");
    if (m < 4 || m % 2 != 0)
      throw DomainError("TorusGrid: points_per_dim must be even and >= 4");
  }

  double spacing() const { return kTwoPi / points_per_dim; }

  std::size_t size() const {
    std::size_t s = 1;
    for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(points_per_dim);
    return s;
  }

  // Decode a flat spectral index into the wavenumber vector.
  void wavenumber(std::size_t flat, int* k) const {
    const int m = points_per_dim;
    for (int d = dim - 1; d >= 0; --d) {
      k[d] = static_cast<int>(flat % m) - m / 2;
      flat /= m;
    }
  }

  // Decode a flat physical index into the node coordinate.
  void node(std::size_t flat, double* x) const {
    const int m = points_per_dim;
    for (int d = dim - 1; d >= 0; --d) {
      x[d] = spacing() * static_cast<double>(flat % m);
      flat /= m;
    }
  }

  // |k|^2 for the mode at a flat spectral index.
  double k_norm_sq(std::size_t flat) const {
    const int m = points_per_dim;
    double s = 0.0;
    for (int d = dim - 1; d >= 0; --d) {
      const int k = static_cast<int>(flat % m) - m / 2;
      s += static_cast<double>(k) * k;
      flat /= m;
    }
    return s;
  }

  bool operator==(const TorusGrid&) const = default;
};

}  // namespace fnls
