#pragma once

#include <optional>
#include <string>

#include "fnls/field.hpp"

namespace fnls {

// Norm conventions. L2-type quantities follow grid quadrature on
// [0,2pi]^N, so the squared H^r norm is
//   ||f||_{H^r}^2 = (2pi)^N sum_k <k>^{2r} |f_hat(k)|^2,  <k>^2 = 1+|k|^2,
// and r = 0 reproduces the integral of |f|^2.
double sobolev_norm(const SpectralField& F, double r);

// Equivalent integer-regularity form: sum over multi-indices |beta| <= J
// of the L2 norms of d^beta f (each derivative via its multiplier).
double derivative_sum_norm(const SpectralField& F, int J);

double l2_norm(const SpectralField& F);

// Computable constant for sup-norm control by the H^J norm on
// band-limited fields:
//   C1 = (2pi)^{-N/2} (sum_{k in truncation} <k>^{-2J})^{1/2},
// so ||f||_inf <= C1 ||f||_{H^J} by Cauchy-Schwarz on the coefficient sum.
// Requires J > N/2 (the constant would blow up as the truncation widens
// otherwise).
double embedding_constant(int J, int N, const TorusGrid& grid);

// Certified lower bound for inf_x |u(x)| of the band-limited field:
// grid minimum over an oversampled grid minus a gradient-bound margin,
//   max(0, g_min - L*h/2),  L = sum_k |k| |u_hat(k)|,
// with h the diagonal of a fine-grid cell. Never overestimates.
double certified_infimum(const SpectralField& F, int oversample_factor);

// Reciprocal scale of the non-vanishing condition: eta * inf|u| >= 1
// holds with eta = 1 / certified_infimum when the bound is positive.
std::optional<double> eta_of(const SpectralField& F, int oversample_factor = 4);

struct NormReport {
  double t = 0.0;
  double l2 = 0.0;
  double h_spectral = 0.0;
  double h_derivative_sum = 0.0;
  double l_inf = 0.0;
  double inf_lower_bound = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

NormReport norm_report(const SpectralField& F, double t, int J, int oversample_factor);

}  // namespace fnls
