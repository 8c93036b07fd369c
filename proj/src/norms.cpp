#include "fnls/norms.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "fnls/kernels.hpp"
#include "fnls/spectral_ops.hpp"
#include "fnls/transform.hpp"

namespace fnls {

namespace {

double measure(int N) { return std::pow(kTwoPi, N); }

// Enumerate all multi-indices beta in N_0^dim with |beta| <= max_order.
void enumerate_multi_indices(int dim, int max_order,
                             std::vector<std::vector<int>>& out) {
  std::vector<int> beta(static_cast<std::size_t>(dim), 0);
  // Odometer over the bounded simplex.
  while (true) {
    int total = 0;
    for (int b : beta) total += b;
    if (total <= max_order) out.push_back(beta);
    int d = dim - 1;
    while (d >= 0) {
      if (++beta[d] <= max_order) break;
      beta[d] = 0;
      --d;
    }
    if (d < 0) break;
  }
}

}  // namespace

double sobolev_norm(const SpectralField& F, double r) {
  if (r < 0.0) throw DomainError("sobolev_norm: r must be >= 0");
  std::vector<double> w(F.grid.size());
  const double vol = measure(F.grid.dim);
  for (std::size_t a = 0; a < w.size(); ++a)
    w[a] = vol * std::pow(1.0 + F.grid.k_norm_sq(a), r);
  return std::sqrt(kernels::weighted_norm_sq(w.data(), F.coeffs.data(), w.size()));
}

double l2_norm(const SpectralField& F) { return sobolev_norm(F, 0.0); }

double derivative_sum_norm(const SpectralField& F, int J) {
  if (J < 0) throw DomainError("derivative_sum_norm: J must be >= 0");
  std::vector<std::vector<int>> betas;
  enumerate_multi_indices(F.grid.dim, J, betas);

  const double vol = measure(F.grid.dim);
  std::vector<int> k(static_cast<std::size_t>(F.grid.dim));
  double total = 0.0;
  for (const auto& beta : betas) {
    // ||d^beta f||_{L2}^2 = (2pi)^N sum_k prod_d k_d^{2 beta_d} |f_hat|^2
    std::vector<double> w(F.grid.size());
    for (std::size_t a = 0; a < w.size(); ++a) {
      F.grid.wavenumber(a, k.data());
      double m = vol;
      for (int d = 0; d < F.grid.dim; ++d)
        for (int r = 0; r < beta[d]; ++r) m *= static_cast<double>(k[d]) * k[d];
      w[a] = m;
    }
    total += std::sqrt(kernels::weighted_norm_sq(w.data(), F.coeffs.data(), w.size()));
  }
  return total;
}

double embedding_constant(int J, int N, const TorusGrid& grid) {
  if (2 * J <= N)
    throw DomainError("embedding_constant: requires J > N/2");
  double sum = 0.0;
  for (std::size_t a = 0; a < grid.size(); ++a)
    sum += std::pow(1.0 + grid.k_norm_sq(a), -static_cast<double>(J));
  return std::sqrt(sum) * std::pow(kTwoPi, -0.5 * N);
}

double certified_infimum(const SpectralField& F, int oversample_factor) {
  if (oversample_factor < 2)
    throw DomainError("certified_infimum: oversample_factor must be >= 2");

  const PhysicalField fine = oversample(F, oversample_factor);
  const double g_min =
      kernels::min_abs(fine.samples.data(), fine.samples.size());

  // Sup bound on |grad u|: each mode contributes |k| |u_hat(k)|.
  std::vector<double> kabs(F.grid.size());
  for (std::size_t a = 0; a < kabs.size(); ++a)
    kabs[a] = std::sqrt(F.grid.k_norm_sq(a));
  const double grad_bound =
      kernels::weighted_abs_sum(kabs.data(), F.coeffs.data(), kabs.size());

  // Any point is within half a cell diagonal of a fine-grid node.
  const double fine_spacing = kTwoPi / (F.grid.points_per_dim * oversample_factor);
  const double cell_diagonal = fine_spacing * std::sqrt(static_cast<double>(F.grid.dim));

  const double bound = g_min - 0.5 * grad_bound * cell_diagonal;
  return bound > 0.0 ? bound : 0.0;
}

std::optional<double> eta_of(const SpectralField& F, int oversample_factor) {
  const double inf = certified_infimum(F, oversample_factor);
  if (inf <= 0.0) return std::nullopt;
  return 1.0 / inf;
}

std::string NormReport::csv_header() {
  return "t,l2,h_spectral,h_derivative_sum,l_inf,inf_lower_bound";
}

std::string NormReport::csv_row() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", t, l2,
                h_spectral, h_derivative_sum, l_inf, inf_lower_bound);
  return buf;
}

NormReport norm_report(const SpectralField& F, double t, int J,
                       int oversample_factor) {
  NormReport r;
  r.t = t;
  r.l2 = l2_norm(F);
  r.h_spectral = sobolev_norm(F, static_cast<double>(J));
  r.h_derivative_sum = derivative_sum_norm(F, J);
  const PhysicalField fine = oversample(F, oversample_factor);
  r.l_inf = kernels::max_abs(fine.samples.data(), fine.samples.size());
  r.inf_lower_bound = certified_infimum(F, oversample_factor);
  return r;
}

}  // namespace fnls
