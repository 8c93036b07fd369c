// Spectral transforms on the torus, backed by FFTW complex-to-complex
// plans. Conventions:
//   - storage is row-major over axes in symmetric wavenumber order
//     (axis index a <-> wavenumber a - M/2); FFTW's natural order keeps
//     mode k at index k mod M, so both directions go through an index
//     permutation.
//   - FFTW_FORWARD matches the analysis sign exp(-i k.x); the forward
//     transform carries the 1/M^N normalization.
// Plans are created once per (shape, direction) under a mutex and
// executed with the new-array interface, which is safe to call
// concurrently on distinct buffers.

#include "fnls/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace fnls {

namespace {

struct PlanKey {
  std::vector<int> shape;
  int sign;
  bool operator<(const PlanKey& o) const {
    return shape != o.shape ? shape < o.shape : sign < o.sign;
  }
};

fftw_plan plan_for(const TorusGrid& grid, int sign) {
  static std::mutex mu;
  static std::map<PlanKey, fftw_plan> cache;

  std::vector<int> shape(static_cast<std::size_t>(grid.dim), grid.points_per_dim);
  const PlanKey key{shape, sign};

  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Scratch buffer only used during planning; execution uses the
  // new-array interface with caller buffers. FFTW_UNALIGNED keeps the
  // plan valid for arbitrary vector storage.
  std::vector<cplx> scratch(grid.size());
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan p = fftw_plan_dft(grid.dim, shape.data(), ptr, ptr, sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw IoError("fftw plan creation failed");
  cache.emplace(key, p);
  return p;
}

void execute(const TorusGrid& grid, int sign, cplx* data) {
  fftw_plan p = plan_for(grid, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, ptr, ptr);
}

// Flat-index permutation between symmetric storage order and FFTW's
// natural order: along each axis, symmetric index a holds wavenumber
// a - M/2, which FFTW stores at (a + M/2) mod M.
std::size_t natural_from_symmetric(const TorusGrid& grid, std::size_t flat) {
  const int m = grid.points_per_dim;
  std::size_t nat = 0;
  std::size_t stride = 1;
  for (int d = 0; d < grid.dim; ++d) {
    const int a = static_cast<int>(flat % m);
    nat += stride * static_cast<std::size_t>((a + m / 2) % m);
    flat /= m;
    stride *= static_cast<std::size_t>(m);
  }
  return nat;
}

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  const TorusGrid& grid = f.grid;
  std::vector<cplx> work(f.samples);
  execute(grid, FFTW_FORWARD, work.data());

  SpectralField out(grid);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (std::size_t a = 0; a < out.coeffs.size(); ++a)
    out.coeffs[a] = scale * work[natural_from_symmetric(grid, a)];
  return out;
}

PhysicalField inverse_transform(const SpectralField& F) {
  const TorusGrid& grid = F.grid;
  std::vector<cplx> work(grid.size());
  for (std::size_t a = 0; a < work.size(); ++a)
    work[natural_from_symmetric(grid, a)] = F.coeffs[a];
  execute(grid, FFTW_BACKWARD, work.data());
  return PhysicalField(grid, std::move(work));
}

PhysicalField oversample(const SpectralField& F, int factor) {
  if (factor < 1) throw DomainError("oversample: factor must be >= 1");
  if (factor == 1) return inverse_transform(F);

  const TorusGrid fine(F.grid.dim, F.grid.points_per_dim * factor);
  SpectralField padded(fine);
  std::vector<int> k(static_cast<std::size_t>(F.grid.dim));
  for (std::size_t a = 0; a < F.coeffs.size(); ++a) {
    F.grid.wavenumber(a, k.data());
    // Same wavenumber in the wider truncation.
    std::size_t flat = 0;
    for (int d = 0; d < F.grid.dim; ++d)
      flat = flat * fine.points_per_dim +
             static_cast<std::size_t>(k[d] + fine.points_per_dim / 2);
    padded.coeffs[flat] = F.coeffs[a];
  }
  return inverse_transform(padded);
}

SpectralField truncate_to_grid(const SpectralField& fine, const TorusGrid& coarse) {
  if (coarse.dim != fine.grid.dim)
    throw DomainError("truncate_to_grid: dimension mismatch");
  if (coarse.points_per_dim > fine.grid.points_per_dim)
    throw DomainError("truncate_to_grid: target grid is finer than source");

  SpectralField out(coarse);
  std::vector<int> k(static_cast<std::size_t>(coarse.dim));
  for (std::size_t a = 0; a < out.coeffs.size(); ++a) {
    coarse.wavenumber(a, k.data());
    std::size_t flat = 0;
    for (int d = 0; d < coarse.dim; ++d)
      flat = flat * fine.grid.points_per_dim +
             static_cast<std::size_t>(k[d] + fine.grid.points_per_dim / 2);
    out.coeffs[a] = fine.coeffs[flat];
  }
  return out;
}

cplx evaluate_at(const SpectralField& F, const double* x) {
  std::vector<int> k(static_cast<std::size_t>(F.grid.dim));
  cplx acc{};
  for (std::size_t a = 0; a < F.coeffs.size(); ++a) {
    F.grid.wavenumber(a, k.data());
    double phase = 0.0;
    for (int d = 0; d < F.grid.dim; ++d) phase += k[d] * x[d];
    acc += F.coeffs[a] * cplx(std::cos(phase), std::sin(phase));
  }
  return acc;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  SpectralField out(a);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  SpectralField out(a);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

SpectralField operator*(cplx s, const SpectralField& f) {
  SpectralField out(f);
  for (auto& c : out.coeffs) c *= s;
  return out;
}

void add_scaled(SpectralField& acc, cplx s, const SpectralField& f) {
  for (std::size_t i = 0; i < acc.coeffs.size(); ++i) acc.coeffs[i] += s * f.coeffs[i];
}

}  // namespace fnls
