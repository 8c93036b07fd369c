#include "fnls/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fnls::kernels {

namespace {

int g_threads = -1;

int default_threads() {
  if (const char* env = std::getenv("FNLS_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 0) return t;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Chunk boundaries for deterministic reductions: thread t owns
// [bound(t), bound(t+1)).
std::size_t chunk_bound(std::size_t n, int nthreads, int t) {
  return n * static_cast<std::size_t>(t) / static_cast<std::size_t>(nthreads);
}

bool parallel_worthwhile(std::size_t n) { return thread_count() > 1 && n >= 2048; }

}  // namespace

int thread_count() {
  if (g_threads < 0) g_threads = default_threads();
  return g_threads;
}

void set_thread_count(int t) { g_threads = std::max(0, t); }

// ---- pointwise maps ---------------------------------------------------

void multiply_real_serial(const double* w, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = w[i] * x[i];
}

void multiply_real_omp(const double* w, const cplx* x, cplx* y, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    y[i] = w[i] * x[i];
#else
  multiply_real_serial(w, x, y, n);
#endif
}

void multiply_real(const double* w, const cplx* x, cplx* y, std::size_t n) {
  parallel_worthwhile(n) ? multiply_real_omp(w, x, y, n) : multiply_real_serial(w, x, y, n);
}

void phase_rotate_serial(const double* theta, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = cplx(std::cos(theta[i]), -std::sin(theta[i])) * x[i];
}

void phase_rotate_omp(const double* theta, const cplx* x, cplx* y, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    y[i] = cplx(std::cos(theta[i]), -std::sin(theta[i])) * x[i];
#else
  phase_rotate_serial(theta, x, y, n);
#endif
}

void phase_rotate(const double* theta, const cplx* x, cplx* y, std::size_t n) {
  parallel_worthwhile(n) ? phase_rotate_omp(theta, x, y, n) : phase_rotate_serial(theta, x, y, n);
}

void axpby_serial(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void axpby_omp(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    out[i] = a * x[i] + b * y[i];
#else
  axpby_serial(a, x, b, y, out, n);
#endif
}

void axpby(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n) {
  parallel_worthwhile(n) ? axpby_omp(a, x, b, y, out, n) : axpby_serial(a, x, b, y, out, n);
}

void map_pointwise_serial(const PointMap& f, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = f(x[i]);
}

void map_pointwise_omp(const PointMap& f, const cplx* x, cplx* y, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (long long i = 0; i < static_cast<long long>(n); ++i) y[i] = f(x[i]);
#else
  map_pointwise_serial(f, x, y, n);
#endif
}

void map_pointwise(const PointMap& f, const cplx* x, cplx* y, std::size_t n) {
  parallel_worthwhile(n) ? map_pointwise_omp(f, x, y, n) : map_pointwise_serial(f, x, y, n);
}

// ---- reductions --------------------------------------------------------
//
// Parallel variants accumulate per-thread partials over fixed chunks and
// combine them in thread order, matching the serial result up to the
// usual chunked-summation reordering.

namespace {

template <typename Partial>
double chunked_reduce(std::size_t n, double init, Partial partial,
                      double (*combine)(double, double)) {
  const int T = std::max(1, thread_count());
  std::vector<double> parts(static_cast<std::size_t>(T), init);
#ifdef _OPENMP
#pragma omp parallel num_threads(T)
  {
    const int t = omp_get_thread_num();
    parts[t] = partial(chunk_bound(n, T, t), chunk_bound(n, T, t + 1), init);
  }
#else
  parts[0] = partial(std::size_t{0}, n, init);
#endif
  double acc = init;
  for (double p : parts) acc = combine(acc, p);
  return acc;
}

double add(double a, double b) { return a + b; }
double take_min(double a, double b) { return std::min(a, b); }
double take_max(double a, double b) { return std::max(a, b); }

}  // namespace

double weighted_norm_sq_serial(const double* w, const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * std::norm(x[i]);
  return s;
}

double weighted_norm_sq_omp(const double* w, const cplx* x, std::size_t n) {
  return chunked_reduce(
      n, 0.0,
      [&](std::size_t lo, std::size_t hi, double acc) {
        for (std::size_t i = lo; i < hi; ++i) acc += w[i] * std::norm(x[i]);
        return acc;
      },
      add);
}

double weighted_norm_sq(const double* w, const cplx* x, std::size_t n) {
  return parallel_worthwhile(n) ? weighted_norm_sq_omp(w, x, n)
                                : weighted_norm_sq_serial(w, x, n);
}

double weighted_abs_sum_serial(const double* w, const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * std::abs(x[i]);
  return s;
}

double weighted_abs_sum_omp(const double* w, const cplx* x, std::size_t n) {
  return chunked_reduce(
      n, 0.0,
      [&](std::size_t lo, std::size_t hi, double acc) {
        for (std::size_t i = lo; i < hi; ++i) acc += w[i] * std::abs(x[i]);
        return acc;
      },
      add);
}

double weighted_abs_sum(const double* w, const cplx* x, std::size_t n) {
  return parallel_worthwhile(n) ? weighted_abs_sum_omp(w, x, n)
                                : weighted_abs_sum_serial(w, x, n);
}

double min_abs_serial(const cplx* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, std::abs(x[i]));
  return m;
}

double min_abs_omp(const cplx* x, std::size_t n) {
  return chunked_reduce(
      n, std::numeric_limits<double>::infinity(),
      [&](std::size_t lo, std::size_t hi, double acc) {
        for (std::size_t i = lo; i < hi; ++i) acc = std::min(acc, std::abs(x[i]));
        return acc;
      },
      take_min);
}

double min_abs(const cplx* x, std::size_t n) {
  return parallel_worthwhile(n) ? min_abs_omp(x, n) : min_abs_serial(x, n);
}

double max_abs_serial(const cplx* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double max_abs_omp(const cplx* x, std::size_t n) {
  return chunked_reduce(
      n, 0.0,
      [&](std::size_t lo, std::size_t hi, double acc) {
        for (std::size_t i = lo; i < hi; ++i) acc = std::max(acc, std::abs(x[i]));
        return acc;
      },
      take_max);
}

double max_abs(const cplx* x, std::size_t n) {
  return parallel_worthwhile(n) ? max_abs_omp(x, n) : max_abs_serial(x, n);
}

}  // namespace fnls::kernels
