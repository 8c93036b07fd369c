#pragma once

#include <cstddef>
#include <functional>

#include "fnls/common.hpp"

// Data-parallel array kernels. Every kernel has a serial reference
// implementation and an OpenMP implementation; the unprefixed entry
// points dispatch on the configured thread count. Reductions split the
// range into fixed per-thread chunks and combine partials in thread
// order, so results are reproducible for a given thread count.
namespace fnls::kernels {

// Thread count used by the *_omp kernels. 0 or 1 means serial.
// Initialized from FNLS_THREADS (falling back to the OpenMP default)
// on first use.
int thread_count();
void set_thread_count(int t);

// y[i] = w[i] * x[i]
void multiply_real_serial(const double* w, const cplx* x, cplx* y, std::size_t n);
void multiply_real_omp(const double* w, const cplx* x, cplx* y, std::size_t n);
void multiply_real(const double* w, const cplx* x, cplx* y, std::size_t n);

// y[i] = exp(-i*theta[i]) * x[i]
void phase_rotate_serial(const double* theta, const cplx* x, cplx* y, std::size_t n);
void phase_rotate_omp(const double* theta, const cplx* x, cplx* y, std::size_t n);
void phase_rotate(const double* theta, const cplx* x, cplx* y, std::size_t n);

// out[i] = a*x[i] + b*y[i]
void axpby_serial(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n);
void axpby_omp(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n);
void axpby(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n);

// sum_i w[i] * |x[i]|^2
double weighted_norm_sq_serial(const double* w, const cplx* x, std::size_t n);
double weighted_norm_sq_omp(const double* w, const cplx* x, std::size_t n);
double weighted_norm_sq(const double* w, const cplx* x, std::size_t n);

// sum_i w[i] * |x[i]|
double weighted_abs_sum_serial(const double* w, const cplx* x, std::size_t n);
double weighted_abs_sum_omp(const double* w, const cplx* x, std::size_t n);
double weighted_abs_sum(const double* w, const cplx* x, std::size_t n);

double min_abs_serial(const cplx* x, std::size_t n);
double min_abs_omp(const cplx* x, std::size_t n);
double min_abs(const cplx* x, std::size_t n);

double max_abs_serial(const cplx* x, std::size_t n);
double max_abs_omp(const cplx* x, std::size_t n);
double max_abs(const cplx* x, std::size_t n);

// y[i] = f(x[i]) for an arbitrary pointwise map (nonlinear terms).
using PointMap = std::function<cplx(const cplx&)>;
void map_pointwise_serial(const PointMap& f, const cplx* x, cplx* y, std::size_t n);
void map_pointwise_omp(const PointMap& f, const cplx* x, cplx* y, std::size_t n);
void map_pointwise(const PointMap& f, const cplx* x, cplx* y, std::size_t n);

}  // namespace fnls::kernels
