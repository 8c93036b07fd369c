#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fnls/field.hpp"

namespace fnls {

struct SeriesTerm {
  cplx a;        // coefficient
  double gamma;  // exponent of |u|
};

struct SeriesTruncation {
  int max_terms = 64;
  double tail_tol = 1e-14;
};

struct SeriesEval {
  cplx value{};
  double tail_bound = 0.0;
  int terms_used = 0;
};

struct Antiderivative {
  cplx value{};
  // True when a divergent lower limit forced the base point to 1 instead
  // of 0; the result then differs from the tau->0 convention by an
  // additive constant, which drift diagnostics do not see.
  bool base_point_shifted = false;
};

// Description of the potential N acting through N(|u|)u. Two families:
// a smooth-class function with derivative-decay data (value, n-th
// derivatives, decay exponent gamma and constants c_n with
// |N^(n)(x)| <= c_n x^{gamma-n}), or a power series sum a_k |u|^{gamma_k}
// with a truncation policy.
class Nonlinearity {
 public:
  enum class Family { CJ, Series };
  enum class SupShape { EndpointMax, Sampled };

  static Nonlinearity power(double gamma);
  static Nonlinearity logarithm();
  static Nonlinearity log1p_power(double gamma);
  // N(x) = -x^{-nu}: the attractive inverse-power potential -u/|u|^nu.
  static Nonlinearity inverse_power(double nu);
  static Nonlinearity exponential(double r, SeriesTruncation trunc = {});
  static Nonlinearity sin_quotient(double r1, double r2, SeriesTruncation trunc = {});
  static Nonlinearity series(std::vector<SeriesTerm> terms, SeriesTruncation trunc = {});
  // sum_k a_k |u|^{-nu_k}
  static Nonlinearity combined(const std::vector<std::pair<cplx, double>>& a_nu,
                               SeriesTruncation trunc = {});
  static Nonlinearity custom_cj(std::string label,
                                std::function<cplx(double)> eval,
                                std::function<cplx(int, double)> deriv,
                                double gamma, std::vector<double> decay_constants,
                                bool singular_at_zero);

  Family family() const { return family_; }
  const std::string& label() const { return label_; }

  // N is unbounded as |u| -> 0 (negative exponents or a logarithm):
  // evaluation then requires a certified non-vanishing field.
  bool singular_at_zero() const { return singular_; }

  // Real-valued N on (0,inf); mass/energy conservation is only the
  // formal expectation in that case.
  bool real_valued() const { return real_valued_; }

  SupShape sup_shape() const { return sup_shape_; }

  cplx value(double x) const;
  SeriesEval value_with_tail(double x) const;

  // n-th derivative, 1 <= n <= max_derivative_order(). CJ family only.
  cplx derivative(int n, double x) const;
  int max_derivative_order() const { return max_deriv_order_; }
  double decay_gamma() const { return decay_gamma_; }
  double decay_constant(int n) const;

  // Antiderivative of N(v)*v from 0 (or from 1 where the lower limit
  // diverges; see Antiderivative).
  Antiderivative antiderivative(double tau) const;

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  const SeriesTruncation& truncation() const { return trunc_; }

 private:
  Nonlinearity() = default;

  Family family_ = Family::CJ;
  std::string label_;
  bool singular_ = false;
  bool real_valued_ = true;
  SupShape sup_shape_ = SupShape::Sampled;
  int max_deriv_order_ = 0;

  // CJ data
  std::function<cplx(double)> eval_;
  std::function<cplx(int, double)> deriv_;
  double decay_gamma_ = 0.0;
  std::vector<double> decay_constants_;  // c_1..c_maxorder
  std::function<Antiderivative(double)> antideriv_;

  // Series data
  std::vector<SeriesTerm> terms_;
  SeriesTruncation trunc_;
};

// Pointwise N(|u(x)|) u(x) on an oversampled grid, transformed back and
// truncated to the original band. Requires a certified positive infimum
// for singular specs.
SpectralField apply_nonlinear_term(const Nonlinearity& spec, const SpectralField& F,
                                   int oversample_factor);

// As above but with the non-vanishing certificate already established by
// the caller (hot path in the time stepper).
SpectralField apply_nonlinear_term_unchecked(const Nonlinearity& spec,
                                             const SpectralField& F,
                                             int oversample_factor);

}  // namespace fnls
