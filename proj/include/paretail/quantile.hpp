#pragma once

// Upper-tail model 1 - F(x) = x^{-alpha} sum_i c_i x^{-i beta} and the
// quantile power series {F^{-1}(u)}^theta = sum_i (1-u)^{ia - psi} C_{i psi}.

#include <cmath>
#include <string>
#include <vector>

#include "paretail/errors.hpp"
#include "paretail/inversion.hpp"
#include "paretail/scalar.hpp"
#include "paretail/series.hpp"

namespace paretail {

template <class T>
struct TailModel {
  T alpha;
  T beta;
  FormalSeries<T> c;

  TailModel(T alpha_, T beta_, FormalSeries<T> c_)
      : alpha(std::move(alpha_)), beta(std::move(beta_)), c(std::move(c_)) {
    if (!(alpha > T(0))) throw ArgumentError("TailModel: alpha must be positive");
    if (!(beta > T(0))) throw ArgumentError("TailModel: beta must be positive");
    if (!(c[0] > T(0))) throw ArgumentError("TailModel: c_0 must be positive");
  }

  T a() const { return beta / alpha; }
  int order() const { return c.order(); }

  /// Tail of lambda * X: c_i -> lambda^{alpha + i beta} c_i.
  TailModel scaled(const T& lambda) const {
    std::vector<T> out(c.coeffs());
    for (int i = 0; i <= c.order(); ++i) out[i] *= real_pow(lambda, T(alpha + T(i) * beta));
    return TailModel(alpha, beta, FormalSeries<T>(std::move(out)));
  }

  TailModel truncated(int m) const { return TailModel(alpha, beta, c.truncated(m)); }
};

template <class T>
struct QuantilePowerSeries {
  T theta;
  T psi;
  T a;
  FormalSeries<T> C;

  int order() const { return C.order(); }
  /// Exponent of (1-u) multiplying C_i.
  T exponent(int i) const { return a * T(i) - psi; }
};

template <class T>
QuantilePowerSeries<T> quantile_series(const TailModel<T>& tail, const T& theta) {
  if (!is_finite_value(theta)) throw ArgumentError("quantile_series: theta must be finite");
  const T psi = theta / tail.alpha;
  const T a = tail.a();
  auto xstar = invert_series(tail.c, a, 1);
  const T c0 = tail.c[0];
  auto hat = series_power(xstar, T(-psi), c0);
  return {theta, psi, a, hat.scaled(real_pow(c0, psi))};
}

/// Rebases known theta = 1 coefficients d_i of F^{-1}(u) = sum (1-u)^{ia - 1/alpha} d_i
/// to an arbitrary power theta.
template <class T>
QuantilePowerSeries<T> quantile_from_known(const FormalSeries<T>& d, const T& alpha, const T& a,
                                           const T& theta) {
  if (d[0] == T(0)) throw SingularInputError("quantile_from_known: d_0 must be nonzero");
  auto hat = series_power(d, theta, T(T(1) / d[0]));
  return {theta, theta / alpha, a, hat.scaled(real_pow(d[0], theta))};
}

struct PartialSum {
  double value = 0;
  double last_term = 0;
};

/// Partial sum of the quantile power series at u, with the magnitude of the
/// last retained term.
inline PartialSum eval_quantile_partial(const QuantilePowerSeries<double>& q, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("eval_quantile_partial: u must lie in (0,1)");
  const double v = 1.0 - u;
  PartialSum r;
  for (int i = 0; i <= q.order(); ++i) {
    double term = std::pow(v, q.exponent(i)) * q.C[i];
    r.value += term;
    r.last_term = std::fabs(term);
  }
  return r;
}

/// Product of two quantile power series sharing the grid a: the result
/// represents the power theta_1 + theta_2.
template <class T>
QuantilePowerSeries<T> multiply(const QuantilePowerSeries<T>& p, const QuantilePowerSeries<T>& q) {
  if (p.a != q.a) throw ArgumentError("multiply: quantile series on different grids");
  return {p.theta + q.theta, p.psi + q.psi, p.a, p.C * q.C};
}

}  // namespace paretail
