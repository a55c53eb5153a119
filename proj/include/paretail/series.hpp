#pragma once

// Truncated formal power series S = sum_j x_j t^j and the partial Bell
// polynomial transforms built on them.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "paretail/errors.hpp"
#include "paretail/scalar.hpp"

namespace paretail {

template <class T>
class FormalSeries {
 public:
  FormalSeries() : coeffs_{T(0)} {}
  explicit FormalSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { validate(); }
  FormalSeries(std::initializer_list<T> coeffs) : coeffs_(coeffs) { validate(); }

  /// Series of the given order with all coefficients zero.
  static FormalSeries zeros(int order) {
    if (order < 0) throw ArgumentError("FormalSeries: negative order");
    return FormalSeries(std::vector<T>(static_cast<std::size_t>(order) + 1, T(0)));
  }

  /// 1 + 0 t + ... to the given order.
  static FormalSeries identity(int order) {
    auto s = zeros(order);
    s.coeffs_[0] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  const T& operator[](int j) const {
    if (j < 0 || j > order())
      throw OutOfRangeError("FormalSeries: index " + std::to_string(j) + " beyond order " +
                            std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(j)];
  }

  void set(int j, T value) {
    if (j < 0 || j > order()) throw OutOfRangeError("FormalSeries::set: index out of range");
    if (!is_finite_value(value)) throw ArgumentError("FormalSeries: non-finite coefficient");
    coeffs_[static_cast<std::size_t>(j)] = std::move(value);
  }

  /// Copy truncated to a lower order.
  FormalSeries truncated(int order) const {
    if (order < 0 || order > this->order())
      throw OutOfRangeError("FormalSeries::truncated: cannot extend a series");
    return FormalSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  FormalSeries operator+(const FormalSeries& o) const {
    int m = std::min(order(), o.order());
    std::vector<T> r(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) r[j] = coeffs_[j] + o.coeffs_[j];
    return FormalSeries(std::move(r));
  }

  FormalSeries operator-(const FormalSeries& o) const {
    int m = std::min(order(), o.order());
    std::vector<T> r(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) r[j] = coeffs_[j] - o.coeffs_[j];
    return FormalSeries(std::move(r));
  }

  /// Cauchy product truncated at the smaller order.
  FormalSeries operator*(const FormalSeries& o) const {
    int m = std::min(order(), o.order());
    std::vector<T> r(static_cast<std::size_t>(m) + 1, T(0));
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return FormalSeries(std::move(r));
  }

  FormalSeries scaled(const T& lambda) const {
    std::vector<T> r(coeffs_);
    for (auto& c : r) c *= lambda;
    return FormalSeries(std::move(r));
  }

  bool operator==(const FormalSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  void validate() const {
    if (coeffs_.empty()) throw ArgumentError("FormalSeries: at least one coefficient required");
    for (const auto& c : coeffs_)
      if (!is_finite_value(c)) throw ArgumentError("FormalSeries: non-finite coefficient");
  }

  std::vector<T> coeffs_;
};

/// outer(inner(t)) truncated at min order; inner must have no constant term.
template <class T>
FormalSeries<T> compose(const FormalSeries<T>& outer, const FormalSeries<T>& inner) {
  if (inner[0] != T(0)) throw ArgumentError("compose: inner series must vanish at t = 0");
  int m = std::min(outer.order(), inner.order());
  std::vector<T> acc(static_cast<std::size_t>(m) + 1, T(0));
  auto power = FormalSeries<T>::identity(m);
  auto in = inner.truncated(m);
  for (int i = 0; i <= m; ++i) {
    for (int r = 0; r <= m; ++r) acc[r] += outer[i] * power[r];
    if (i < m) power = power * in;
  }
  return FormalSeries<T>(std::move(acc));
}

/// Triangular table of partial ordinary Bell polynomials B^_{ri}(x),
/// 0 <= i <= r <= order, of the series S = sum_{j>=1} x_j t^j.
template <class T>
class BellTable {
 public:
  explicit BellTable(const FormalSeries<T>& x) : order_(x.order()) {
    rows_.resize(static_cast<std::size_t>(order_) + 1);
    for (int r = 0; r <= order_; ++r) rows_[r].assign(static_cast<std::size_t>(r) + 1, T(0));
    rows_[0][0] = T(1);
    for (int i = 1; i <= order_; ++i)
      for (int r = i; r <= order_; ++r) {
        T acc(0);
        for (int j = 1; j <= r - i + 1; ++j) acc += x[j] * rows_[r - j][i - 1];
        rows_[r][i] = acc;
      }
  }

  int order() const { return order_; }

  const T& operator()(int r, int i) const {
    if (r < 0 || r > order_ || i < 0 || i > r)
      throw OutOfRangeError("BellTable: need 0 <= i <= r <= " + std::to_string(order_) +
                            ", got r=" + std::to_string(r) + " i=" + std::to_string(i));
    return rows_[r][i];
  }

 private:
  int order_;
  std::vector<std::vector<T>> rows_;
};

template <class T>
T bell_partial_ordinary(const FormalSeries<T>& x, int r, int i) {
  if (r > x.order() || i > r || i < 0 || r < 0)
    throw OutOfRangeError("bell_partial_ordinary: need 0 <= i <= r <= order");
  return BellTable<T>(x)(r, i);
}

/// binom(alpha, i) for real alpha.
template <class T>
T binom_real(const T& alpha, int i) {
  return falling(alpha, i) / factorial<T>(i);
}

/// Coefficients of (1 + lambda S)^alpha; x_0 is ignored.
template <class T>
FormalSeries<T> series_power(const FormalSeries<T>& x, const T& alpha, const T& lambda) {
  BellTable<T> bell(x);
  std::vector<T> out(static_cast<std::size_t>(x.order()) + 1, T(0));
  std::vector<T> weight(static_cast<std::size_t>(x.order()) + 1);
  T lam_pow(1);
  for (int i = 0; i <= x.order(); ++i) {
    weight[i] = binom_real(alpha, i) * lam_pow;
    lam_pow *= lambda;
  }
  for (int r = 0; r <= x.order(); ++r)
    for (int i = 0; i <= r; ++i) out[r] += bell(r, i) * weight[i];
  return FormalSeries<T>(std::move(out));
}

/// Coefficients of log(1 + lambda S); entry 0 is 0.
template <class T>
FormalSeries<T> series_log(const FormalSeries<T>& x, const T& lambda) {
  BellTable<T> bell(x);
  std::vector<T> out(static_cast<std::size_t>(x.order()) + 1, T(0));
  for (int r = 1; r <= x.order(); ++r) {
    T neg_lam_pow(1);
    for (int i = 1; i <= r; ++i) {
      neg_lam_pow *= -lambda;
      out[r] -= bell(r, i) * neg_lam_pow / T(i);
    }
  }
  return FormalSeries<T>(std::move(out));
}

/// Coefficients of exp(lambda S); entry 0 is 1.
template <class T>
FormalSeries<T> series_exp(const FormalSeries<T>& x, const T& lambda) {
  BellTable<T> bell(x);
  std::vector<T> out(static_cast<std::size_t>(x.order()) + 1, T(0));
  out[0] = T(1);
  for (int r = 1; r <= x.order(); ++r) {
    T lam_pow(1);
    for (int i = 1; i <= r; ++i) {
      lam_pow *= lambda;
      out[r] += bell(r, i) * lam_pow / factorial<T>(i);
    }
  }
  return FormalSeries<T>(std::move(out));
}

/// exp(lambda S) for a series with x_j = 0 at every even j, through the
/// half-size Bell table of X_j = x_{2j-1}.
template <class T>
FormalSeries<T> series_exp_odd(const FormalSeries<T>& x, const T& lambda) {
  int m = x.order();
  for (int j = 2; j <= m; j += 2)
    if (x[j] != T(0)) throw ArgumentError("series_exp_odd: even-index coefficient is nonzero");
  std::vector<T> big(static_cast<std::size_t>(m) + 1, T(0));
  for (int j = 1; 2 * j - 1 <= m; ++j) big[j] = x[2 * j - 1];
  BellTable<T> bell{FormalSeries<T>(big)};
  std::vector<T> out(static_cast<std::size_t>(m) + 1, T(0));
  out[0] = T(1);
  for (int k = 1; k <= m; ++k)
    for (int r = k / 2 + 1; r <= k; ++r) {
      int i = 2 * r - k;
      out[k] += bell(r, i) * ipow(lambda, i) / factorial<T>(i);
    }
  return FormalSeries<T>(std::move(out));
}

/// w^p for a series with nonzero constant term, through (1 + S/w_0)^p.
template <class T>
FormalSeries<T> pow(const FormalSeries<T>& w, const T& p) {
  if (w[0] == T(0)) throw SingularInputError("pow: zero constant term");
  return series_power(w, p, T(T(1) / w[0])).scaled(real_pow(w[0], p));
}

// Exponential (j!-rescaled) views. y_j = j! x_j, and every exponential-variant
// quantity is the ordinary one times a factorial ratio.

template <class T>
FormalSeries<T> to_exponential(const FormalSeries<T>& x) {
  std::vector<T> y(x.coeffs());
  for (int j = 0; j <= x.order(); ++j) y[j] *= factorial<T>(j);
  return FormalSeries<T>(std::move(y));
}

template <class T>
FormalSeries<T> from_exponential(const FormalSeries<T>& y) {
  std::vector<T> x(y.coeffs());
  for (int j = 0; j <= y.order(); ++j) x[j] /= factorial<T>(j);
  return FormalSeries<T>(std::move(x));
}

/// B_{ri}(y) = r!/i! * B^_{ri}(x).
template <class T>
T bell_partial_exponential(const FormalSeries<T>& y, int r, int i) {
  return bell_partial_ordinary(from_exponential(y), r, i) * factorial<T>(r) / factorial<T>(i);
}

/// C_r(alpha, lambda, y) = r! C^_r.
template <class T>
FormalSeries<T> series_power_exponential(const FormalSeries<T>& y, const T& alpha,
                                         const T& lambda) {
  return to_exponential(series_power(from_exponential(y), alpha, lambda));
}

/// D_r(lambda, y) = r! D^_r.
template <class T>
FormalSeries<T> series_log_exponential(const FormalSeries<T>& y, const T& lambda) {
  return to_exponential(series_log(from_exponential(y), lambda));
}

/// B_r(lambda, y) = r! B^_r.
template <class T>
FormalSeries<T> series_exp_exponential(const FormalSeries<T>& y, const T& lambda) {
  return to_exponential(series_exp(from_exponential(y), lambda));
}

}  // namespace paretail
