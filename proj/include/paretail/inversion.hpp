#pragma once

// Series reversion on a stretched grid: given v/u = sum_i x_i u^{ia},
// produce (u/v)^k = sum_i x*_i v^{ia}.

#include <string>
#include <vector>

#include "paretail/errors.hpp"
#include "paretail/scalar.hpp"
#include "paretail/series.hpp"

namespace paretail {

template <class T>
FormalSeries<T> invert_series(const FormalSeries<T>& x, const T& a, int k) {
  if (x[0] == T(0)) throw SingularInputError("invert_series: x_0 must be nonzero");
  if (!is_finite_value(a)) throw ArgumentError("invert_series: a must be finite");
  if (k < 1) throw ArgumentError("invert_series: k must be a positive integer");

  const int m = x.order();
  BellTable<T> bell(x);
  std::vector<T> out(static_cast<std::size_t>(m) + 1, T(0));
  out[0] = ipow(x[0], -k);
  const T neg_inv_x0 = T(-1) / x[0];
  for (int i = 1; i <= m; ++i) {
    const T n = T(k) + a * T(i);
    T sum(0);
    T pw(1);
    for (int j = 1; j <= i; ++j) {
      pw *= neg_inv_x0;
      sum += rising(T(n + T(1)), j - 1) * bell(i, j) * pw / factorial<T>(j);
    }
    out[i] = T(k) * real_pow(x[0], T(-n)) * sum;
  }
  return FormalSeries<T>(std::move(out));
}

/// Same reversion with both sides in the i!-rescaled convention:
/// v/u = sum y_i u^{ia}/i! and (u/v)^k = sum y*_i v^{ia}/i!.
template <class T>
FormalSeries<T> invert_series_exponential(const FormalSeries<T>& y, const T& a, int k) {
  return to_exponential(invert_series(from_exponential(y), a, k));
}

/// Forward map evaluated on the series grid: returns sum_i x_i w^i.
template <class T>
T eval_series(const FormalSeries<T>& x, const T& w) {
  T acc(0);
  for (int i = x.order(); i >= 0; --i) acc = acc * w + x[i];
  return acc;
}

}  // namespace paretail
