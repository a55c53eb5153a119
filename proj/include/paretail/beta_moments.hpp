#pragma once

// Exact finite-n moments of the complements of uniform order statistics and
// the large-n expansion of n!/Gamma(n+1+theta).

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "paretail/errors.hpp"
#include "paretail/scalar.hpp"

namespace paretail {

/// Sample size n and ascending ranks r_1 <= ... <= r_k (ties allowed).
struct RankSpec {
  int n;
  std::vector<int> r;

  RankSpec(int n_, std::vector<int> r_) : n(n_), r(std::move(r_)) {
    if (n < 1) throw ArgumentError("RankSpec: n must be positive");
    if (r.empty()) throw ArgumentError("RankSpec: at least one rank required");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < 1 || r[i] > n) throw ArgumentError("RankSpec: ranks must lie in [1, n]");
      if (i > 0 && r[i] < r[i - 1]) throw ArgumentError("RankSpec: ranks must be nondecreasing");
    }
  }

  int k() const { return static_cast<int>(r.size()); }

  /// s_i = n - r_i, nonincreasing.
  std::vector<int> s() const {
    std::vector<int> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = n - r[i];
    return out;
  }

  static RankSpec from_s(int n, const std::vector<int>& s) {
    std::vector<int> r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = n - s[i];
    return RankSpec(n, std::move(r));
  }
};

/// Powers theta_1..theta_k attached to ascending ranks; bar()_i = sum_{j>=i} theta_j.
template <class T>
struct ThetaVector {
  std::vector<T> theta;

  explicit ThetaVector(std::vector<T> t) : theta(std::move(t)) {
    for (const auto& x : theta)
      if (!is_finite_value(x)) throw ArgumentError("ThetaVector: non-finite entry");
  }

  int k() const { return static_cast<int>(theta.size()); }

  std::vector<T> bar() const {
    std::vector<T> out(theta.size(), T(0));
    T acc(0);
    for (std::size_t i = theta.size(); i-- > 0;) {
      acc += theta[i];
      out[i] = acc;
    }
    return out;
  }
};

/// Product form prod_{j=beta}^{alpha+beta-1} (1 + theta/j)^{-1} for integer
/// alpha >= 0, beta >= 1.
template <class T>
T beta_ratio_product(long long alpha, long long beta, const T& theta) {
  if (alpha < 0 || beta < 1) throw ArgumentError("beta_ratio_product: need alpha >= 0, beta >= 1");
  if (alpha == 0) return T(1);
  if (!(T(beta) + theta > T(0)))
    throw InfiniteMomentError("beta ratio: beta + theta must be positive");
  T r(1);
  for (long long j = beta; j <= alpha + beta - 1; ++j) r *= T(j) / (T(j) + theta);
  return r;
}

/// Gamma form Gamma(beta+theta)Gamma(alpha+beta) / (Gamma(alpha+beta+theta)Gamma(beta)).
template <class T>
T beta_ratio_gamma(const T& alpha, const T& beta, const T& theta) {
  if (!(beta + theta > T(0))) throw InfiniteMomentError("beta ratio: beta + theta must be positive");
  if (alpha == T(0)) return T(1);
  if (is_integral_value(theta)) return rising_real(beta, theta) / rising_real(T(alpha + beta), theta);
  if constexpr (is_exact_v<T>) {
    throw NotRepresentableError("beta ratio: non-integral theta is not exact");
  } else {
    return boost::math::tgamma_delta_ratio(alpha + beta, theta) /
           boost::math::tgamma_delta_ratio(beta, theta);
  }
}

/// b(alpha, beta : theta) = B(alpha, beta + theta) / B(alpha, beta).
template <class T>
T beta_ratio(const T& alpha, const T& beta, const T& theta) {
  if (!(alpha >= T(0)) || !(beta > T(0))) throw ArgumentError("beta_ratio: need alpha >= 0, beta > 0");
  if (is_integral_value(alpha) && is_integral_value(beta))
    return beta_ratio_product<T>(to_integer(alpha), to_integer(beta), theta);
  return beta_ratio_gamma(alpha, beta, theta);
}

/// E prod (1 - U_{n,r_i})^{theta_i}.
template <class T>
T joint_beta_moment(const RankSpec& ranks, const ThetaVector<T>& theta) {
  if (theta.k() != ranks.k()) throw ArgumentError("joint_beta_moment: rank/theta length mismatch");
  auto bar = theta.bar();
  T result(1);
  int prev = 0;
  for (int i = 0; i < ranks.k(); ++i) {
    const int gap = ranks.r[i] - prev;
    const int beta = ranks.n - ranks.r[i] + 1;
    prev = ranks.r[i];
    if (gap == 0) continue;
    if (!(T(beta) + bar[i] > T(0)))
      throw InfiniteMomentError("moment does not exist: n - r_" + std::to_string(i + 1) +
                                    " + 1 + thetabar_" + std::to_string(i + 1) + " <= 0",
                                i + 1);
    result *= beta_ratio_product<T>(gap, beta, bar[i]);
  }
  return result;
}

/// n-free factor B(s : phi) for a nonincreasing s and a cumulative exponent
/// vector phi (phi_i plays the role of thetabar_i).
template <class T>
T n_free_factor_bar(const std::vector<int>& s, const std::vector<T>& phi) {
  if (s.size() != phi.size() || s.empty())
    throw ArgumentError("n_free_factor: s and theta must have the same positive length");
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i] < 0) throw ArgumentError("n_free_factor: s must be nonnegative");
    if (i > 0 && s[i] > s[i - 1]) throw ArgumentError("n_free_factor: s must be nonincreasing");
  }
  T result(1);
  std::size_t g = 0;
  while (g < k) {
    std::size_t h = g + 1;
    while (h < k && s[h] == s[g]) ++h;
    const T next = h < k ? phi[h] : T(0);
    const T x = T(s[g] + 1);
    if (!(x + phi[g] > T(0)))
      throw InfiniteMomentError("moment does not exist: s_" + std::to_string(g + 1) +
                                    " + 1 + thetabar_" + std::to_string(g + 1) + " <= 0",
                                static_cast<int>(g + 1));
    result *= rising_real(T(x + next), T(phi[g] - next));
    g = h;
  }
  return result;
}

/// B(s : thetabar) with b_n(r : thetabar) = B(s : thetabar) n!/Gamma(n+1+thetabar_1).
template <class T>
T n_free_factor(const std::vector<int>& s, const ThetaVector<T>& theta) {
  return n_free_factor_bar(s, theta.bar());
}

/// e_0(theta)..e_imax(theta) of n!/Gamma(n+1+theta) = n^{-theta} sum e_i n^{-i}.
template <class T>
std::vector<T> gamma_ratio_coeffs(const T& th, int imax) {
  if (imax < 0) throw ArgumentError("gamma_ratio_coeffs: negative order");
  if (imax > 7) throw UnsupportedOrderError("gamma_ratio_coeffs: orders above 7 are not tabulated");
  auto P = [&](int i) { return rising(th, i); };
  const T t2 = th * th, t3 = t2 * th, t4 = t3 * th, t5 = t4 * th;
  std::vector<T> e{
      T(1),
      -P(2) / T(2),
      P(3) * (T(3) * th + T(1)) / T(24),
      -P(4) * P(2) / T(48),
      P(5) * (T(15) * t3 + T(30) * t2 + T(5) * th - T(2)) / T(120 * 48),
      -P(6) * P(2) * (T(3) * t2 + T(7) * th - T(2)) / T(720 * 16),
      P(7) * (T(63) * t5 + T(315) * t4 + T(315) * t3 - T(91) * t2 - T(42) * th + T(16)) /
          T(5040 * 576),
      -P(8) * P(2) * (T(9) * t4 + T(54) * t3 + T(51) * t2 - T(58) * th + T(16)) / T(40320 * 144),
  };
  e.resize(static_cast<std::size_t>(imax) + 1);
  return e;
}

template <class R>
struct GammaRatioValue {
  R exact;
  R series;
};

/// Exact n!/Gamma(n+1+theta) next to the truncated series. R may be any
/// floating type Boost.Math accepts (double, cpp_bin_float_50, ...).
template <class R>
GammaRatioValue<R> gamma_ratio_eval(int n, const R& theta, int imax) {
  using std::pow;
  if (n < 1) throw ArgumentError("gamma_ratio_eval: n must be positive");
  if (!(R(n + 1) + theta > R(0)))
    throw InfiniteMomentError("gamma_ratio_eval: Gamma(n+1+theta) has a pole or sign change");
  auto e = gamma_ratio_coeffs(theta, imax);
  const R nn(n);
  R acc(0);
  for (int i = imax; i >= 0; --i) acc = acc / nn + e[i];
  GammaRatioValue<R> out;
  out.exact = theta == R(0) ? R(1) : R(boost::math::tgamma_delta_ratio(R(nn + R(1)), theta));
  out.series = R(pow(nn, R(-theta)) * acc);
  return out;
}

}  // namespace paretail
