#pragma once

// Large-n expansions of joint moments, covariances and third cumulants of the
// top order statistics X_{n,n-s} under a Pareto-type tail.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paretail/beta_moments.hpp"
#include "paretail/errors.hpp"
#include "paretail/quantile.hpp"
#include "paretail/scalar.hpp"
#include "paretail/series.hpp"

namespace paretail {

template <class T>
struct MomentQuery {
  TailModel<T> tail;
  std::vector<int> s;  // nonincreasing depths below the maximum
  std::vector<T> theta;
  int imax = 7;
  int jmax = 0;

  MomentQuery(TailModel<T> tail_, std::vector<int> s_, std::vector<T> theta_, int imax_, int jmax_)
      : tail(std::move(tail_)), s(std::move(s_)), theta(std::move(theta_)), imax(imax_), jmax(jmax_) {
    validate();
  }

  int k() const { return static_cast<int>(s.size()); }

  std::vector<T> psi() const {
    std::vector<T> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) out[i] = theta[i] / tail.alpha;
    return out;
  }

  std::vector<T> psibar() const { return ThetaVector<T>(psi()).bar(); }

 private:
  void validate() const {
    if (s.empty()) throw ArgumentError("MomentQuery: s must be nonempty");
    if (s.size() != theta.size()) throw ArgumentError("MomentQuery: s and theta lengths differ");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0) throw ArgumentError("MomentQuery: s must be nonnegative");
      if (i > 0 && s[i] > s[i - 1]) throw ArgumentError("MomentQuery: s must be nonincreasing");
    }
    if (imax < 0 || jmax < 0) throw ArgumentError("MomentQuery: negative truncation order");
    if (imax > 7) throw UnsupportedOrderError("MomentQuery: imax above 7 is not tabulated");
    if (jmax > tail.order())
      throw ArgumentError("MomentQuery: jmax " + std::to_string(jmax) + " exceeds tail order " +
                          std::to_string(tail.order()));
    auto bar = ThetaVector<T>(theta).bar();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0 && s[i] == s[i - 1]) continue;
      if (!(bar[i] < T(s[i] + 1) * tail.alpha))
        throw InfiniteMomentError("moment does not exist: thetabar_" + std::to_string(i + 1) +
                                      " >= (s_" + std::to_string(i + 1) + " + 1) alpha",
                                  static_cast<int>(i + 1));
    }
  }
};

/// n^{lead} sum_{i,j} grid(i,j) n^{-i-ja}.
template <class T>
struct ExpansionSeries {
  T lead{0};
  T a{1};
  int imax = 0;
  int jmax = 0;
  std::vector<std::vector<T>> grid;  // grid[i][j]

  static ExpansionSeries zero(T lead, T a, int imax, int jmax) {
    ExpansionSeries e;
    e.lead = lead;
    e.a = a;
    e.imax = imax;
    e.jmax = jmax;
    e.grid.assign(static_cast<std::size_t>(imax) + 1,
                  std::vector<T>(static_cast<std::size_t>(jmax) + 1, T(0)));
    return e;
  }

  static ExpansionSeries constant(T value, T a, int imax, int jmax) {
    auto e = zero(T(0), a, imax, jmax);
    e.grid[0][0] = value;
    return e;
  }

  const T& at(int i, int j) const {
    if (i < 0 || i > imax || j < 0 || j > jmax) throw OutOfRangeError("ExpansionSeries: (i,j) out of range");
    return grid[i][j];
  }

  /// Exponent i + ja of n^{-1} for a grid cell.
  T order(int i, int j) const { return T(i) + T(j) * a; }

  /// First power of 1/n the grid cannot represent: min(imax + 1, (jmax + 1) a).
  T remainder_order() const {
    T x = T(imax + 1), y = T(jmax + 1) * a;
    return x < y ? x : y;
  }

  ExpansionSeries scaled(const T& f) const {
    auto e = *this;
    for (auto& row : e.grid)
      for (auto& c : row) c *= f;
    return e;
  }
};

template <class T>
void check_compatible(const ExpansionSeries<T>& x, const ExpansionSeries<T>& y) {
  if (x.a != y.a) throw ArgumentError("expansion arithmetic: different grids a");
}

template <class T>
ExpansionSeries<T> operator*(const ExpansionSeries<T>& x, const ExpansionSeries<T>& y) {
  check_compatible(x, y);
  const int im = std::min(x.imax, y.imax), jm = std::min(x.jmax, y.jmax);
  auto out = ExpansionSeries<T>::zero(T(x.lead + y.lead), x.a, im, jm);
  for (int i1 = 0; i1 <= im; ++i1)
    for (int j1 = 0; j1 <= jm; ++j1) {
      if (x.grid[i1][j1] == T(0)) continue;
      for (int i2 = 0; i1 + i2 <= im; ++i2)
        for (int j2 = 0; j1 + j2 <= jm; ++j2) out.grid[i1 + i2][j1 + j2] += x.grid[i1][j1] * y.grid[i2][j2];
    }
  return out;
}

template <class T>
ExpansionSeries<T> combine(const ExpansionSeries<T>& x, const ExpansionSeries<T>& y, const T& wy) {
  check_compatible(x, y);
  if (x.lead != y.lead) throw ArgumentError("expansion arithmetic: different leading powers");
  const int im = std::min(x.imax, y.imax), jm = std::min(x.jmax, y.jmax);
  auto out = ExpansionSeries<T>::zero(x.lead, x.a, im, jm);
  for (int i = 0; i <= im; ++i)
    for (int j = 0; j <= jm; ++j) out.grid[i][j] = x.grid[i][j] + wy * y.grid[i][j];
  return out;
}

template <class T>
ExpansionSeries<T> operator+(const ExpansionSeries<T>& x, const ExpansionSeries<T>& y) {
  return combine(x, y, T(1));
}

template <class T>
ExpansionSeries<T> operator-(const ExpansionSeries<T>& x, const ExpansionSeries<T>& y) {
  return combine(x, y, T(-1));
}

namespace detail {

template <class F>
void for_each_composition(int j, int k, std::vector<int>& parts, int pos, F&& f) {
  if (pos == k - 1) {
    parts[pos] = j;
    f(parts);
    return;
  }
  for (int v = 0; v <= j; ++v) {
    parts[pos] = v;
    for_each_composition(j - v, k, parts, pos + 1, f);
  }
}

}  // namespace detail

/// Quantile series for each psi_m of the query, to order jmax.
template <class T>
std::vector<QuantilePowerSeries<T>> component_quantiles(const MomentQuery<T>& q) {
  auto tail = q.tail.truncated(q.jmax);
  std::vector<QuantilePowerSeries<T>> out;
  out.reserve(q.theta.size());
  for (const auto& th : q.theta) out.push_back(quantile_series(tail, th));
  return out;
}

/// C_j(s : psi) = sum over compositions i_1+...+i_k = j of
/// prod_m C_{i_m, psi_m} * B(s : ibar a - psibar), ibar_m = sum_{l>=m} i_l.
template <class T>
std::vector<T> cj_coeffs(const MomentQuery<T>& q) {
  const int k = q.k();
  const T a = q.tail.a();
  const auto psibar = q.psibar();
  const auto qs = component_quantiles(q);
  std::vector<T> out(static_cast<std::size_t>(q.jmax) + 1, T(0));
  std::vector<int> parts(static_cast<std::size_t>(k));
  std::vector<T> phi(static_cast<std::size_t>(k));
  for (int j = 0; j <= q.jmax; ++j) {
    T acc(0);
    detail::for_each_composition(j, k, parts, 0, [&](const std::vector<int>& p) {
      T prod(1);
      for (int m = 0; m < k; ++m) {
        prod *= qs[m].C[p[m]];
        if (prod == T(0)) return;
      }
      int ibar = 0;
      for (int m = k - 1; m >= 0; --m) {
        ibar += p[m];
        phi[m] = T(ibar) * a - psibar[m];
      }
      acc += prod * n_free_factor_bar(q.s, phi);
    });
    out[j] = acc;
  }
  return out;
}

template <class T>
T cj_coeff(const MomentQuery<T>& q, int j) {
  if (j < 0 || j > q.jmax) throw OutOfRangeError("cj_coeff: j outside [0, jmax]");
  return cj_coeffs(q)[j];
}

/// Raw moment E prod X_{n,n-s_i}^{theta_i}: grid(i,j) = e_i(ja - psibar_1) C_j.
template <class T>
ExpansionSeries<T> moment_expansion(const MomentQuery<T>& q) {
  const T a = q.tail.a();
  const T pb1 = q.psibar()[0];
  auto C = cj_coeffs(q);
  auto out = ExpansionSeries<T>::zero(pb1, a, q.imax, q.jmax);
  for (int j = 0; j <= q.jmax; ++j) {
    auto e = gamma_ratio_coeffs(T(T(j) * a - pb1), q.imax);
    for (int i = 0; i <= q.imax; ++i) out.grid[i][j] = e[i] * C[j];
  }
  return out;
}

/// Moment of Y = X/(n c_0)^{1/alpha}: divides by c_0^{psibar_1} and drops the
/// n^{psibar_1} prefactor.
template <class T>
ExpansionSeries<T> normalized(const ExpansionSeries<T>& raw, const T& c0) {
  auto out = raw.scaled(T(T(1) / real_pow(c0, raw.lead)));
  out.lead = T(0);
  return out;
}

template <class T>
ExpansionSeries<T> normalized_moment_expansion(const MomentQuery<T>& q) {
  return normalized(moment_expansion(q), q.tail.c[0]);
}

/// Single-index regrouping when a = M/N: d_m = sum{e_i(ja - psibar_1) C_j : iN + jM = m}.
template <class T>
std::vector<T> dm_coeffs(const MomentQuery<T>& q, int M, int N, int mmax) {
  if (M < 1 || N < 1 || std::gcd(M, N) != 1)
    throw ArgumentError("dm_coeffs: M/N must be a positive fraction in lowest terms");
  const T a = q.tail.a();
  const T ratio = T(M) / T(N);
  if constexpr (is_exact_v<T>) {
    if (a != ratio) throw ArgumentError("dm_coeffs: a is not M/N");
  } else {
    if (std::fabs(a - ratio) > 1e-12) throw ArgumentError("dm_coeffs: a is not M/N within 1e-12");
  }
  if (mmax < 0 || mmax > N * q.imax)
    throw ArgumentError("dm_coeffs: mmax must lie in [0, N*imax]");
  if (mmax >= M * (q.jmax + 1))
    throw ArgumentError("dm_coeffs: mmax needs tail coefficients beyond jmax");
  auto C = cj_coeffs(q);
  const T pb1 = q.psibar()[0];
  std::vector<T> d(static_cast<std::size_t>(mmax) + 1, T(0));
  for (int j = 0; j <= q.jmax && j * M <= mmax; ++j) {
    auto e = gamma_ratio_coeffs(T(T(j) * a - pb1), q.imax);
    for (int i = 0; i <= q.imax; ++i) {
      int m = i * N + j * M;
      if (m <= mmax) d[m] += e[i] * C[j];
    }
  }
  return d;
}

template <class T>
ExpansionSeries<T> mean_expansion(const TailModel<T>& tail, int s, int imax, int jmax) {
  return normalized_moment_expansion(MomentQuery<T>(tail, {s}, {T(1)}, imax, jmax));
}

template <class T>
ExpansionSeries<T> pair_moment_expansion(const TailModel<T>& tail, int s1, int s2, int imax,
                                         int jmax) {
  if (s1 < s2) throw ArgumentError("pair_moment_expansion: need s1 >= s2");
  return normalized_moment_expansion(MomentQuery<T>(tail, {s1, s2}, {T(1), T(1)}, imax, jmax));
}

/// Normalized E prod_i Y_{n,s_i} with unit powers.
template <class T>
ExpansionSeries<T> product_moment_expansion(const TailModel<T>& tail, const std::vector<int>& s,
                                            int imax, int jmax) {
  return normalized_moment_expansion(
      MomentQuery<T>(tail, s, std::vector<T>(s.size(), T(1)), imax, jmax));
}

/// Tail with the same alpha, beta and E_c = c_0^{-a-1} c_1 / alpha = 1.
template <class T>
TailModel<T> unit_ec_tail(const TailModel<T>& tail) {
  return TailModel<T>(tail.alpha, tail.beta, FormalSeries<T>({T(1), tail.alpha}));
}

template <class T>
T ec_of(const TailModel<T>& tail) {
  if (tail.order() < 1) return T(0);
  const T c0 = tail.c[0];
  return tail.c[1] * real_pow(c0, T(-tail.a() - T(1))) / tail.alpha;
}

template <class T>
struct CovarianceReport {
  T F0{0}, F1{0}, F2{0};
  T Ec{0};
  T B20{0}, Da{0};
  T a0{0};
  ExpansionSeries<T> series;  // covariance of the normalized pair, full grid
};

template <class T>
ExpansionSeries<T> covariance_series(const TailModel<T>& tail, int s1, int s2, int imax, int jmax) {
  auto pair = pair_moment_expansion(tail, s1, s2, imax, jmax);
  auto m1 = mean_expansion(tail, s1, imax, jmax);
  auto m2 = mean_expansion(tail, s2, imax, jmax);
  return pair - m1 * m2;
}

template <class T>
CovarianceReport<T> covariance_expansion(const TailModel<T>& tail, int s1, int s2, int imax = 7,
                                         int jmax = -1) {
  if (jmax < 0) jmax = tail.order();
  CovarianceReport<T> r;
  r.series = covariance_series(tail, s1, s2, imax, jmax);
  const T a = tail.a();
  r.a0 = a < T(1) ? a : T(1);
  r.Ec = ec_of(tail);
  r.F0 = r.series.at(0, 0);
  if (imax >= 1) r.F1 = r.series.at(1, 0);
  r.B20 = pair_moment_expansion(tail, s1, s2, 0, 0).at(0, 0);
  auto unit = unit_ec_tail(tail);
  r.F2 = covariance_series(unit, s1, s2, 0, 1).at(0, 1);
  r.Da = pair_moment_expansion(unit, s1, s2, 0, 1).at(0, 1);
  return r;
}

template <class T>
struct ThirdCumulant {
  T kappa0{0}, kappa1{0}, kappa_a{0};
  ExpansionSeries<T> series;
};

/// Joint third cumulant of Y_{n,s1}, Y_{n,s2}, Y_{n,s3} for a unit tail index.
template <class T>
ThirdCumulant<T> third_cumulant_expansion(int s1, int s2, int s3, const TailModel<T>& tail,
                                          int imax = 7, int jmax = -1) {
  if (tail.alpha != T(1)) throw ArgumentError("third_cumulant_expansion: requires alpha = 1");
  if (!(s1 >= s2 && s2 >= s3)) throw ArgumentError("third_cumulant_expansion: need s1 >= s2 >= s3");
  if (!(s1 > 2 && s2 > 1 && s3 > 0))
    throw InfiniteMomentError("third cumulant does not exist: need s1 > 2, s2 > 1, s3 > 0");
  if (jmax < 0) jmax = tail.order();
  auto m = [&](std::vector<int> s) { return product_moment_expansion(tail, s, imax, jmax); };
  auto m1 = m({s1}), m2 = m({s2}), m3 = m({s3});
  auto k = m({s1, s2, s3}) - (m1 * m({s2, s3}) + m2 * m({s1, s3}) + m3 * m({s1, s2})) +
           (m1 * m2 * m3).scaled(T(2));
  ThirdCumulant<T> out;
  out.series = k;
  out.kappa0 = k.at(0, 0);
  if (k.imax >= 1) out.kappa1 = k.at(1, 0);
  if (k.jmax >= 1) out.kappa_a = k.at(0, 1);
  return out;
}

template <class T>
struct LeadingProductMoment {
  T m0{0}, m1{0}, ma{0};
};

/// Leading coefficients of E prod Y_{n,s_i} (unit powers, unit tail index):
/// m0 + m1/n + ma/n^a.
template <class T>
LeadingProductMoment<T> leading_product_moment(const std::vector<int>& s, const TailModel<T>& tail) {
  if (tail.alpha != T(1)) throw ArgumentError("leading_product_moment: requires alpha = 1");
  const int k = static_cast<int>(s.size());
  for (int i = 0; i < k; ++i) {
    if (i > 0 && s[i] > s[i - 1]) throw ArgumentError("leading_product_moment: s must be nonincreasing");
    if (!(s[i] > k - (i + 1)))
      throw InfiniteMomentError("moment does not exist: need s_i > k - i", i + 1);
  }
  const int jmax = std::min(1, tail.order());
  auto e = product_moment_expansion(tail, s, 1, jmax);
  LeadingProductMoment<T> out;
  out.m0 = e.at(0, 0);
  out.m1 = e.at(1, 0);
  if (jmax >= 1) out.ma = e.at(0, 1);
  return out;
}

template <class T>
struct ProductBCoefficients {
  T B0{0};
  std::vector<T> Bj;  // B_{k1}..B_{kk}
  T Bdot{0};
};

/// B_{k0} = B(s : -psibar) and B_{kj} = B(s : a I_j - psibar) for unit powers
/// and unit tail index, with I_j the indicator of m <= j.
template <class T>
ProductBCoefficients<T> product_b_coefficients(const std::vector<int>& s, const T& a) {
  const int k = static_cast<int>(s.size());
  std::vector<T> phi(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) phi[m] = -T(k - m);
  ProductBCoefficients<T> out;
  out.B0 = n_free_factor_bar(s, phi);
  for (int j = 1; j <= k; ++j) {
    auto p = phi;
    for (int m = 0; m < j; ++m) p[m] += a;
    out.Bj.push_back(n_free_factor_bar(s, p));
    out.Bdot += out.Bj.back();
  }
  return out;
}

struct Evaluation {
  double value = 0;
  double last_term = 0;
};

inline bool order_le(double x, double y) { return x <= y + 1e-9; }

/// Partial sum at n over grid cells with i + ja <= max_order; last_term is the
/// magnitude of the highest retained order group.
template <class T>
Evaluation evaluate_expansion(const ExpansionSeries<T>& e, double n,
                              double max_order = std::numeric_limits<double>::infinity()) {
  if (!(n >= 1)) throw DomainError("evaluate_expansion: n must be at least 1");
  const double a = to_double(e.a);
  const double pre = std::pow(n, to_double(e.lead));
  Evaluation r;
  double top = -1;
  for (int i = 0; i <= e.imax; ++i)
    for (int j = 0; j <= e.jmax; ++j) {
      double ord = i + j * a;
      if (!order_le(ord, max_order)) continue;
      double c = to_double(e.grid[i][j]);
      if (c == 0.0) continue;
      r.value += c * std::pow(n, -ord);
      if (ord > top + 1e-9) top = ord;
    }
  double group = 0;
  for (int i = 0; i <= e.imax; ++i)
    for (int j = 0; j <= e.jmax; ++j) {
      double ord = i + j * a;
      if (top > 0 && std::fabs(ord - top) <= 1e-9) group += to_double(e.grid[i][j]) * std::pow(n, -ord);
    }
  r.value *= pre;
  r.last_term = std::fabs(group) * pre;
  return r;
}

/// Sum of the coefficients of n^{-order} (cells with i + ja equal to order).
template <class T>
T coefficient_at_order(const ExpansionSeries<T>& e, double order) {
  T acc(0);
  const double a = to_double(e.a);
  for (int i = 0; i <= e.imax; ++i)
    for (int j = 0; j <= e.jmax; ++j)
      if (std::fabs(i + j * a - order) <= 1e-9) acc += e.grid[i][j];
  return acc;
}

/// Smallest order above max_order whose coefficient is nonzero relative to
/// the coefficients at and below it; empty when the grid has none.
template <class T>
std::optional<double> first_omitted_order(const ExpansionSeries<T>& e, double max_order) {
  const double a = to_double(e.a);
  std::vector<double> orders;
  for (int i = 0; i <= e.imax; ++i)
    for (int j = 0; j <= e.jmax; ++j) orders.push_back(i + j * a);
  std::sort(orders.begin(), orders.end());
  double scale = 0;
  for (double ord : orders) {
    for (int i = 0; i <= e.imax; ++i)
      for (int j = 0; j <= e.jmax; ++j)
        if (std::fabs(i + j * a - ord) <= 1e-9) scale = std::max(scale, std::fabs(to_double(e.grid[i][j])));
    if (order_le(ord, max_order)) continue;
    double c = to_double(coefficient_at_order(e, ord));
    if (std::fabs(c) > 1e-12 * scale) return ord;
  }
  return std::nullopt;
}

}  // namespace paretail
