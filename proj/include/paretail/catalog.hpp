#pragma once

// Heavy-tailed distributions with known upper-tail expansions, their
// quantiles and samplers.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "paretail/quantile.hpp"

namespace paretail {

enum class DistKind { pareto, cauchy, student_t, f_dist, stable, frechet };

struct Capabilities {
  bool exact_quantile = false;
  bool numeric_quantile = false;
  bool sampler = false;
  bool cdf = false;

  bool quantile() const { return exact_quantile || numeric_quantile; }
};

class DistributionSpec {
 public:
  /// Parses "name" or "name(p1,p2,...)"; e.g. "student_t(3)", "stable(0.5,-0.5)".
  static DistributionSpec parse(const std::string& text);

  static DistributionSpec pareto(double alpha = 1.0, double c0 = 1.0);
  static DistributionSpec cauchy();
  static DistributionSpec student_t(int N);
  static DistributionSpec f_dist(double M, double N);
  static DistributionSpec stable(double alpha, double gamma);
  static DistributionSpec frechet(double alpha = 1.0);

  DistKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  std::string name() const;
  std::string to_string() const;
  Capabilities capabilities() const;

  /// alpha of 1 - F(x) ~ c_0 x^{-alpha}.
  double tail_index() const;

 private:
  DistributionSpec(DistKind k, std::vector<double> p);
  void validate() const;

  DistKind kind_;
  std::vector<double> params_;
};

namespace detail {

/// binom(-gamma, i).
template <class T>
T binom_neg(const T& gamma, int i) {
  T r(1);
  for (int j = 0; j < i; ++j) r *= (-gamma - T(j)) / T(j + 1);
  return r;
}

}  // namespace detail

/// Tail model (alpha, beta, c_0..c_order) in a floating scalar T; order <= 12.
/// Coefficients involving pi or gamma functions are evaluated at the precision
/// of T, which matters for reversion at high order.
template <class T>
TailModel<T> tail_of_as(const DistributionSpec& dist, int order) {
  using std::exp;
  using std::pow;
  using std::sin;
  using std::sqrt;
  namespace bm = boost::math;
  if (order < 0) throw ArgumentError("tail_of: negative order");
  if (order > 12) throw UnsupportedOrderError("tail_of: catalog tails are truncated at order 12");
  const T pi = bm::constants::pi<T>();
  std::vector<T> c(static_cast<std::size_t>(order) + 1, T(0));
  std::vector<T> p;
  for (double x : dist.params()) p.emplace_back(x);
  T alpha(dist.tail_index()), beta(0);
  switch (dist.kind()) {
    case DistKind::pareto:
      beta = alpha;
      c[0] = p[1];
      break;
    case DistKind::cauchy:
      beta = 2;
      for (int i = 0; i <= order; ++i) c[i] = T(i % 2 ? -1 : 1) / (T(2 * i + 1) * pi);
      break;
    case DistKind::student_t: {
      const T N = p[0], g = (N + 1) / 2;
      const T gN = exp(bm::lgamma(g) - bm::lgamma(T(N / 2))) / sqrt(T(N * pi));
      beta = 2;
      for (int i = 0; i <= order; ++i)
        c[i] = detail::binom_neg(g, i) * pow(N, T(g + i)) * gN / (N + T(2 * i));
      break;
    }
    case DistKind::f_dist: {
      const T M = p[0], N = p[1], nu = M / N, g = (M + N) / 2;
      const T h = pow(nu, T(-N / 2)) / bm::beta(T(M / 2), T(N / 2));
      beta = 1;
      for (int i = 0; i <= order; ++i) c[i] = h * detail::binom_neg(g, i) * pow(nu, T(-i)) / (N / 2 + T(i));
      break;
    }
    case DistKind::stable: {
      const T a = p[0], g = p[1];
      beta = a;
      for (int i = 0; i <= order; ++i) {
        const int k = i + 1;
        T ak = bm::tgamma(T(k * a + 1)) * (T(k % 2 ? -1 : 1) / bm::tgamma(T(k + 1))) *
               sin(T(k * pi * (g - a) / 2)) / pi;
        c[i] = ak / (a * T(k));
      }
      break;
    }
    case DistKind::frechet:
      beta = alpha;
      for (int i = 0; i <= order; ++i) c[i] = T(i % 2 ? -1 : 1) / bm::tgamma(T(i + 2));
      break;
  }
  return TailModel<T>(alpha, beta, FormalSeries<T>(std::move(c)));
}

/// Tail model (alpha, beta, c_0..c_order) in double; order <= 12.
inline TailModel<double> tail_of(const DistributionSpec& dist, int order) {
  return tail_of_as<double>(dist, order);
}

/// F^{-1}(u) for u in (0,1).
double exact_quantile(const DistributionSpec& dist, double u);

/// F^{-1}(1 - v), accurate for small v.
double upper_quantile(const DistributionSpec& dist, double v);

/// 1 - F(x).
double upper_tail(const DistributionSpec& dist, double x);

/// One draw; Rng is a 64-bit engine.
double sample(const DistributionSpec& dist, std::mt19937_64& rng);

/// Uniform draw on the open interval (0,1) from 53 random bits.
double open_uniform(std::mt19937_64& rng);

/// The catalog entries used by `list-distributions`.
std::vector<DistributionSpec> catalog_examples();

}  // namespace paretail
