#include "paretail/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "paretail/errors.hpp"

namespace paretail {

std::string to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::quad1d: return "quad1d";
    case OracleMethod::quad2d: return "quad2d";
    case OracleMethod::mc: return "mc";
  }
  return "?";
}

namespace {

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

struct Integral {
  double value = 0;
  double error = 0;
  long long evals = 0;
};

/// int_0^1 f(v) v^{A-1} (1-v)^{B-1} / B(A,B) dv where f(v) = O(v^{-psi}) at 0
/// and A - psi > 0. f returns the integrand factor as (log|f|, sign).
template <class F>
Integral integrate_beta(double A, double B, double psi, F&& f, double tol) {
  const double lb = log_beta(A, B);
  long long evals = 0;
  // Mass of the weight below kVmin is far under tolerance; cutting there keeps
  // products of nested arguments representable.
  constexpr double kVmin = 1e-150;
  auto weighted = [&](double v, double logv) -> double {
    ++evals;
    if (!(v > kVmin) || !(v < 1)) return 0.0;
    auto [lf, sg] = f(v, logv);
    if (sg == 0) return 0.0;
    double lw = (A - 1) * logv + (B - 1) * std::log1p(-v) - lb;
    return sg * std::exp(lf + lw);
  };

  const double m = A / (A + B);
  std::vector<double> pts;
  for (double k : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0})
    if (m * k < 1.0) pts.push_back(m * k);
  pts.push_back(1.0);

  Integral out;
  boost::math::quadrature::tanh_sinh<double> ts(12);

  // First panel: v = t^p removes the v^{A-1-psi} endpoint behaviour.
  {
    const double p = 1.0 / (A - psi);
    const double tmax = std::pow(pts[0], 1.0 / p);
    auto g = [&](double t) {
      if (!(t > 0)) return 0.0;
      double logv = p * std::log(t);
      return weighted(std::exp(logv), logv) * p * std::exp((p - 1) * std::log(t));
    };
    double err = 0;
    out.value += ts.integrate(g, 0.0, tmax, tol, &err);
    out.error += err;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    auto g = [&](double v) { return weighted(v, std::log(v)); };
    double err = 0;
    if (i + 2 == pts.size())
      out.value += ts.integrate(g, lo, hi, tol, &err);
    else
      out.value += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, lo, hi, 12, tol, &err);
    out.error += err;
  }
  out.evals = evals;
  return out;
}

std::pair<double, double> log_power(double q, double theta) {
  if (q == 0) return {0.0, theta == 0 ? 1.0 : 0.0};
  double sg = 1;
  if (q < 0) {
    if (theta != std::floor(theta))
      throw DomainError("quadrature: non-integral power of a negative quantile");
    sg = std::fmod(std::fabs(theta), 2.0) == 1.0 ? -1.0 : 1.0;
  }
  return {theta * std::log(std::fabs(q)), sg};
}

void require_quantile(const DistributionSpec& dist) {
  if (!dist.capabilities().quantile())
    throw CapabilityError(dist.to_string() + " has no quantile function for quadrature");
}

}  // namespace

double order_stat_density(int n, const std::vector<int>& r, const std::vector<double>& u) {
  if (r.size() != u.size() || r.empty()) throw ArgumentError("order_stat_density: size mismatch");
  double logd = 0;
  int rprev = 0;
  double uprev = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] <= rprev || r[i] > n) throw ArgumentError("order_stat_density: ranks must increase within [1,n]");
    if (!(u[i] > uprev) || !(u[i] < 1)) throw DomainError("order_stat_density: points must satisfy 0 < u_1 < ... < u_k < 1");
    logd += (r[i] - rprev - 1) * std::log(u[i] - uprev) - log_beta(r[i] - rprev, n - r[i] + 1);
    rprev = r[i];
    uprev = u[i];
  }
  logd += (n - rprev) * std::log1p(-uprev);
  return std::exp(logd);
}

OracleResult quad_moment(const DistributionSpec& dist, int n, int s, double theta) {
  if (n < 1 || s < 0 || s >= n) throw ArgumentError("quad_moment: need 0 <= s < n");
  OracleResult r;
  r.method = OracleMethod::quad1d;
  if (theta == 0) {
    r.value = 1;
    return r;
  }
  require_quantile(dist);
  const double psi = theta / dist.tail_index();
  if (!(s + 1 - psi > 0))
    throw InfiniteMomentError("moment does not exist: theta/alpha >= s + 1", 1);
  auto f = [&](double v, double) { return log_power(upper_quantile(dist, v), theta); };
  auto I = integrate_beta(s + 1.0, double(n - s), std::max(psi, 0.0), f, 1e-13);
  r.value = I.value;
  r.abs_error = I.error;
  r.cost = I.evals;
  return r;
}

OracleResult quad_joint_moment(const DistributionSpec& dist, int n, int s1, int s2, double theta1,
                               double theta2) {
  if (s1 < s2) throw ArgumentError("quad_joint_moment: need s1 >= s2");
  if (s1 == s2) return quad_moment(dist, n, s1, theta1 + theta2);
  if (theta2 == 0) return quad_moment(dist, n, s1, theta1);
  if (theta1 == 0) return quad_moment(dist, n, s2, theta2);
  if (n < 1 || s1 >= n || s2 < 0) throw ArgumentError("quad_joint_moment: need 0 <= s2 <= s1 < n");
  require_quantile(dist);
  const double al = dist.tail_index();
  const double psi1 = theta1 / al, psi2 = theta2 / al;
  if (!(s1 + 1 - psi1 - psi2 > 0))
    throw InfiniteMomentError("moment does not exist: thetabar_1/alpha >= s1 + 1", 1);
  if (!(s2 + 1 - psi2 > 0))
    throw InfiniteMomentError("moment does not exist: theta_2/alpha >= s2 + 1", 2);

  // V1 = 1 - U_{n,n-s1} ~ Beta(s1+1, n-s1); W = V2/V1 ~ Beta(s2+1, s1-s2) independent of V1.
  long long inner_evals = 0;
  auto outer = [&](double v, double) -> std::pair<double, double> {
    auto inner = [&](double w, double) { return log_power(upper_quantile(dist, v * w), theta2); };
    auto I = integrate_beta(s2 + 1.0, double(s1 - s2), std::max(psi2, 0.0), inner, 1e-12);
    inner_evals += I.evals;
    if (I.value == 0) return {0.0, 0.0};
    auto [lq, sq] = log_power(upper_quantile(dist, v), theta1);
    return {lq + std::log(std::fabs(I.value)), sq * (I.value < 0 ? -1.0 : 1.0)};
  };
  auto I = integrate_beta(s1 + 1.0, double(n - s1), std::max(psi1 + psi2, 0.0), outer, 1e-11);
  OracleResult r;
  r.method = OracleMethod::quad2d;
  r.value = I.value;
  r.abs_error = I.error;
  r.cost = I.evals + inner_evals;
  return r;
}

std::vector<std::vector<double>> mc_batches(
    const DistributionSpec& dist, int n, int smax, const MonteCarloOptions& opt,
    const std::function<std::vector<double>(const std::vector<double>&, long long)>& reduce) {
  if (smax < 0 || smax >= n) throw ArgumentError("mc: need 0 <= smax < n");
  if (opt.reps < 1 || opt.batch_size < 1) throw ArgumentError("mc: reps and batch size must be positive");
  const auto caps = dist.capabilities();
  if (!caps.sampler) throw CapabilityError(dist.to_string() + " has no sampler");
  const bool via_quantile = caps.quantile();
  const long long nb = (opt.reps + opt.batch_size - 1) / opt.batch_size;
  const int width = smax + 1;
  std::vector<std::vector<double>> results(static_cast<std::size_t>(nb));

  auto run_batch = [&](long long b) {
    const long long rows = std::min(opt.batch_size, opt.reps - b * opt.batch_size);
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(opt.seed >> 32), static_cast<std::uint32_t>(b)};
    std::mt19937_64 rng(seq);
    std::vector<double> block(static_cast<std::size_t>(rows * width));
    if (via_quantile) {
      std::vector<double> cum(static_cast<std::size_t>(width));
      std::gamma_distribution<double> rest(double(n - smax), 1.0);
      for (long long row = 0; row < rows; ++row) {
        double acc = 0;
        for (int s = 0; s < width; ++s) {
          acc += -std::log(open_uniform(rng));
          cum[s] = acc;
        }
        const double total = acc + rest(rng);
        for (int s = 0; s < width; ++s) block[row * width + s] = upper_quantile(dist, cum[s] / total);
      }
    } else {
      std::vector<double> draws(static_cast<std::size_t>(n));
      for (long long row = 0; row < rows; ++row) {
        for (auto& x : draws) x = sample(dist, rng);
        std::nth_element(draws.begin(), draws.begin() + smax, draws.end(), std::greater<>());
        std::sort(draws.begin(), draws.begin() + width, std::greater<>());
        for (int s = 0; s < width; ++s) block[row * width + s] = draws[s];
      }
    }
    results[b] = reduce(block, rows);
  };

  const int workers = std::max(1, opt.workers);
  if (workers == 1) {
    for (long long b = 0; b < nb; ++b) run_batch(b);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long long b = w; b < nb; b += workers) run_batch(b);
      });
    for (auto& t : pool) t.join();
  }
  return results;
}

namespace {

/// Pools per-batch {estimate * rows, sum g, sum g^2, rows}, where g is the
/// per-row influence value, into a row-weighted estimate and its delta-method
/// standard error.
std::pair<double, double> pool_rows(const std::vector<std::vector<double>>& batches) {
  double est = 0, sg = 0, sg2 = 0, N = 0;
  for (const auto& b : batches) {
    est += b[0];
    sg += b[1];
    sg2 += b[2];
    N += b[3];
  }
  const double mg = sg / N;
  const double var = std::max(0.0, (sg2 - N * mg * mg) / (N - 1));
  return {est / N, std::sqrt(var / N)};
}

}  // namespace

std::vector<OracleResult> mc_top_order_stats(const DistributionSpec& dist, int n, int smax,
                                             double theta, const MonteCarloOptions& opt) {
  const double al = dist.tail_index();
  std::vector<OracleResult> out(static_cast<std::size_t>(smax) + 1);
  if (theta == 0) {
    for (auto& r : out) {
      r.value = 1;
      r.method = OracleMethod::mc;
      r.cost = opt.reps;
    }
    return out;
  }
  if (!(theta / al < smax + 1.0))
    throw InfiniteMomentError("moment does not exist at any s <= " + std::to_string(smax), 1);
  const int width = smax + 1;
  // Per batch: sum of X^theta and sum of squares for each s, then the count.
  auto reduce = [&](const std::vector<double>& block, long long rows) {
    std::vector<double> acc(static_cast<std::size_t>(2 * width + 1), 0.0);
    for (long long row = 0; row < rows; ++row)
      for (int s = 0; s < width; ++s) {
        double x = block[row * width + s];
        double y = theta == 1 ? x : std::pow(x, theta);
        acc[s] += y;
        acc[width + s] += y * y;
      }
    acc[2 * width] = double(rows);
    return acc;
  };
  auto batches = mc_batches(dist, n, smax, opt, reduce);
  for (int s = 0; s < width; ++s) {
    double sum = 0, sq = 0, cnt = 0;
    for (const auto& b : batches) {
      sum += b[s];
      sq += b[width + s];
      cnt += b[2 * width];
    }
    auto& r = out[s];
    r.method = OracleMethod::mc;
    r.cost = opt.reps;
    if (!(theta / al < s + 1.0)) {
      r.value = r.std_error = std::numeric_limits<double>::infinity();
      r.finite_variance = false;
      continue;
    }
    r.value = sum / cnt;
    double var = std::max(0.0, (sq - cnt * r.value * r.value) / (cnt - 1));
    r.std_error = std::sqrt(var / cnt);
    r.finite_variance = 2 * theta / al < s + 1;
  }
  return out;
}

OracleResult mc_covariance(const DistributionSpec& dist, int n, int s1, int s2, double scale,
                           const MonteCarloOptions& opt) {
  if (s1 < s2) throw ArgumentError("mc_covariance: need s1 >= s2");
  const double al = dist.tail_index();
  if (!(2 / al < s1 + 1 && 1 / al < s2 + 1))
    throw InfiniteMomentError("covariance does not exist for these depths");
  const int width = s1 + 1;
  auto reduce = [&](const std::vector<double>& block, long long rows) {
    double m1 = 0, m2 = 0;
    for (long long row = 0; row < rows; ++row) {
      m1 += block[row * width + s1] / scale;
      m2 += block[row * width + s2] / scale;
    }
    m1 /= rows;
    m2 /= rows;
    double sg = 0, sg2 = 0;
    for (long long row = 0; row < rows; ++row) {
      double g = (block[row * width + s1] / scale - m1) * (block[row * width + s2] / scale - m2);
      sg += g;
      sg2 += g * g;
    }
    const double R = double(rows);
    return std::vector<double>{sg / (R - 1) * R, sg, sg2, R};
  };
  auto batches = mc_batches(dist, n, s1, opt, reduce);
  auto [mean, se] = pool_rows(batches);
  OracleResult r;
  r.method = OracleMethod::mc;
  r.value = mean;
  r.std_error = se;
  r.cost = opt.reps;
  r.finite_variance = 4 / al < s1 + 1 && 2 / al < s2 + 1;
  return r;
}

OracleResult mc_joint_cumulant3(const DistributionSpec& dist, int n, int s1, int s2, int s3,
                                double scale, const MonteCarloOptions& opt) {
  if (!(s1 >= s2 && s2 >= s3)) throw ArgumentError("mc_joint_cumulant3: need s1 >= s2 >= s3");
  const double al = dist.tail_index();
  if (!(3 / al < s1 + 1 && 2 / al < s2 + 1 && 1 / al < s3 + 1))
    throw InfiniteMomentError("third cumulant does not exist for these depths");
  const int width = s1 + 1;
  const int cols[3] = {s1, s2, s3};
  // Influence value of a row: centered triple product minus the first-order
  // effect of estimating the means.
  auto reduce = [&](const std::vector<double>& block, long long rows) {
    double m[3] = {0, 0, 0};
    for (long long row = 0; row < rows; ++row)
      for (int c = 0; c < 3; ++c) m[c] += block[row * width + cols[c]] / scale;
    for (double& x : m) x /= rows;
    auto dev = [&](long long row, int c) { return block[row * width + cols[c]] / scale - m[c]; };
    double c12 = 0, c13 = 0, c23 = 0, acc = 0;
    for (long long row = 0; row < rows; ++row) {
      const double d0 = dev(row, 0), d1 = dev(row, 1), d2 = dev(row, 2);
      c12 += d0 * d1;
      c13 += d0 * d2;
      c23 += d1 * d2;
      acc += d0 * d1 * d2;
    }
    const double R = double(rows);
    c12 /= R;
    c13 /= R;
    c23 /= R;
    double sg = 0, sg2 = 0;
    for (long long row = 0; row < rows; ++row) {
      const double d0 = dev(row, 0), d1 = dev(row, 1), d2 = dev(row, 2);
      const double g = d0 * d1 * d2 - c23 * d0 - c13 * d1 - c12 * d2;
      sg += g;
      sg2 += g * g;
    }
    return std::vector<double>{acc * R / ((R - 1) * (R - 2)) * R, sg, sg2, R};
  };
  auto batches = mc_batches(dist, n, s1, opt, reduce);
  auto [mean, se] = pool_rows(batches);
  OracleResult r;
  r.method = OracleMethod::mc;
  r.value = mean;
  r.std_error = se;
  r.cost = opt.reps;
  r.finite_variance = 6 / al < s1 + 1 && 4 / al < s2 + 1 && 2 / al < s3 + 1;
  return r;
}

RateFit convergence_rate_probe(const std::vector<double>& n_grid, const std::vector<double>& diffs,
                               double tol) {
  if (n_grid.size() < 3 || n_grid.size() != diffs.size())
    throw ArgumentError("convergence_rate_probe: need at least three matching points");
  RateFit fit;
  for (double d : diffs)
    if (!(std::fabs(d) > tol)) {
      fit.saturated = true;
      return fit;
    }
  const double k = double(n_grid.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    double x = std::log(n_grid[i]), y = std::log(std::fabs(diffs[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / k;
  double rss = 0;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    double e = std::log(std::fabs(diffs[i])) - fit.intercept - fit.slope * std::log(n_grid[i]);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / k);
  return fit;
}

RateFit convergence_rate_probe(const std::vector<double>& n_grid,
                               const std::function<double(double)>& approx,
                               const std::function<OracleResult(double)>& oracle) {
  std::vector<double> diffs;
  double tol = 0;
  for (double n : n_grid) {
    auto o = oracle(n);
    diffs.push_back(o.value - approx(n));
    tol = std::max({tol, o.abs_error, 4 * o.std_error, 1e-11 * std::fabs(o.value)});
  }
  return convergence_rate_probe(n_grid, diffs, tol);
}

}  // namespace paretail
