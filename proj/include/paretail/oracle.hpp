#pragma once

// Independent reference values: order-statistic densities, quadrature
// moments, Monte Carlo over the top block of order statistics, and
// convergence-rate fits.

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "paretail/catalog.hpp"

namespace paretail {

enum class OracleMethod { quad1d, quad2d, mc };

std::string to_string(OracleMethod m);

struct OracleResult {
  double value = 0;
  double std_error = 0;  // 0 for quadrature
  OracleMethod method = OracleMethod::quad1d;
  long long cost = 0;     // integrand evaluations or replications
  double abs_error = 0;   // quadrature error estimate
  bool finite_variance = true;
};

/// Joint density of (U_{n,r_1}, ..., U_{n,r_k}) at u, strictly increasing ranks.
double order_stat_density(int n, const std::vector<int>& r, const std::vector<double>& u);

/// E X_{n,n-s}^theta by one-dimensional quadrature against the Beta(s+1, n-s)
/// law of 1 - U_{n,n-s}.
OracleResult quad_moment(const DistributionSpec& dist, int n, int s, double theta);

/// E X_{n,n-s1}^theta1 X_{n,n-s2}^theta2 for s1 >= s2 by nested quadrature.
OracleResult quad_joint_moment(const DistributionSpec& dist, int n, int s1, int s2, double theta1,
                               double theta2);

struct MonteCarloOptions {
  long long reps = 1000000;
  std::uint64_t seed = 12345;
  long long batch_size = 100000;
  int workers = 1;
};

/// Generates the top block X_{n,n-smax} <= ... <= X_{n,n} of each replicate,
/// row-major with column s holding X_{n,n-s}, and reduces each batch with
/// `reduce`. Batches are seeded by (seed, batch index) and returned in batch
/// order, so the output does not depend on the worker count.
std::vector<std::vector<double>> mc_batches(
    const DistributionSpec& dist, int n, int smax, const MonteCarloOptions& opt,
    const std::function<std::vector<double>(const std::vector<double>& block, long long rows)>& reduce);

/// E X_{n,n-s}^theta for s = 0..smax with standard errors. Depths where the
/// moment does not exist report infinite value and error; throws
/// InfiniteMomentError when that holds for every depth.
std::vector<OracleResult> mc_top_order_stats(const DistributionSpec& dist, int n, int smax,
                                             double theta, const MonteCarloOptions& opt);

/// Covariance of Y_{n,s1}, Y_{n,s2} with Y = X / scale.
OracleResult mc_covariance(const DistributionSpec& dist, int n, int s1, int s2, double scale,
                           const MonteCarloOptions& opt);

/// Joint third cumulant of Y_{n,s1}, Y_{n,s2}, Y_{n,s3} with Y = X / scale.
OracleResult mc_joint_cumulant3(const DistributionSpec& dist, int n, int s1, int s2, int s3,
                                double scale, const MonteCarloOptions& opt);

struct RateFit {
  bool saturated = false;
  double slope = std::numeric_limits<double>::quiet_NaN();
  double intercept = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
};

/// Least-squares slope of log|diff| against log n. Saturated when any
/// |diff| is at or below tol.
RateFit convergence_rate_probe(const std::vector<double>& n_grid, const std::vector<double>& diffs,
                               double tol);

/// Same, computing diffs as oracle(n) - approx(n).
RateFit convergence_rate_probe(const std::vector<double>& n_grid,
                               const std::function<double(double)>& approx,
                               const std::function<OracleResult(double)>& oracle);

}  // namespace paretail
