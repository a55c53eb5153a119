#include "paretail/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "paretail/errors.hpp"

namespace paretail {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  auto t = trim(text);
  double v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ArgumentError("distribution spec: bad number '" + t + "'");
  return v;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

DistributionSpec::DistributionSpec(DistKind k, std::vector<double> p) : kind_(k), params_(std::move(p)) {
  validate();
}

DistributionSpec DistributionSpec::pareto(double alpha, double c0) { return {DistKind::pareto, {alpha, c0}}; }
DistributionSpec DistributionSpec::cauchy() { return {DistKind::cauchy, {}}; }
DistributionSpec DistributionSpec::student_t(int N) { return {DistKind::student_t, {double(N)}}; }
DistributionSpec DistributionSpec::f_dist(double M, double N) { return {DistKind::f_dist, {M, N}}; }
DistributionSpec DistributionSpec::stable(double alpha, double gamma) {
  return {DistKind::stable, {alpha, gamma}};
}
DistributionSpec DistributionSpec::frechet(double alpha) { return {DistKind::frechet, {alpha}}; }

DistributionSpec DistributionSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  std::string name = t;
  std::vector<double> p;
  auto open = t.find('(');
  if (open != std::string::npos) {
    if (t.back() != ')') throw ArgumentError("distribution spec: missing ')' in '" + t + "'");
    name = trim(t.substr(0, open));
    std::string inner = t.substr(open + 1, t.size() - open - 2);
    if (!trim(inner).empty()) {
      std::stringstream ss(inner);
      std::string item;
      while (std::getline(ss, item, ',')) p.push_back(parse_number(item));
    }
  }
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      throw ArgumentError("distribution spec: wrong number of parameters for '" + name + "'");
  };
  if (name == "pareto") {
    need(0, 2);
    return pareto(p.size() > 0 ? p[0] : 1.0, p.size() > 1 ? p[1] : 1.0);
  }
  if (name == "cauchy") {
    need(0, 0);
    return cauchy();
  }
  if (name == "student_t" || name == "t") {
    need(1, 1);
    if (p[0] != std::floor(p[0])) throw ArgumentError("student_t: N must be an integer");
    return student_t(static_cast<int>(p[0]));
  }
  if (name == "f_dist" || name == "f") {
    need(2, 2);
    return f_dist(p[0], p[1]);
  }
  if (name == "stable") {
    need(2, 2);
    return stable(p[0], p[1]);
  }
  if (name == "frechet") {
    need(0, 1);
    return frechet(p.empty() ? 1.0 : p[0]);
  }
  throw ArgumentError("unknown distribution '" + name + "'");
}

void DistributionSpec::validate() const {
  auto finite = std::all_of(params_.begin(), params_.end(), [](double x) { return std::isfinite(x); });
  if (!finite) throw ArgumentError("distribution parameters must be finite");
  switch (kind_) {
    case DistKind::pareto:
      if (!(params_[0] > 0 && params_[1] > 0)) throw ArgumentError("pareto: need alpha > 0, c0 > 0");
      break;
    case DistKind::cauchy:
      break;
    case DistKind::student_t:
      if (!(params_[0] >= 1)) throw ArgumentError("student_t: need integer N >= 1");
      break;
    case DistKind::f_dist:
      if (!(params_[0] > 0 && params_[1] > 0)) throw ArgumentError("f_dist: need M > 0, N > 0");
      break;
    case DistKind::stable: {
      double a = params_[0], g = params_[1];
      if (!(a > 0 && a < 1)) throw ArgumentError("stable: need 0 < alpha < 1");
      if (!(std::fabs(g) <= a)) throw ArgumentError("stable: need |gamma| <= alpha");
      if (!(g < a)) throw ArgumentError("stable: gamma = alpha has no right tail");
      break;
    }
    case DistKind::frechet:
      if (!(params_[0] > 0)) throw ArgumentError("frechet: need alpha > 0");
      break;
  }
}

std::string DistributionSpec::name() const {
  switch (kind_) {
    case DistKind::pareto: return "pareto";
    case DistKind::cauchy: return "cauchy";
    case DistKind::student_t: return "student_t";
    case DistKind::f_dist: return "f_dist";
    case DistKind::stable: return "stable";
    case DistKind::frechet: return "frechet";
  }
  return "?";
}

std::string DistributionSpec::to_string() const {
  if (params_.empty()) return name();
  std::string out = name() + "(";
  for (std::size_t i = 0; i < params_.size(); ++i) out += (i ? "," : "") + fmt(params_[i]);
  return out + ")";
}

Capabilities DistributionSpec::capabilities() const {
  Capabilities c;
  switch (kind_) {
    case DistKind::pareto:
    case DistKind::cauchy:
    case DistKind::frechet:
      c.exact_quantile = c.sampler = c.cdf = true;
      break;
    case DistKind::student_t:
    case DistKind::f_dist:
      c.numeric_quantile = c.sampler = c.cdf = true;
      break;
    case DistKind::stable:
      c.sampler = params_[1] == -params_[0];
      break;
  }
  return c;
}

double DistributionSpec::tail_index() const {
  switch (kind_) {
    case DistKind::pareto: return params_[0];
    case DistKind::cauchy: return 1.0;
    case DistKind::student_t: return params_[0];
    case DistKind::f_dist: return params_[1] / 2;
    case DistKind::stable: return params_[0];
    case DistKind::frechet: return params_[0];
  }
  return 0;
}

double upper_quantile(const DistributionSpec& dist, double v) {
  if (!(v > 0 && v < 1)) throw DomainError("upper_quantile: v must lie in (0,1)");
  const auto& p = dist.params();
  switch (dist.kind()) {
    case DistKind::pareto:
      return std::pow(p[1] / v, 1.0 / p[0]);
    case DistKind::cauchy:
      return 1.0 / std::tan(kPi * v);
    case DistKind::frechet:
      return std::pow(-std::log1p(-v), -1.0 / p[0]);
    case DistKind::student_t: {
      boost::math::students_t_distribution<double> d(p[0]);
      return boost::math::quantile(boost::math::complement(d, v));
    }
    case DistKind::f_dist: {
      boost::math::fisher_f_distribution<double> d(p[0], p[1]);
      return boost::math::quantile(boost::math::complement(d, v));
    }
    case DistKind::stable:
      break;
  }
  throw CapabilityError(dist.to_string() + " has no quantile function");
}

double exact_quantile(const DistributionSpec& dist, double u) {
  if (!(u > 0 && u < 1)) throw DomainError("exact_quantile: u must lie in (0,1)");
  if (!dist.capabilities().quantile()) throw CapabilityError(dist.to_string() + " has no quantile function");
  return upper_quantile(dist, 1.0 - u);
}

double upper_tail(const DistributionSpec& dist, double x) {
  const auto& p = dist.params();
  switch (dist.kind()) {
    case DistKind::pareto: {
      double lo = std::pow(p[1], 1.0 / p[0]);
      return x <= lo ? 1.0 : p[1] * std::pow(x, -p[0]);
    }
    case DistKind::cauchy:
      return x > 0 ? std::atan(1.0 / x) / kPi : 0.5 - std::atan(x) / kPi;
    case DistKind::frechet:
      return x <= 0 ? 1.0 : -std::expm1(-std::pow(x, -p[0]));
    case DistKind::student_t: {
      boost::math::students_t_distribution<double> d(p[0]);
      return boost::math::cdf(boost::math::complement(d, x));
    }
    case DistKind::f_dist: {
      if (x <= 0) return 1.0;
      boost::math::fisher_f_distribution<double> d(p[0], p[1]);
      return boost::math::cdf(boost::math::complement(d, x));
    }
    case DistKind::stable:
      break;
  }
  throw CapabilityError(dist.to_string() + " has no distribution function");
}

double open_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double sample(const DistributionSpec& dist, std::mt19937_64& rng) {
  if (!dist.capabilities().sampler) throw CapabilityError(dist.to_string() + " has no sampler");
  if (dist.kind() == DistKind::stable) {
    // Kanter's representation of the positive stable law with E exp(-sX) = exp(-s^alpha).
    const double a = dist.params()[0];
    const double u = kPi * open_uniform(rng);
    const double e = -std::log(open_uniform(rng));
    return std::sin(a * u) * std::pow(std::sin(u), -1.0 / a) *
           std::pow(std::sin((1 - a) * u) / e, (1 - a) / a);
  }
  return upper_quantile(dist, open_uniform(rng));
}

std::vector<DistributionSpec> catalog_examples() {
  return {DistributionSpec::pareto(1, 1),    DistributionSpec::cauchy(),
          DistributionSpec::student_t(3),    DistributionSpec::f_dist(3, 4),
          DistributionSpec::stable(0.5, -0.5), DistributionSpec::stable(0.5, 0.3),
          DistributionSpec::frechet(1)};
}

}  // namespace paretail
