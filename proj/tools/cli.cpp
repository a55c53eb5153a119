#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paretail/catalog.hpp"
#include "paretail/errors.hpp"
#include "paretail/extreme_moments.hpp"
#include "paretail/oracle.hpp"
#include "paretail/quantile.hpp"
#include "paretail/typo_ledger.hpp"

namespace paretail::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;

std::string num(double x) {
  if (x == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("bad number '" + item + "' in list '" + text + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw ArgumentError("bad number '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_list(text)) {
    if (v != std::floor(v)) throw ArgumentError("expected integers in '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PARETAIL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ArgumentError("PARETAIL_SEED must be a nonnegative integer");
    }
  }
  return kDefaultSeed;
}

struct TailSource {
  std::string dist;
  std::string tail;

  void add_options(CLI::App* app) {
    app->add_option("--dist", dist, "distribution spec, e.g. cauchy or student_t(3)");
    app->add_option("--tail", tail, "alpha,beta,c0,c1,... of an explicit tail model");
  }

  TailModel<double> model(int order) const {
    if (dist.empty() == tail.empty()) throw ArgumentError("give exactly one of --dist and --tail");
    if (!dist.empty()) return tail_of(DistributionSpec::parse(dist), order);
    auto v = parse_list(tail);
    if (v.size() < 3) throw ArgumentError("--tail needs alpha,beta,c0 at least");
    std::vector<double> c(v.begin() + 2, v.end());
    if (order >= 0 && order < static_cast<int>(c.size()) - 1) c.resize(static_cast<std::size_t>(order) + 1);
    return TailModel<double>(v[0], v[1], FormalSeries<double>(std::move(c)));
  }
};

void check_format(const std::string& f) {
  if (f != "csv" && f != "json") throw ArgumentError("--format must be csv or json");
}

// invert ---------------------------------------------------------------------

struct InvertArgs {
  TailSource src;
  int order = -1;
  double theta = 1;
  std::string format = "csv";
};

int do_invert(const InvertArgs& a, std::ostream& out) {
  check_format(a.format);
  int order = a.order;
  if (order < 0) order = a.src.dist.empty() ? -1 : 6;
  auto tail = a.src.model(order);
  auto q = quantile_series(tail, a.theta);
  if (a.format == "json") {
    Json j;
    j["schema"] = "paretail.invert/1";
    j["alpha"] = tail.alpha;
    j["beta"] = tail.beta;
    j["theta"] = q.theta;
    j["psi"] = q.psi;
    j["a"] = q.a;
    j["order"] = q.order();
    Json rows = Json::array();
    for (int i = 0; i <= q.order(); ++i) rows.push_back({{"i", i}, {"exponent", q.exponent(i)}, {"coefficient", q.C[i]}});
    j["coefficients"] = rows;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "i,exponent,coefficient\n";
  for (int i = 0; i <= q.order(); ++i) out << i << "," << num(q.exponent(i)) << "," << num(q.C[i]) << "\n";
  return 0;
}

// moments --------------------------------------------------------------------

struct MomentsArgs {
  TailSource src;
  std::string s;
  std::string theta;
  int imax = 7;
  int jmax = -1;
  std::optional<double> n;
  std::optional<double> max_order;
  bool normalized = false;
  std::string format = "csv";
};

int do_moments(const MomentsArgs& a, std::ostream& out) {
  check_format(a.format);
  auto tail = a.src.model(a.src.dist.empty() ? -1 : 12);
  auto s = parse_int_list(a.s);
  std::vector<double> theta = a.theta.empty() ? std::vector<double>(s.size(), 1.0) : parse_list(a.theta);
  int jmax = a.jmax < 0 ? std::min(4, tail.order()) : a.jmax;
  MomentQuery<double> q(tail, s, theta, a.imax, jmax);
  auto e = a.normalized ? normalized_moment_expansion(q) : moment_expansion(q);
  const double max_order = a.max_order.value_or(std::numeric_limits<double>::infinity());
  std::optional<Evaluation> ev;
  if (a.n) ev = evaluate_expansion(e, *a.n, max_order);
  auto omitted = first_omitted_order(e, max_order);

  if (a.format == "json") {
    Json j;
    j["schema"] = "paretail.moments/1";
    j["s"] = s;
    j["theta"] = theta;
    j["normalized"] = a.normalized;
    j["lead"] = e.lead;
    j["a"] = e.a;
    j["imax"] = e.imax;
    j["jmax"] = e.jmax;
    j["remainder_order"] = e.remainder_order();
    Json terms = Json::array();
    for (int i = 0; i <= e.imax; ++i)
      for (int jj = 0; jj <= e.jmax; ++jj)
        terms.push_back({{"i", i}, {"j", jj}, {"order", e.order(i, jj)}, {"coefficient", e.grid[i][jj]}});
    j["terms"] = terms;
    if (ev) {
      Json r;
      r["n"] = *a.n;
      r["value"] = ev->value;
      r["truncation_indicator"] = ev->last_term;
      if (a.max_order) r["max_order"] = *a.max_order;
      r["first_omitted_order"] = omitted ? Json(*omitted) : Json(nullptr);
      j["evaluation"] = r;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "i,j,order,coefficient\n";
  for (int i = 0; i <= e.imax; ++i)
    for (int jj = 0; jj <= e.jmax; ++jj)
      out << i << "," << jj << "," << num(e.order(i, jj)) << "," << num(e.grid[i][jj]) << "\n";
  if (ev) {
    out << "\nn,value,truncation_indicator,first_omitted_order\n";
    out << num(*a.n) << "," << num(ev->value) << "," << num(ev->last_term) << ","
        << (omitted ? num(*omitted) : std::string("none")) << "\n";
  }
  return 0;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string dist;
  std::string s;
  std::string n = "50,100,200";
  std::string oracle = "quad";
  long long reps = 1000000;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::optional<double> max_order;
  std::string format = "csv";
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  check_format(a.format);
  if (a.oracle != "quad" && a.oracle != "mc") throw ArgumentError("--oracle must be quad or mc");
  auto dist = DistributionSpec::parse(a.dist);
  auto s = parse_int_list(a.s);
  if (s.size() != 1 && s.size() != 2) throw ArgumentError("verify supports one depth (mean) or two (covariance)");
  if (s.size() == 2 && s[0] < s[1]) std::swap(s[0], s[1]);
  auto ns = parse_list(a.n);
  if (ns.size() < 3) throw ArgumentError("--n needs at least three sample sizes");

  auto tail = tail_of(dist, 8);
  const int jmax = tail.order();
  ExpansionSeries<double> e = s.size() == 1 ? mean_expansion(tail, s[0], 7, jmax)
                                            : covariance_series(tail, s[0], s[1], 7, jmax);
  const double a_grid = tail.a();
  const double max_order = a.max_order.value_or(std::max(1.0, a_grid));
  auto tag = first_omitted_order(e, max_order);
  const std::string quantity = s.size() == 1 ? "mean" : "covariance";

  MonteCarloOptions mc;
  mc.reps = a.reps;
  mc.seed = a.seed.value_or(default_seed());
  mc.workers = a.workers;

  struct Row {
    double n, expansion, oracle, se, diff;
  };
  std::vector<Row> rows;
  std::vector<double> diffs;
  double tol = 0;
  for (double nd : ns) {
    const int n = static_cast<int>(nd);
    if (n != nd || n < 2) throw ArgumentError("sample sizes must be integers >= 2");
    const double scale = std::pow(n * tail.c[0], 1.0 / tail.alpha);
    OracleResult o;
    if (s.size() == 1) {
      if (a.oracle == "quad") {
        o = quad_moment(dist, n, s[0], 1.0);
      } else {
        o = mc_top_order_stats(dist, n, s[0], 1.0, mc)[s[0]];
      }
      o.value /= scale;
      o.std_error /= scale;
      o.abs_error /= scale;
    } else if (a.oracle == "quad") {
      auto m12 = quad_joint_moment(dist, n, s[0], s[1], 1.0, 1.0);
      auto m1 = quad_moment(dist, n, s[0], 1.0);
      auto m2 = quad_moment(dist, n, s[1], 1.0);
      o = m12;
      o.value = (m12.value - m1.value * m2.value) / (scale * scale);
      o.abs_error = (m12.abs_error + std::fabs(m1.value) * m2.abs_error + std::fabs(m2.value) * m1.abs_error) /
                    (scale * scale);
    } else {
      o = mc_covariance(dist, n, s[0], s[1], scale, mc);
    }
    double approx = evaluate_expansion(e, nd, max_order).value;
    rows.push_back({nd, approx, o.value, o.std_error, std::fabs(o.value - approx)});
    diffs.push_back(o.value - approx);
    tol = std::max({tol, o.abs_error, 4 * o.std_error, 1e-11 * std::fabs(o.value)});
  }
  auto fit = convergence_rate_probe(ns, diffs, tol);
  std::string status = "ok";
  if (fit.saturated) {
    status = "saturated";
  } else if (!tag) {
    status = "no_tag";
  } else if (std::fabs(fit.slope + *tag) > 0.5) {
    status = "mismatch";
  }

  if (a.format == "json") {
    Json j;
    j["schema"] = "paretail.verify/1";
    j["dist"] = dist.to_string();
    j["quantity"] = quantity;
    j["s"] = s;
    j["oracle"] = a.oracle;
    if (a.oracle == "mc") {
      j["reps"] = mc.reps;
      j["seed"] = mc.seed;
    }
    j["max_order"] = max_order;
    j["remainder_tag"] = tag ? Json(*tag) : Json(nullptr);
    Json table = Json::array();
    for (const auto& r : rows)
      table.push_back({{"n", r.n}, {"expansion", r.expansion}, {"oracle", r.oracle}, {"oracle_se", r.se}, {"abs_diff", r.diff}});
    j["rows"] = table;
    j["slope"] = fit.saturated ? Json(nullptr) : Json(fit.slope);
    j["residual"] = fit.saturated ? Json(nullptr) : Json(fit.residual);
    j["status"] = status;
    out << j.dump(2) << "\n";
  } else {
    out << "n,expansion,oracle,oracle_se,abs_diff\n";
    for (const auto& r : rows)
      out << num(r.n) << "," << num(r.expansion) << "," << num(r.oracle) << "," << num(r.se) << "," << num(r.diff) << "\n";
    out << "\nquantity,max_order,remainder_tag,slope,residual,status\n";
    out << quantity << "," << num(max_order) << "," << (tag ? num(*tag) : std::string("none")) << ","
        << (fit.saturated ? std::string("none") : num(fit.slope)) << ","
        << (fit.saturated ? std::string("none") : num(fit.residual)) << "," << status << "\n";
  }
  return status == "mismatch" ? 1 : 0;
}

// typos / list-distributions -------------------------------------------------

int do_typos(const std::string& format, std::ostream& out) {
  check_format(format);
  if (format == "json") {
    Json j;
    j["schema"] = "paretail.typos/1";
    Json rows = Json::array();
    for (const auto& e : typo_ledger())
      rows.push_back({{"id", e.id}, {"location", e.location}, {"printed", e.printed}, {"derived", e.derived},
                      {"verifying_test", e.verifying_test}});
    j["entries"] = rows;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "id,location,printed,derived,verifying_test\n";
  for (const auto& e : typo_ledger())
    out << csv_field(e.id) << "," << csv_field(e.location) << "," << csv_field(e.printed) << ","
        << csv_field(e.derived) << "," << csv_field(e.verifying_test) << "\n";
  return 0;
}

int do_list(const std::string& format, std::ostream& out) {
  check_format(format);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (format == "json") {
    Json j;
    j["schema"] = "paretail.distributions/1";
    Json rows = Json::array();
    for (const auto& d : catalog_examples()) {
      auto c = d.capabilities();
      rows.push_back({{"spec", d.to_string()}, {"tail_index", d.tail_index()}, {"exact_quantile", c.exact_quantile},
                      {"numeric_quantile", c.numeric_quantile}, {"sampler", c.sampler}, {"cdf", c.cdf}});
    }
    j["distributions"] = rows;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "spec,tail_index,exact_quantile,numeric_quantile,sampler,cdf\n";
  for (const auto& d : catalog_examples()) {
    auto c = d.capabilities();
    out << csv_field(d.to_string()) << "," << num(d.tail_index()) << "," << yn(c.exact_quantile) << ","
        << yn(c.numeric_quantile) << "," << yn(c.sampler) << "," << yn(c.cdf) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tail expansions of quantiles and top order statistic moments", "paretail"};
  app.require_subcommand(1);

  InvertArgs inv;
  auto* c_inv = app.add_subcommand("invert", "quantile power series coefficients C_i");
  inv.src.add_options(c_inv);
  c_inv->add_option("--order", inv.order, "truncation order");
  c_inv->add_option("--theta", inv.theta, "power of the quantile");
  c_inv->add_option("--format", inv.format, "csv or json");

  MomentsArgs mom;
  auto* c_mom = app.add_subcommand("moments", "expansion of E prod X_{n,n-s_i}^theta_i");
  mom.src.add_options(c_mom);
  c_mom->add_option("--s", mom.s, "depths below the maximum, nonincreasing")->required();
  c_mom->add_option("--theta", mom.theta, "powers (default all 1)");
  c_mom->add_option("--imax", mom.imax, "e-series truncation (<= 7)");
  c_mom->add_option("--jmax", mom.jmax, "tail truncation");
  c_mom->add_option("--n", mom.n, "evaluate at this sample size");
  c_mom->add_option("--max-order", mom.max_order, "keep cells with i + ja <= this");
  c_mom->add_flag("--normalized", mom.normalized, "moments of X/(n c0)^{1/alpha}");
  c_mom->add_option("--format", mom.format, "csv or json");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "compare an expansion with an oracle over several n");
  c_ver->add_option("--dist", ver.dist, "distribution spec")->required();
  c_ver->add_option("--s", ver.s, "one depth (mean) or two (covariance)")->required();
  c_ver->add_option("--n", ver.n, "sample sizes");
  c_ver->add_option("--oracle", ver.oracle, "quad or mc");
  c_ver->add_option("--reps", ver.reps, "Monte Carlo replications");
  c_ver->add_option("--seed", ver.seed, "Monte Carlo seed (default $PARETAIL_SEED or 12345)");
  c_ver->add_option("--workers", ver.workers, "Monte Carlo threads");
  c_ver->add_option("--max-order", ver.max_order, "retained order (default max(1, a))");
  c_ver->add_option("--format", ver.format, "csv or json");

  std::string typo_format = "csv";
  auto* c_typ = app.add_subcommand("typos", "errata of the reference closed forms");
  c_typ->add_option("--format", typo_format, "csv or json");

  std::string list_format = "csv";
  auto* c_list = app.add_subcommand("list-distributions", "catalog with capability flags");
  c_list->add_option("--format", list_format, "csv or json");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (c_inv->parsed()) return do_invert(inv, out);
    if (c_mom->parsed()) return do_moments(mom, out);
    if (c_ver->parsed()) return do_verify(ver, out);
    if (c_typ->parsed()) return do_typos(typo_format, out);
    if (c_list->parsed()) return do_list(list_format, out);
  } catch (const InfiniteMomentError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

}  // namespace paretail::cli
