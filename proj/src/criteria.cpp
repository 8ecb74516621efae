#include "netdopt/criteria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netdopt/errors.hpp"
#include "netdopt/rng.hpp"

namespace netdopt {

namespace {

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::domain_error("rho must lie in [0, 1)");
}

void check_sizes(const Network& net, const Design& x) {
  if (x.size() != net.node_count())
    throw std::invalid_argument("design length does not match node count");
}

}  // namespace

Design::Design(std::vector<int> x) : x_(std::move(x)) {
  for (int v : x_) {
    if (v != 1 && v != -1)
      throw std::invalid_argument("design entries must be -1 or +1");
  }
}

Design Design::negated() const {
  std::vector<int> flipped(x_.size());
  for (size_t i = 0; i < x_.size(); ++i) flipped[i] = -x_[i];
  return Design(std::move(flipped));
}

Design Design::canonical() const {
  if (!x_.empty() && x_[0] == -1) return negated();
  return *this;
}

DesignSummaries design_summaries(const Network& net, const Design& x) {
  check_sizes(net, x);
  DesignSummaries s;
  s.sum_m = net.degree_sum();
  s.sum_m2 = net.degree_square_sum();
  for (int i = 0; i < net.node_count(); ++i)
    s.sum_mx += static_cast<long long>(net.degree(i)) * x[i];
  for (const auto& [u, v] : net.edges()) s.sum_wxx += 2LL * x[u] * x[v];
  return s;
}

double d_value(const Network& net, const Design& x, double rho) {
  check_rho(rho);
  const DesignSummaries s = design_summaries(net, x);
  const double one_minus = 1.0 - rho;
  const double sum_m = static_cast<double>(s.sum_m);
  return one_minus * sum_m * (sum_m - rho * static_cast<double>(s.sum_wxx)) -
         one_minus * one_minus * static_cast<double>(s.sum_mx) *
             static_cast<double>(s.sum_mx);
}

double beta_variance(const Network& net, const Design& x, double rho,
                     double sigma2) {
  if (!(sigma2 > 0.0)) throw std::domain_error("sigma2 must be positive");
  const double d = d_value(net, x, rho);
  const double scale = sigma2 * (1.0 - rho) * static_cast<double>(net.degree_sum());
  if (d <= 1e-12 * scale)
    throw singular_error("design is confounded with the intercept (d_value = 0)");
  return scale / d;
}

double d_upper_bound(const Network& net, double rho) {
  check_rho(rho);
  const double sum_m = static_cast<double>(net.degree_sum());
  // sum_{i,j} w_ij equals sum_m, so the bound collapses to
  // (1-rho)(1+rho)(sum_m)^2.
  return (1.0 - rho) * sum_m * sum_m + (1.0 - rho) * rho * sum_m * sum_m;
}

double d_efficiency(const Network& net, const Design& x, double rho) {
  return d_value(net, x, rho) / d_upper_bound(net, rho);
}

double prop1_coefficient(const Network& net, double rho) {
  check_rho(rho);
  return rho / (1.0 - rho) * static_cast<double>(net.degree_sum());
}

double prop1_objective(const Network& net, const Design& x, double rho) {
  const double a = prop1_coefficient(net, rho);
  const DesignSummaries s = design_summaries(net, x);
  return a * static_cast<double>(s.sum_wxx) +
         static_cast<double>(s.sum_mx) * static_cast<double>(s.sum_mx);
}

double expected_random_efficiency(const Network& net, double rho) {
  check_rho(rho);
  const double sum_m = static_cast<double>(net.degree_sum());
  const double sum_m2 = static_cast<double>(net.degree_square_sum());
  const double one_minus = 1.0 - rho;
  const double numerator =
      one_minus * sum_m * sum_m - one_minus * one_minus * sum_m2;
  return numerator / d_upper_bound(net, rho);
}

Design random_design(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  Rng rng(seed);
  std::vector<int> x(static_cast<size_t>(n));
  for (auto& v : x) v = rng.sign();
  return Design(std::move(x));
}

EfficiencyReport evaluate_design(const Network& net, const Design& x,
                                 double rho, double sigma2) {
  EfficiencyReport rep;
  rep.rho_used = rho;
  rep.d_value = d_value(net, x, rho);
  rep.upper_bound = d_upper_bound(net, rho);
  rep.efficiency = rep.d_value / rep.upper_bound;
  if (rep.d_value > 0)
    rep.beta_variance_over_sigma2 = beta_variance(net, x, rho, sigma2) / sigma2;
  else
    rep.beta_variance_over_sigma2 = std::numeric_limits<double>::infinity();
  return rep;
}

std::string efficiency_report_json(const EfficiencyReport& report) {
  nlohmann::json doc;
  doc["rho"] = report.rho_used;
  doc["d_value"] = report.d_value;
  doc["upper_bound"] = report.upper_bound;
  doc["efficiency"] = report.efficiency;
  if (std::isfinite(report.beta_variance_over_sigma2))
    doc["beta_variance_over_sigma2"] = report.beta_variance_over_sigma2;
  else
    doc["beta_variance_over_sigma2"] = "inf";
  return doc.dump(2);
}

}  // namespace netdopt
