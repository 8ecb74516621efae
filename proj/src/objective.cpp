#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netdopt/errors.hpp"
#include "netdopt/optimizer.hpp"

namespace netdopt {

double QuadObjective::value(const Design& x) const {
  if (x.size() != n)
    throw std::invalid_argument("design length does not match objective");
  double total = constant;
  for (const auto& term : pairs) total += term.q * x[term.i] * x[term.j];
  return total;
}

long long BalanceConstraint::weighted_sum(const Design& x) const {
  if (x.size() != static_cast<int>(weights.size()))
    throw std::invalid_argument("design length does not match constraint");
  long long total = 0;
  for (size_t i = 0; i < weights.size(); ++i)
    total += static_cast<long long>(weights[i]) * x[static_cast<int>(i)];
  return total;
}

bool BalanceConstraint::satisfied(const Design& x) const {
  return std::llabs(weighted_sum(x)) <= bound;
}

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::brute: return "brute";
    case SolveMethod::branch_bound: return "branch_bound";
    case SolveMethod::local_search: return "local_search";
  }
  return "unknown";
}

std::optional<SolveMethod> parse_solve_method(std::string_view name) {
  if (name == "brute") return SolveMethod::brute;
  if (name == "branch_bound" || name == "bb") return SolveMethod::branch_bound;
  if (name == "local_search" || name == "local") return SolveMethod::local_search;
  return std::nullopt;
}

QuadObjective build_original_qubo(const Network& net, double rho) {
  const double a = prop1_coefficient(net, rho);
  const int n = net.node_count();

  QuadObjective obj;
  obj.n = n;
  obj.a_value = a;
  obj.constant = static_cast<double>(net.degree_square_sum());
  obj.pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double b = (net.has_edge(i, j) ? a : 0.0) +
                       static_cast<double>(net.degree(i)) * net.degree(j);
      if (b != 0.0) obj.pairs.push_back({i, j, 2.0 * b});
    }
  }

  SeparableForm form;
  form.edge_coef = 2.0 * a;
  form.edges = net.edges();
  form.square_weights = net.degrees();
  obj.separable = std::move(form);
  return obj;
}

QuadObjective build_modified_objective(const Network& net) {
  QuadObjective obj;
  obj.n = net.node_count();
  obj.a_value = 0.0;
  obj.constant = 0.0;
  obj.pairs.reserve(net.edges().size());
  for (const auto& [u, v] : net.edges()) obj.pairs.push_back({u, v, 2.0});

  SeparableForm form;
  form.edge_coef = 2.0;
  form.edges = net.edges();
  obj.separable = std::move(form);
  return obj;
}

double normal_quantile(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");

  // Rational approximation (Acklam), then one Newton step against the
  // erf-based CDF brings the absolute error well under 1e-9.
  static const double A[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double B[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double C[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double D[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;

  double x;
  if (alpha < p_low) {
    const double q = std::sqrt(-2.0 * std::log(alpha));
    x = (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  } else if (alpha <= 1.0 - p_low) {
    const double q = alpha - 0.5;
    const double r = q * q;
    x = (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) *
        q /
        (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - alpha));
    x = -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  }

  const double cdf = 0.5 * std::erfc(-x / M_SQRT2);
  const double err = cdf - alpha;
  const double u = err * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double calibrate_balance_bound(const Network& net, double alpha) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (0.5, 1)");
  return normal_quantile(alpha) *
         std::sqrt(static_cast<double>(net.degree_square_sum()));
}

BalanceConstraint make_balance_constraint(const Network& net, double alpha) {
  return BalanceConstraint{net.degrees(), calibrate_balance_bound(net, alpha)};
}

namespace {

SolveReport dispatch(const QuadObjective& obj,
                     const std::optional<BalanceConstraint>& balance,
                     SolveMethod method, const SolveOptions& opts) {
  switch (method) {
    case SolveMethod::brute:
      return solve_brute(obj, balance, opts);
    case SolveMethod::branch_bound:
      return solve_branch_bound(obj, balance, opts);
    case SolveMethod::local_search:
      return solve_local_search(obj, balance, opts.restarts, opts.seed);
  }
  throw std::invalid_argument("unknown solve method");
}

}  // namespace

SolveReport solve_modified(const Network& net, double alpha, SolveMethod method,
                           const SolveOptions& opts) {
  const QuadObjective obj = build_modified_objective(net);
  const BalanceConstraint balance = make_balance_constraint(net, alpha);
  return dispatch(obj, balance, method, opts);
}

SolveReport solve_original(const Network& net, double rho, SolveMethod method,
                           const SolveOptions& opts) {
  return dispatch(build_original_qubo(net, rho), std::nullopt, method, opts);
}

std::string solve_report_json(const SolveReport& report) {
  nlohmann::json doc;
  doc["design"] = report.design.values();
  doc["objective"] = report.objective;
  doc["lower_bound"] = report.lower_bound;
  doc["upper_bound_val"] = report.upper_bound_val;
  doc["gap"] = report.gap;
  doc["method"] = to_string(report.method);
  doc["seed"] = report.seed;
  doc["elapsed_seconds"] = report.elapsed_seconds;
  doc["nodes_explored"] = report.nodes_explored;
  doc["restarts"] = report.restarts;
  doc["proven_optimal"] = report.proven_optimal;
  doc["budget_exceeded"] = report.budget_exceeded;
  return doc.dump(2);
}

}  // namespace netdopt
