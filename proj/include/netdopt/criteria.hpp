#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdopt/graph.hpp"

namespace netdopt {

/// Two-level treatment allocation: one entry in {-1, +1} per node.
class Design {
 public:
  Design() = default;
  explicit Design(std::vector<int> x);  // validates entries

  int size() const { return static_cast<int>(x_.size()); }
  int operator[](int i) const { return x_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return x_; }

  Design negated() const;
  // Global sign flip so that the first entry is +1.
  Design canonical() const;

  bool operator==(const Design& other) const = default;

 private:
  std::vector<int> x_;
};

struct EfficiencyReport {
  double d_value = 0;
  double upper_bound = 0;
  double efficiency = 0;
  double beta_variance_over_sigma2 = 0;  // +inf for singular designs
  double rho_used = 0;
};

// Scalar summaries shared by the criterion formulas.
struct DesignSummaries {
  long long sum_m = 0;    // sum_i m_i
  long long sum_m2 = 0;   // sum_i m_i^2
  long long sum_mx = 0;   // sum_i m_i x_i
  long long sum_wxx = 0;  // sum_{i!=j} w_ij x_i x_j (each edge twice)
};
DesignSummaries design_summaries(const Network& net, const Design& x);

// Determinant of the 2x2 information matrix, in closed form:
//   (1-rho) sum_m (sum_m - rho sum_wxx) - (1-rho)^2 (sum_mx)^2.
double d_value(const Network& net, const Design& x, double rho);

// sigma^2 (1-rho) sum_m / d_value; throws singular_error when d_value is 0.
double beta_variance(const Network& net, const Design& x, double rho,
                     double sigma2);

// Criterion ceiling (1-rho)(1+rho)(sum_m)^2, attained only by ideal splits.
double d_upper_bound(const Network& net, double rho);

// d_value / d_upper_bound, in [0, 1].
double d_efficiency(const Network& net, const Design& x, double rho);

// Scale a = rho/(1-rho) * sum_m of the equivalent minimization objective.
double prop1_coefficient(const Network& net, double rho);

// a * sum_wxx + (sum_mx)^2; minimized exactly where d_value is maximized.
double prop1_objective(const Network& net, const Design& x, double rho);

// Mean d_efficiency of a uniform random allocation, in closed form.
double expected_random_efficiency(const Network& net, double rho);

// Independent uniform +-1 assignment per node; deterministic per seed.
Design random_design(int n, std::uint64_t seed);

EfficiencyReport evaluate_design(const Network& net, const Design& x,
                                 double rho, double sigma2 = 1.0);

std::string efficiency_report_json(const EfficiencyReport& report);

}  // namespace netdopt
