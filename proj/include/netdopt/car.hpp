#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netdopt/criteria.hpp"
#include "netdopt/graph.hpp"
#include "netdopt/rng.hpp"

namespace netdopt {

/// Outcome-model parameters: y_i = beta0 + x_i beta + delta_i with the
/// noise field defined node-wise by
///   delta_i | delta_{-i} ~ N(rho * sum_{j~i} delta_j / m_i, sigma2 / m_i),
/// jointly MVN(0, sigma2 (D - rho W)^{-1}).
struct CarParams {
  double beta0 = 0.0;
  double beta = 2.0;
  double rho = 0.2;
  double sigma2 = 1.0;

  void validate() const;  // requires 0 <= rho < 1 and sigma2 > 0
};

struct Coefficients {
  double beta0 = 0.0;
  double beta = 0.0;
};

struct FitResult {
  double beta0_hat = 0.0;
  double beta_hat = 0.0;
  std::optional<double> rho_hat;  // absent for plain least squares
  double sigma2_hat = 0.0;
  double loglik = 0.0;
};

// Joint precision D - rho W (divided by sigma2 to get the true precision).
// Symmetric positive definite for every rho in [0, 1).
Eigen::MatrixXd precision_matrix(const Network& net, double rho);

/// Exact sampler for the noise field: factors the precision once and draws
/// by solving the transposed triangular factor against i.i.d. normals.
class CarSampler {
 public:
  CarSampler(const Network& net, double rho);

  std::vector<double> draw(double sigma2, Rng& rng) const;
  double log_det_precision() const { return log_det_; }

 private:
  int n_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double log_det_;
};

std::vector<double> sample_delta(const Network& net, double rho, double sigma2,
                                 std::uint64_t seed);

// y_i = beta0 + x_i beta + delta_i. The noiseless flag replaces delta with
// zero (sigma2 = 0 itself is rejected by CarParams::validate).
std::vector<double> simulate_responses(const Network& net, const Design& x,
                                       const CarParams& params,
                                       std::uint64_t seed,
                                       bool noiseless = false);

// Generalized least squares with working precision D - rho W:
//   (X' (D - rho W) X)^{-1} X' (D - rho W) y, X rows (1, x_i).
// Throws singular_error when the design is confounded with the intercept.
Coefficients gls_fit(const Network& net, const Design& x,
                     std::span<const double> y, double rho);

// Ordinary least squares on (1, x_i); the rho = 0, D = I special case.
Coefficients ols_fit(const Design& x, std::span<const double> y);

struct ProfilePoint {
  Coefficients coef;
  double sigma2 = 0.0;
  double loglik = 0.0;
};

// Log-likelihood profiled at a fixed rho: beta from gls_fit, sigma2 as the
// mean precision-weighted squared residual (maximum-likelihood divisor n).
ProfilePoint profile_loglik(const Network& net, const Design& x,
                            std::span<const double> y, double rho);

// Maximum likelihood over (beta0, beta, rho, sigma2): coarse grid over
// rho in [0, 1 - 1e-4], then golden-section refinement.
FitResult profile_mle(const Network& net, const Design& x,
                      std::span<const double> y);

FitResult ols_fit_result(const Design& x, std::span<const double> y);

// Unbiased sample variance (divisor L - 1); requires at least two values.
double empirical_variance(std::span<const double> values);

}  // namespace netdopt
