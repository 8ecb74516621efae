#include "netdopt/car.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netdopt/errors.hpp"

namespace netdopt {

namespace {

constexpr double kRhoMargin = 1e-4;  // search cap: rho in [0, 1 - margin]
constexpr double kLog2Pi = 1.8378770664093453;

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::domain_error("rho must lie in [0, 1)");
}

void check_lengths(const Network& net, const Design& x,
                   std::span<const double> y) {
  if (x.size() != net.node_count())
    throw std::invalid_argument("design length does not match node count");
  if (static_cast<int>(y.size()) != net.node_count())
    throw std::invalid_argument("response length does not match node count");
}

// Quadratic form v' (D - rho W) v, iterating edges only.
double precision_quadratic(const Network& net, double rho,
                           std::span<const double> v) {
  double diag = 0.0;
  for (int i = 0; i < net.node_count(); ++i)
    diag += net.degree(i) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
  double cross = 0.0;
  for (const auto& [u, w] : net.edges())
    cross += v[static_cast<size_t>(u)] * v[static_cast<size_t>(w)];
  return diag - 2.0 * rho * cross;
}

}  // namespace

void CarParams::validate() const {
  check_rho(rho);
  if (!(sigma2 > 0.0)) throw std::domain_error("sigma2 must be positive");
}

Eigen::MatrixXd precision_matrix(const Network& net, double rho) {
  check_rho(rho);
  const int n = net.node_count();
  Eigen::MatrixXd prec = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) prec(i, i) = net.degree(i);
  for (const auto& [u, v] : net.edges()) {
    prec(u, v) = -rho;
    prec(v, u) = -rho;
  }
  return prec;
}

CarSampler::CarSampler(const Network& net, double rho)
    : n_(net.node_count()), llt_(precision_matrix(net, rho)) {
  if (llt_.info() != Eigen::Success)
    throw std::runtime_error("precision matrix factorization failed");
  log_det_ = 0.0;
  const auto& factor = llt_.matrixLLT();
  for (int i = 0; i < n_; ++i) log_det_ += 2.0 * std::log(factor(i, i));
}

std::vector<double> CarSampler::draw(double sigma2, Rng& rng) const {
  if (!(sigma2 > 0.0)) throw std::domain_error("sigma2 must be positive");
  Eigen::VectorXd z(n_);
  for (int i = 0; i < n_; ++i) z(i) = rng.normal();
  // delta = sqrt(sigma2) * U^{-1} z with U the upper factor, so
  // Cov(delta) = sigma2 (U'U)^{-1} = sigma2 (D - rho W)^{-1}.
  Eigen::VectorXd delta =
      llt_.matrixU().solve((std::sqrt(sigma2) * z).eval());
  return {delta.data(), delta.data() + n_};
}

std::vector<double> sample_delta(const Network& net, double rho, double sigma2,
                                 std::uint64_t seed) {
  CarSampler sampler(net, rho);
  Rng rng(seed);
  return sampler.draw(sigma2, rng);
}

std::vector<double> simulate_responses(const Network& net, const Design& x,
                                       const CarParams& params,
                                       std::uint64_t seed, bool noiseless) {
  params.validate();
  if (x.size() != net.node_count())
    throw std::invalid_argument("design length does not match node count");
  std::vector<double> y(static_cast<size_t>(net.node_count()));
  if (noiseless) {
    for (int i = 0; i < net.node_count(); ++i)
      y[static_cast<size_t>(i)] = params.beta0 + x[i] * params.beta;
    return y;
  }
  std::vector<double> delta = sample_delta(net, params.rho, params.sigma2, seed);
  for (int i = 0; i < net.node_count(); ++i)
    y[static_cast<size_t>(i)] = params.beta0 + x[i] * params.beta +
                                delta[static_cast<size_t>(i)];
  return y;
}

Coefficients gls_fit(const Network& net, const Design& x,
                     std::span<const double> y, double rho) {
  check_rho(rho);
  check_lengths(net, x, y);
  const int n = net.node_count();
  const DesignSummaries s = design_summaries(net, x);
  const double one_minus = 1.0 - rho;
  const double sum_m = static_cast<double>(s.sum_m);

  // 2x2 normal equations in closed form; the precision never needs to be
  // materialized for the fit itself.
  const double a11 = one_minus * sum_m;
  const double a12 = one_minus * static_cast<double>(s.sum_mx);
  const double a22 = sum_m - rho * static_cast<double>(s.sum_wxx);

  double sum_my = 0.0, sum_mxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_my += net.degree(i) * y[static_cast<size_t>(i)];
    sum_mxy += net.degree(i) * x[i] * y[static_cast<size_t>(i)];
  }
  double cross = 0.0;  // sum over edges of x_i y_j + x_j y_i
  for (const auto& [u, v] : net.edges())
    cross += x[u] * y[static_cast<size_t>(v)] + x[v] * y[static_cast<size_t>(u)];
  const double b1 = one_minus * sum_my;
  const double b2 = sum_mxy - rho * cross;

  const double det = a11 * a22 - a12 * a12;
  if (!(det > 1e-10 * a11 * std::max(1.0, a22)))
    throw singular_error(
        "singular information matrix: design assigns one treatment level "
        "only (confounded with the intercept)");
  Coefficients coef;
  coef.beta0 = (a22 * b1 - a12 * b2) / det;
  coef.beta = (a11 * b2 - a12 * b1) / det;
  return coef;
}

Coefficients ols_fit(const Design& x, std::span<const double> y) {
  const int n = x.size();
  if (n < 2) throw std::invalid_argument("need at least two observations");
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("response length does not match design");
  long long sum_x = 0;
  double sum_y = 0.0, sum_xy = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_x += x[i];
    sum_y += y[static_cast<size_t>(i)];
    sum_xy += x[i] * y[static_cast<size_t>(i)];
  }
  const long long det = static_cast<long long>(n) * n - sum_x * sum_x;
  if (det == 0)
    throw singular_error(
        "singular information matrix: design assigns one treatment level only");
  Coefficients coef;
  coef.beta0 = (n * sum_y - static_cast<double>(sum_x) * sum_xy) /
               static_cast<double>(det);
  coef.beta = (n * sum_xy - static_cast<double>(sum_x) * sum_y) /
              static_cast<double>(det);
  return coef;
}

ProfilePoint profile_loglik(const Network& net, const Design& x,
                            std::span<const double> y, double rho) {
  check_lengths(net, x, y);
  const int n = net.node_count();
  ProfilePoint point;
  point.coef = gls_fit(net, x, y, rho);

  std::vector<double> resid(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    resid[static_cast<size_t>(i)] =
        y[static_cast<size_t>(i)] - point.coef.beta0 - point.coef.beta * x[i];
  const double rss = precision_quadratic(net, rho, resid);
  point.sigma2 = std::max(rss / n, 1e-300);

  CarSampler factor(net, rho);  // reuses the factorization for log|D - rho W|
  point.loglik = 0.5 * factor.log_det_precision() -
                 0.5 * n * (kLog2Pi + std::log(point.sigma2) + 1.0);
  return point;
}

FitResult profile_mle(const Network& net, const Design& x,
                      std::span<const double> y) {
  const double hi = 1.0 - kRhoMargin;
  constexpr int kGridPoints = 21;

  double best_rho = 0.0;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGridPoints; ++k) {
    const double rho = hi * k / (kGridPoints - 1);
    const double ll = profile_loglik(net, x, y, rho).loglik;
    if (ll > best_ll) {
      best_ll = ll;
      best_rho = rho;
    }
  }

  // Golden-section refinement inside the bracketing grid cells.
  const double step = hi / (kGridPoints - 1);
  double lo = std::max(0.0, best_rho - step);
  double up = std::min(hi, best_rho + step);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = up - kInvPhi * (up - lo);
  double x2 = lo + kInvPhi * (up - lo);
  double f1 = profile_loglik(net, x, y, x1).loglik;
  double f2 = profile_loglik(net, x, y, x2).loglik;
  while (up - lo > 1e-7) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (up - lo);
      f2 = profile_loglik(net, x, y, x2).loglik;
    } else {
      up = x2;
      x2 = x1;
      f2 = f1;
      x1 = up - kInvPhi * (up - lo);
      f1 = profile_loglik(net, x, y, x1).loglik;
    }
  }
  double rho_hat = 0.5 * (lo + up);
  ProfilePoint refined = profile_loglik(net, x, y, rho_hat);
  if (refined.loglik < best_ll) {  // keep the grid winner on a flat profile
    rho_hat = best_rho;
    refined = profile_loglik(net, x, y, rho_hat);
  }

  FitResult fit;
  fit.beta0_hat = refined.coef.beta0;
  fit.beta_hat = refined.coef.beta;
  fit.rho_hat = rho_hat;
  fit.sigma2_hat = refined.sigma2;
  fit.loglik = refined.loglik;
  return fit;
}

FitResult ols_fit_result(const Design& x, std::span<const double> y) {
  const Coefficients coef = ols_fit(x, y);
  const int n = x.size();
  double rss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[static_cast<size_t>(i)] - coef.beta0 - coef.beta * x[i];
    rss += r * r;
  }
  FitResult fit;
  fit.beta0_hat = coef.beta0;
  fit.beta_hat = coef.beta;
  fit.sigma2_hat = std::max(rss / n, 1e-300);
  fit.loglik = -0.5 * n * (kLog2Pi + std::log(fit.sigma2_hat) + 1.0);
  return fit;
}

double empirical_variance(std::span<const double> values) {
  const size_t count = values.size();
  if (count < 2) throw std::invalid_argument("need at least two estimates");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(count);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(count - 1);
}

}  // namespace netdopt
