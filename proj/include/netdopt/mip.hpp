#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netdopt/optimizer.hpp"

namespace netdopt {

/// Linearization of a quadratic +-1 objective over binaries v_i = (x_i+1)/2:
/// each retained product v_i v_j gets a continuous u_ij >= 0 with
///   u_ij <= v_i,  u_ij <= v_j,  u_ij >= v_i + v_j - 1,
/// which pins u_ij = v_i v_j at any integral optimum. The objective is
///   sum u_coef_ij u_ij + sum linear_i v_i,
/// related to the quadratic by quadratic = scale * mip + shift.
class LinearizedMip {
 public:
  struct UVar {
    int i = 0;
    int j = 0;  // i < j
    double coef = 0;
  };
  struct Balance {
    std::vector<int> weights;
    double lo = 0;  // lo <= sum w_i v_i <= hi
    double hi = 0;
  };

  LinearizedMip(int n, std::vector<UVar> u_terms, std::vector<double> linear,
                std::optional<Balance> balance, double scale, double shift);

  int binary_count() const { return n_; }
  int u_count() const { return static_cast<int>(u_terms_.size()); }
  // Three rows per u variable plus the two optional balance rows.
  int constraint_count() const;

  const std::vector<UVar>& u_terms() const { return u_terms_; }
  const std::vector<double>& linear() const { return linear_; }
  const std::optional<Balance>& balance() const { return balance_; }
  double scale() const { return scale_; }
  double shift() const { return shift_; }

  bool feasible(const std::vector<int>& v) const;
  // Objective at an integral v with every u at its forced value v_i v_j.
  double value_at(const std::vector<int>& v) const;
  std::vector<double> forced_u(const std::vector<int>& v) const;

  // CPLEX-LP style text: objective, constraints, bounds, binary section.
  std::string to_lp() const;

 private:
  int n_;
  std::vector<UVar> u_terms_;
  std::vector<double> linear_;
  std::optional<Balance> balance_;
  double scale_;
  double shift_;
};

LinearizedMip build_linearized_mip(
    const QuadObjective& obj,
    const std::optional<BalanceConstraint>& balance = {});

}  // namespace netdopt
