#pragma once

#include <Eigen/Dense>

#include "liegeo/metric_algebra.hpp"

namespace liegeo {

/// Basis index of u_i (0-based pair index i in [0, n)).
inline int u_index(int i) { return 2 * i; }
/// Basis index of v_i.
inline int v_index(int i) { return 2 * i + 1; }
/// Basis index of the central element z.
inline int z_index(int n) { return 2 * n; }

/// The 2n+1 dimensional Heisenberg algebra in the basis
/// (u_1, v_1, ..., u_n, v_n, z) with the nonzero brackets [u_i, v_i] = z and
/// the diagonal inner product diag(sigma_1, sigma_1, ..., sigma_n, sigma_n, lambda).
struct HeisenbergMetric {
  MetricAlgebra metric;
  int n;
  Eigen::VectorXd sigma;
  double lambda;
  /// sigma_1 >= ... >= sigma_n = 1; inputs violating the normalization are
  /// accepted and only flagged.
  bool normal_form;
};

HeisenbergMetric heisenberg(int n, const Eigen::VectorXd& sigma, double lambda);

}  // namespace liegeo
