#pragma once

#include <Eigen/Dense>

#include "liegeo/lie_algebra.hpp"

namespace liegeo {

/// Lie algebra equipped with a positive-definite inner product (gram matrix in
/// the fixed basis). The gram matrix is symmetrized on construction and its
/// Cholesky factorization is computed once and cached; instances are immutable.
class MetricAlgebra {
 public:
  MetricAlgebra(LieAlgebra algebra, Eigen::MatrixXd gram);

  const LieAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }
  const Eigen::MatrixXd& gram() const { return gram_; }

  double inner(const Vector& x, const Vector& y) const;
  double norm(const Vector& x) const;

  /// gram^{-1} * rhs via the cached factorization.
  Vector solve(const Vector& rhs) const;

  /// Columns form an orthonormal frame for the inner product (F^T G F = I).
  const Eigen::MatrixXd& orthonormal_frame() const { return frame_; }

 private:
  LieAlgebra algebra_;
  Eigen::MatrixXd gram_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::MatrixXd frame_;
};

}  // namespace liegeo
