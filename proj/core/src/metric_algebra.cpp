#include "liegeo/metric_algebra.hpp"

#include <cmath>
#include <string>

namespace liegeo {

MetricAlgebra::MetricAlgebra(LieAlgebra algebra, Eigen::MatrixXd gram)
    : algebra_(std::move(algebra)) {
  const int d = algebra_.dim();
  if (gram.rows() != d || gram.cols() != d) {
    throw input_error("MetricAlgebra: gram must be " + std::to_string(d) +
                      "x" + std::to_string(d));
  }
  gram_ = 0.5 * (gram + gram.transpose());
  llt_.compute(gram_);
  if (llt_.info() != Eigen::Success) {
    throw validation_error("MetricAlgebra: gram is not positive definite");
  }
  // Leading principal minors as running products of squared Cholesky pivots.
  double minor = 1.0;
  const Eigen::MatrixXd L = llt_.matrixL();
  for (int k = 0; k < d; ++k) {
    minor *= L(k, k) * L(k, k);
    if (!(minor > tol::positive_definite)) {
      throw validation_error(
          "MetricAlgebra: gram is not positive definite (leading minor " +
          std::to_string(k + 1) + " below threshold)");
    }
  }
  frame_ = L.transpose()
               .triangularView<Eigen::Upper>()
               .solve(Eigen::MatrixXd::Identity(d, d));
}

double MetricAlgebra::inner(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw input_error("inner: vector dimension mismatch");
  }
  return x.dot(gram_ * y);
}

double MetricAlgebra::norm(const Vector& x) const {
  return std::sqrt(inner(x, x));
}

Vector MetricAlgebra::solve(const Vector& rhs) const {
  return llt_.solve(rhs);
}

}  // namespace liegeo
