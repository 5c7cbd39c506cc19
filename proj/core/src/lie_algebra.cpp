#include "liegeo/lie_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace liegeo {

Vector basis_vector(int dim, int k) {
  if (dim <= 0 || k < 0 || k >= dim) {
    throw input_error("basis_vector: index " + std::to_string(k) +
                      " out of range for dimension " + std::to_string(dim));
  }
  Vector e = Vector::Zero(dim);
  e[k] = 1.0;
  return e;
}

Subspace::Subspace(Eigen::MatrixXd orthonormal_basis)
    : basis_(std::move(orthonormal_basis)) {}

bool Subspace::contains(const Vector& v, double tol) const {
  if (v.size() != basis_.rows()) {
    throw input_error("Subspace::contains: dimension mismatch");
  }
  const double vn = v.norm();
  if (vn == 0.0) return true;
  Vector residual = v - basis_ * (basis_.transpose() * v);
  return residual.norm() <= tol * vn;
}

bool Subspace::same_span(const Subspace& other, double tol) const {
  if (dim() != other.dim() || ambient_dim() != other.ambient_dim()) {
    return false;
  }
  for (int c = 0; c < other.dim(); ++c) {
    if (!contains(other.basis().col(c), tol)) return false;
  }
  return true;
}

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketEntry>& brackets,
                       std::vector<std::string> basis_labels)
    : dim_(dim), labels_(std::move(basis_labels)) {
  if (dim <= 0) {
    throw input_error("LieAlgebra: dimension must be positive");
  }
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  for (const auto& e : brackets) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 ||
        e.k >= dim) {
      throw input_error("LieAlgebra: bracket entry index out of range");
    }
    if (e.i >= e.j) {
      throw input_error("LieAlgebra: bracket entries require i < j");
    }
    c_[(static_cast<std::size_t>(e.i) * dim_ + e.j) * dim_ + e.k] += e.value;
    c_[(static_cast<std::size_t>(e.j) * dim_ + e.i) * dim_ + e.k] -= e.value;
  }
  if (labels_.empty()) {
    labels_.reserve(dim);
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != dim) {
    throw input_error("LieAlgebra: basis_labels size must equal dim");
  }
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw input_error("bracket: vector dimension mismatch");
  }
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      const double xy = x[i] * y[j];
      if (xy == 0.0) continue;
      for (int k = 0; k < dim_; ++k) {
        out[k] += xy * structure_constant(i, j, k);
      }
    }
  }
  return out;
}

Vector LieAlgebra::bracket_basis(int i, int j) const {
  Vector out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = structure_constant(i, j, k);
  return out;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport rep;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        rep.antisymmetry_residual =
            std::max(rep.antisymmetry_residual,
                     std::abs(structure_constant(i, j, k) +
                              structure_constant(j, i, k)));
      }
    }
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        for (int l = 0; l < dim_; ++l) {
          double sum = 0.0;
          for (int m = 0; m < dim_; ++m) {
            sum += structure_constant(i, j, m) * structure_constant(m, k, l) +
                   structure_constant(j, k, m) * structure_constant(m, i, l) +
                   structure_constant(k, i, m) * structure_constant(m, j, l);
          }
          rep.jacobi_residual = std::max(rep.jacobi_residual, std::abs(sum));
        }
      }
    }
  }
  rep.pass = rep.antisymmetry_residual < tol::jacobi &&
             rep.jacobi_residual < tol::jacobi;
  return rep;
}

Subspace LieAlgebra::center() const {
  // x is central iff ad(e_j)(x) = 0 for every j; stack the maps
  // x -> [x, e_j] and take the null space.
  Eigen::MatrixXd stacked(dim_ * dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int k = 0; k < dim_; ++k) {
      for (int i = 0; i < dim_; ++i) {
        stacked(j * dim_ + k, i) = structure_constant(i, j, k);
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  if (smax == 0.0) {
    return Subspace(Eigen::MatrixXd::Identity(dim_, dim_));
  }
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol::subspace_rank * smax) ++rank;
  }
  return Subspace(svd.matrixV().rightCols(dim_ - rank));
}

Subspace LieAlgebra::derived_algebra() const {
  const int pairs = dim_ * (dim_ - 1) / 2;
  if (pairs == 0) return Subspace(Eigen::MatrixXd(dim_, 0));
  Eigen::MatrixXd spans(dim_, pairs);
  int col = 0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      spans.col(col++) = bracket_basis(i, j);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(spans, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  if (smax == 0.0) return Subspace(Eigen::MatrixXd(dim_, 0));
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol::subspace_rank * smax) ++rank;
  }
  return Subspace(svd.matrixU().leftCols(rank));
}

}  // namespace liegeo
