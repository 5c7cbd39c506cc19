#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "liegeo/errors.hpp"
#include "liegeo/tolerances.hpp"

namespace liegeo {

using Vector = Eigen::VectorXd;

/// Coordinate vector for the k-th basis element of a dim-dimensional algebra.
Vector basis_vector(int dim, int k);

/// One bracket relation [e_i, e_j] += value * e_k, given for i < j only; the
/// antisymmetric reflection is derived.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
};

struct ValidationReport {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  bool pass = false;
};

/// A linear subspace given by an orthonormal spanning set (matrix columns).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Eigen::MatrixXd orthonormal_basis);

  int dim() const { return static_cast<int>(basis_.cols()); }
  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  const Eigen::MatrixXd& basis() const { return basis_; }

  /// Distance from v to its orthogonal projection is below tol * |v|.
  bool contains(const Vector& v, double tol = tol::subspace_rank) const;
  bool same_span(const Subspace& other, double tol = tol::subspace_rank) const;

 private:
  Eigen::MatrixXd basis_;
};

/// Finite-dimensional real Lie algebra presented by structure constants in a
/// fixed basis: [e_i, e_j] = sum_k c(i,j,k) e_k. Antisymmetry in (i,j) holds
/// exactly because only i < j entries are accepted and reflected.
class LieAlgebra {
 public:
  LieAlgebra(int dim, const std::vector<BracketEntry>& brackets,
             std::vector<std::string> basis_labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  double structure_constant(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// [x, y] for coordinate vectors; bilinear and antisymmetric.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// [e_i, e_j] as a coordinate vector.
  Vector bracket_basis(int i, int j) const;

  /// Antisymmetry and Jacobi residuals; pass iff both below tol::jacobi.
  ValidationReport validate() const;

  /// {x : [x, y] = 0 for all y}, as the null space of the stacked adjoint maps.
  Subspace center() const;
  /// Span of all basis bracket values [e_i, e_j].
  Subspace derived_algebra() const;

 private:
  int dim_;
  std::vector<double> c_;
  std::vector<std::string> labels_;
};

}  // namespace liegeo
