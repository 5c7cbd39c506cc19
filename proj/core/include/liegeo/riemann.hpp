#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "liegeo/metric_algebra.hpp"

namespace liegeo {

/// Connection coefficients in the fixed frame: coeff(i,j,k) is the e_k
/// component of the derivative of e_j along e_i. The frame is invariant, so
/// the derivative extends bilinearly to constant coordinate vectors.
class Connection {
 public:
  Connection() = default;
  explicit Connection(int dim);

  int dim() const { return dim_; }
  double coeff(int i, int j, int k) const {
    return gamma_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  double& coeff(int i, int j, int k) {
    return gamma_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// Derivative of the constant field y along e_i.
  Vector covariant(int i, const Vector& y) const;
  /// Derivative of y along x, both constant coordinate vectors.
  Vector covariant(const Vector& x, const Vector& y) const;

 private:
  int dim_ = 0;
  std::vector<double> gamma_;
};

/// Curvature coefficients: coeff(i,j,k,l) is the e_l component of
/// R(e_i,e_j)e_k where R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z.
class RiemannTensor {
 public:
  RiemannTensor() = default;
  explicit RiemannTensor(int dim);

  int dim() const { return dim_; }
  double coeff(int i, int j, int k, int l) const {
    return r_[((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }
  double& coeff(int i, int j, int k, int l) {
    return r_[((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }

  /// R(x,y)z by multilinear extension.
  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;

 private:
  int dim_ = 0;
  std::vector<double> r_;
};

struct RicciTensor {
  Eigen::MatrixXd ric;
};

/// Metric connection of m from the Koszul formula: for each (i,j) the
/// coefficients solve gram * x = rhs with
/// rhs_k = ([e_i,e_j]·e_k - [e_j,e_k]·e_i + [e_k,e_i]·e_j) / 2.
Connection levi_civita(const MetricAlgebra& m);

/// Koszul solve against an arbitrary inner product on the same algebra.
/// Used for connections of osculating metrics; levi_civita(m) equals
/// koszul_connection(m.algebra(), m.gram()).
Connection koszul_connection(const LieAlgebra& a, const Eigen::MatrixXd& gram);

/// Curvature of a constant-coefficient connection in the invariant frame.
RiemannTensor curvature_tensor(const LieAlgebra& a, const Connection& c);

RiemannTensor riemann(const MetricAlgebra& m, const Connection& c);

/// Ric(X,Y) = sum_a <R(X,f_a)f_a, Y> over an orthonormal frame {f_a}.
RicciTensor ricci(const MetricAlgebra& m, const RiemannTensor& r);

/// Trace of Ric against the inverse gram matrix.
double scalar_curvature(const MetricAlgebra& m, const RicciTensor& ric);

/// <R(x,y)y, x> / (<x,x><y,y> - <x,y>^2); requires x, y independent.
double sectional(const MetricAlgebra& m, const RiemannTensor& r,
                 const Vector& x, const Vector& y);

struct EinsteinResult {
  bool value = false;
  double constant = 0.0;   // least-squares c in Ric = c * gram
  double residual = 0.0;   // max |Ric - c*gram| entry
  int witness_i = 0;
  int witness_j = 0;
};
EinsteinResult is_einstein(const MetricAlgebra& m, double tol = tol::predicate);

struct NaturallyReductiveResult {
  bool value = false;
  double residual = 0.0;   // max |<[x,y],z> + <y,[x,z]>| over basis triples
  std::array<int, 3> witness{0, 0, 0};
};
NaturallyReductiveResult is_naturally_reductive(const MetricAlgebra& m,
                                                double tol = tol::predicate);

}  // namespace liegeo
