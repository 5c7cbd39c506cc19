#pragma once

#include <Eigen/Dense>
#include <array>

#include "liegeo/metric_algebra.hpp"

namespace liegeo {

/// Left-invariant Randers structure: F(y) = sqrt(<y,y>) + <q,y> for a
/// deformation vector q with <q,q> < 1. q = 0 is accepted as the degenerate
/// (purely Riemannian) case and flagged.
class RandersStructure {
 public:
  RandersStructure(MetricAlgebra metric, Vector q);

  const MetricAlgebra& metric() const { return metric_; }
  int dim() const { return metric_.dim(); }
  const Vector& q() const { return q_; }
  double q_norm() const { return q_norm_; }
  bool riemannian_degenerate() const { return q_norm_ == 0.0; }

  /// F(y); zero vector maps to zero, positive otherwise.
  double norm(const Vector& y) const;

 private:
  MetricAlgebra metric_;
  Vector q_;
  double q_norm_;
};

RandersStructure make_randers(MetricAlgebra m, Vector q);

/// The osculating inner product g_Y at a fixed pole Y != 0: the Hessian of
/// F^2/2 restricted to constant directions, in closed form.
struct OsculatingMetric {
  Vector pole;
  Eigen::MatrixXd gram_y;
};

OsculatingMetric fundamental_tensor(const RandersStructure& rs,
                                    const Vector& pole);

struct BerwaldResult {
  bool value = false;
  int witness_index = 0;   // frame direction of the worst violation
  double residual = 0.0;   // max |component of D_{e_i} q|
  bool degenerate = false; // q = 0
};
/// q parallel for the metric connection of the underlying gram.
BerwaldResult is_berwald(const RandersStructure& rs,
                         double tol = tol::predicate);

struct DouglasResult {
  bool value = false;
  std::array<int, 2> witness{0, 0};
  double residual = 0.0;   // max |<[e_i,e_j], q>| over i < j
};
/// q orthogonal to the derived algebra.
DouglasResult is_douglas(const RandersStructure& rs,
                         double tol = tol::predicate);

/// Advisory scalar: ((dim+1)/2) * (<[q,v], <v,q>q - v>/F(v) - <[q,v],q>).
/// The authoritative vanishing test is has_vanishing_s_curvature.
double s_curvature(const RandersStructure& rs, const Vector& v);

struct SkewSymmetryResult {
  bool value = false;
  std::array<int, 2> witness{0, 0};
  double residual = 0.0;   // max |<[q,x],y> + <x,[q,y]>| over basis pairs
};
/// S-curvature vanishes iff ad(q) is skew-symmetric for the inner product.
SkewSymmetryResult has_vanishing_s_curvature(const RandersStructure& rs,
                                             double tol = tol::predicate);

/// Necessary condition only (vanishing S-curvature route); passing does not
/// certify the geodesic-orbit property.
SkewSymmetryResult geodesic_orbit_possible(const RandersStructure& rs,
                                           double tol = tol::predicate);

/// Necessary condition only, delegating to geodesic_orbit_possible.
SkewSymmetryResult weakly_symmetric_possible(const RandersStructure& rs,
                                             double tol = tol::predicate);

/// q lies in the span of the last basis vector (the center for the Heisenberg
/// basis order).
bool is_z_randers(const RandersStructure& rs, double tol = tol::predicate);

}  // namespace liegeo
