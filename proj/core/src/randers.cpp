#include "liegeo/randers.hpp"

#include <cmath>

#include "liegeo/riemann.hpp"

namespace liegeo {

RandersStructure::RandersStructure(MetricAlgebra metric, Vector q)
    : metric_(std::move(metric)), q_(std::move(q)) {
  if (q_.size() != metric_.dim()) {
    throw input_error("RandersStructure: q dimension mismatch");
  }
  q_norm_ = metric_.norm(q_);
  if (!(q_norm_ < 1.0)) {
    throw validation_error(
        "RandersStructure: deformation vector norm must be < 1 (strong "
        "convexity)");
  }
}

double RandersStructure::norm(const Vector& y) const {
  return std::sqrt(metric_.inner(y, y)) + metric_.inner(q_, y);
}

RandersStructure make_randers(MetricAlgebra m, Vector q) {
  return RandersStructure(std::move(m), std::move(q));
}

OsculatingMetric fundamental_tensor(const RandersStructure& rs,
                                    const Vector& pole) {
  if (pole.size() != rs.dim()) {
    throw input_error("fundamental_tensor: pole dimension mismatch");
  }
  if (pole.isZero(0.0)) {
    throw input_error("fundamental_tensor: pole must be nonzero");
  }
  const auto& m = rs.metric();
  const Eigen::MatrixXd& G = m.gram();
  const double alpha = std::sqrt(m.inner(pole, pole));
  const double F = rs.norm(pole);
  const Vector w = G * pole;       // <pole, .>
  const Vector b = G * rs.q();     // <q, .>
  const Vector u = w / alpha + b;
  Eigen::MatrixXd gram_y = (F / alpha) * (G - (w * w.transpose()) / (alpha * alpha));
  gram_y += u * u.transpose();
  return OsculatingMetric{pole, std::move(gram_y)};
}

BerwaldResult is_berwald(const RandersStructure& rs, double tol) {
  const Connection conn = levi_civita(rs.metric());
  BerwaldResult out;
  out.degenerate = rs.riemannian_degenerate();
  const int d = rs.dim();
  for (int i = 0; i < d; ++i) {
    const double res = conn.covariant(i, rs.q()).cwiseAbs().maxCoeff();
    if (res > out.residual) {
      out.residual = res;
      out.witness_index = i;
    }
  }
  out.value = out.residual < tol;
  return out;
}

DouglasResult is_douglas(const RandersStructure& rs, double tol) {
  const auto& m = rs.metric();
  const auto& a = m.algebra();
  const int d = rs.dim();
  DouglasResult out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double res = std::abs(m.inner(a.bracket_basis(i, j), rs.q()));
      if (res > out.residual) {
        out.residual = res;
        out.witness = {i, j};
      }
    }
  }
  out.value = out.residual < tol;
  return out;
}

double s_curvature(const RandersStructure& rs, const Vector& v) {
  if (v.size() != rs.dim()) {
    throw input_error("s_curvature: dimension mismatch");
  }
  if (v.isZero(0.0)) throw input_error("s_curvature: v must be nonzero");
  const auto& m = rs.metric();
  const Vector bv = m.algebra().bracket(rs.q(), v);
  const double vq = m.inner(v, rs.q());
  const double t1 = m.inner(bv, vq * rs.q() - v) / rs.norm(v);
  const double t2 = m.inner(bv, rs.q());
  return 0.5 * (rs.dim() + 1) * (t1 - t2);
}

SkewSymmetryResult has_vanishing_s_curvature(const RandersStructure& rs,
                                             double tol) {
  const auto& m = rs.metric();
  const auto& a = m.algebra();
  const int d = rs.dim();
  SkewSymmetryResult out;
  for (int i = 0; i < d; ++i) {
    const Vector qi = a.bracket(rs.q(), basis_vector(d, i));
    for (int j = 0; j < d; ++j) {
      const double res =
          std::abs(m.inner(qi, basis_vector(d, j)) +
                   m.inner(basis_vector(d, i),
                           a.bracket(rs.q(), basis_vector(d, j))));
      if (res > out.residual) {
        out.residual = res;
        out.witness = {i, j};
      }
    }
  }
  out.value = out.residual < tol;
  return out;
}

SkewSymmetryResult geodesic_orbit_possible(const RandersStructure& rs,
                                           double tol) {
  return has_vanishing_s_curvature(rs, tol);
}

SkewSymmetryResult weakly_symmetric_possible(const RandersStructure& rs,
                                             double tol) {
  return geodesic_orbit_possible(rs, tol);
}

bool is_z_randers(const RandersStructure& rs, double tol) {
  const int d = rs.dim();
  for (int i = 0; i + 1 < d; ++i) {
    if (std::abs(rs.q()[i]) > tol) return false;
  }
  return true;
}

}  // namespace liegeo
