#include "liegeo/flag.hpp"

namespace liegeo {

Connection chern_rund_connection(const RandersStructure& rs,
                                 const Vector& pole) {
  const OsculatingMetric osc = fundamental_tensor(rs, pole);
  return koszul_connection(rs.metric().algebra(), osc.gram_y);
}

FlagResult flag_curvature(const RandersStructure& rs, const Vector& pole,
                          const Vector& x) {
  if (x.size() != rs.dim()) {
    throw input_error("flag_curvature: plane vector dimension mismatch");
  }
  OsculatingMetric osc = fundamental_tensor(rs, pole);
  const Eigen::MatrixXd& g = osc.gram_y;

  const double ww = pole.dot(g * pole);
  const double xx = x.dot(g * x);
  const double xw = x.dot(g * pole);
  const double den = ww * xx - xw * xw;
  if (!(den > tol::plane_independence)) {
    throw input_error(
        "flag_curvature: plane vector and pole are linearly dependent");
  }

  const Connection conn = koszul_connection(rs.metric().algebra(), g);
  const RiemannTensor curv = curvature_tensor(rs.metric().algebra(), conn);
  const Vector rxww = curv.apply(x, pole, pole);
  const double num = rxww.dot(g * x);

  FlagResult out;
  out.pole = pole;
  out.plane_x = x;
  out.numerator = num;
  out.denominator = den;
  out.curvature = num / den;
  out.osculating = std::move(osc);
  return out;
}

}  // namespace liegeo
