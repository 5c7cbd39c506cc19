#pragma once

#include <Eigen/Dense>

#include "liegeo/randers.hpp"
#include "liegeo/riemann.hpp"

namespace liegeo {

struct FlagResult {
  Vector pole;
  Vector plane_x;
  double curvature = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  OsculatingMetric osculating;  // audit trail
};

/// Connection of the osculating metric at the pole: the Koszul solve of
/// levi_civita run against gram_y instead of the underlying gram.
Connection chern_rund_connection(const RandersStructure& rs,
                                 const Vector& pole);

/// Flag curvature of the plane span{x, pole} with the given pole:
/// g_Y(R(x,Y)Y, x) / (g_Y(Y,Y) g_Y(x,x) - g_Y(x,Y)^2) with Y the pole and R
/// the curvature of the osculating connection.
FlagResult flag_curvature(const RandersStructure& rs, const Vector& pole,
                          const Vector& x);

}  // namespace liegeo
