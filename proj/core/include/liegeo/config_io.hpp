#pragma once

#include <optional>
#include <string>

#include "liegeo/metric_algebra.hpp"

namespace liegeo {

struct HeisenbergParams {
  int n = 0;
  Eigen::VectorXd sigma;
  double lambda = 0.0;
  bool normal_form = false;
};

struct LoadedMetric {
  MetricAlgebra metric;
  std::optional<HeisenbergParams> heisenberg;  // set when the shorthand was used
};

/// Parses a metric algebra config:
///   {"dim": d, "brackets": [{"i":.., "j":.., "k":.., "value":..}, ...],
///    "gram": [d*d row-major reals]}
/// or the shorthand
///   {"gram": {"heisenberg": {"n":.., "sigma":[..], "lambda":..}}}.
/// Indices are 0-based and bracket entries require i < j. Malformed input
/// throws input_error naming the offending field.
LoadedMetric parse_metric_config(const std::string& json_text);

LoadedMetric load_metric_config(const std::string& path);

}  // namespace liegeo
