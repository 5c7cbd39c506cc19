#include "liegeo/heisenberg.hpp"

#include <string>
#include <vector>

namespace liegeo {

HeisenbergMetric heisenberg(int n, const Eigen::VectorXd& sigma,
                            double lambda) {
  if (n < 1) throw input_error("heisenberg: n must be >= 1");
  if (sigma.size() != n) {
    throw input_error("heisenberg: sigma must have n entries");
  }
  for (int i = 0; i < n; ++i) {
    if (!(sigma[i] > 0.0)) {
      throw input_error("heisenberg: sigma entries must be positive");
    }
  }
  if (!(lambda > 0.0)) throw input_error("heisenberg: lambda must be positive");

  const int d = 2 * n + 1;
  std::vector<BracketEntry> brackets;
  brackets.reserve(n);
  for (int i = 0; i < n; ++i) {
    brackets.push_back({u_index(i), v_index(i), z_index(n), 1.0});
  }
  std::vector<std::string> labels;
  labels.reserve(d);
  for (int i = 0; i < n; ++i) {
    labels.push_back("u" + std::to_string(i + 1));
    labels.push_back("v" + std::to_string(i + 1));
  }
  labels.push_back("z");

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    gram(u_index(i), u_index(i)) = sigma[i];
    gram(v_index(i), v_index(i)) = sigma[i];
  }
  gram(z_index(n), z_index(n)) = lambda;

  bool normal = sigma[n - 1] == 1.0;
  for (int i = 0; i + 1 < n && normal; ++i) {
    if (sigma[i] < sigma[i + 1]) normal = false;
  }

  return HeisenbergMetric{
      MetricAlgebra(LieAlgebra(d, brackets, std::move(labels)), std::move(gram)),
      n, sigma, lambda, normal};
}

}  // namespace liegeo
