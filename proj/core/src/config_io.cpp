#include "liegeo/config_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "liegeo/heisenberg.hpp"

namespace liegeo {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field,
                              const std::string& what) {
  throw input_error("config field '" + field + "': " + what);
}

LoadedMetric from_heisenberg_shorthand(const json& root, const json& h) {
  if (root.contains("brackets")) {
    field_error("brackets", "not allowed together with the heisenberg shorthand");
  }
  if (!h.is_object()) field_error("gram.heisenberg", "must be an object");
  if (!h.contains("n") || !h.at("n").is_number_integer()) {
    field_error("gram.heisenberg.n", "required integer");
  }
  const int n = h.at("n").get<int>();
  if (!h.contains("sigma") || !h.at("sigma").is_array()) {
    field_error("gram.heisenberg.sigma", "required array of reals");
  }
  std::vector<double> sig;
  try {
    sig = h.at("sigma").get<std::vector<double>>();
  } catch (const json::exception&) {
    field_error("gram.heisenberg.sigma", "must contain numbers");
  }
  if (!h.contains("lambda") || !h.at("lambda").is_number()) {
    field_error("gram.heisenberg.lambda", "required real");
  }
  const double lambda = h.at("lambda").get<double>();
  if (root.contains("dim")) {
    if (!root.at("dim").is_number_integer()) field_error("dim", "must be an integer");
    if (root.at("dim").get<int>() != 2 * n + 1) {
      field_error("dim", "inconsistent with heisenberg shorthand (expected " +
                             std::to_string(2 * n + 1) + ")");
    }
  }
  const Eigen::VectorXd sigma =
      Eigen::Map<const Eigen::VectorXd>(sig.data(), sig.size());
  HeisenbergMetric hm = heisenberg(n, sigma, lambda);
  return LoadedMetric{std::move(hm.metric),
                      HeisenbergParams{n, sigma, lambda, hm.normal_form}};
}

}  // namespace

LoadedMetric parse_metric_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw input_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw input_error("config must be a JSON object");
  if (!root.contains("gram")) field_error("gram", "required");
  const json& gram = root.at("gram");

  if (gram.is_object() && gram.contains("heisenberg")) {
    return from_heisenberg_shorthand(root, gram.at("heisenberg"));
  }

  if (!root.contains("dim") || !root.at("dim").is_number_integer()) {
    field_error("dim", "required integer");
  }
  const int dim = root.at("dim").get<int>();
  if (dim <= 0) field_error("dim", "must be positive");

  std::vector<BracketEntry> brackets;
  if (root.contains("brackets")) {
    if (!root.at("brackets").is_array()) {
      field_error("brackets", "must be an array of {i, j, k, value}");
    }
    for (const auto& e : root.at("brackets")) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
          !e.contains("k") || !e.contains("value")) {
        field_error("brackets", "entries need keys i, j, k, value");
      }
      try {
        brackets.push_back({e.at("i").get<int>(), e.at("j").get<int>(),
                            e.at("k").get<int>(), e.at("value").get<double>()});
      } catch (const json::exception&) {
        field_error("brackets", "entry fields have wrong types");
      }
    }
  }

  if (!gram.is_array()) {
    field_error("gram", "must be a row-major array of dim*dim reals or a "
                        "heisenberg shorthand object");
  }
  std::vector<double> flat;
  try {
    flat = gram.get<std::vector<double>>();
  } catch (const json::exception&) {
    field_error("gram", "must contain numbers");
  }
  if (static_cast<int>(flat.size()) != dim * dim) {
    field_error("gram", "expected " + std::to_string(dim * dim) +
                            " entries, got " + std::to_string(flat.size()));
  }
  Eigen::MatrixXd G(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) G(i, j) = flat[i * dim + j];
  }

  return LoadedMetric{MetricAlgebra(LieAlgebra(dim, brackets), std::move(G)),
                      std::nullopt};
}

LoadedMetric load_metric_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_metric_config(ss.str());
}

}  // namespace liegeo
