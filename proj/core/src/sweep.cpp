#include "liegeo/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "liegeo/flag.hpp"
#include "liegeo/heisenberg.hpp"

namespace liegeo {

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt_sigma(const std::vector<double>& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += '|';
    out += fmt_double(sigma[i]);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw input_error("invalid " + what + ": '" + text + "'");
  }
}

void parse_random_suffix(const std::string& text, const char* kind, int& count,
                         std::uint64_t& seed,
                         std::optional<std::uint64_t> default_seed) {
  // text = "random:<count>:<seed>" or "random:<count>" with a default seed
  const auto p1 = text.find(':');
  if (p1 == std::string::npos) {
    throw input_error(std::string(kind) +
                      " spec 'random' requires a count: random:<count>:<seed>");
  }
  const auto p2 = text.find(':', p1 + 1);
  if (p2 == std::string::npos) {
    if (!default_seed) {
      throw input_error(std::string(kind) +
                        " spec 'random' requires an explicit seed: "
                        "random:<count>:<seed>");
    }
    count = static_cast<int>(parse_u64(text.substr(p1 + 1), "random count"));
    seed = *default_seed;
  } else {
    count = static_cast<int>(
        parse_u64(text.substr(p1 + 1, p2 - p1 - 1), "random count"));
    seed = parse_u64(text.substr(p2 + 1), "random seed");
  }
  if (count < 0) throw input_error("random count must be nonnegative");
}

std::vector<Vector> random_directions(int dim, int count, std::uint64_t seed) {
  // Seed is mixed with the dimension so sweeps over several n stay
  // reproducible independent of grid order.
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL *
                              static_cast<std::uint64_t>(dim + 1)));
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<Vector> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = nd(rng);
    const double n = v.norm();
    if (n > 0.0) v /= n;
    out.push_back(std::move(v));
  }
  return out;
}

json row_to_json(const SweepRow& r) {
  return json{{"n", r.n},          {"sigma", r.sigma},
              {"lambda", r.lambda}, {"xi", r.xi},
              {"pole", r.pole},     {"plane", r.plane},
              {"K", r.curvature},   {"sign", r.sign}};
}

}  // namespace

PoleSpec PoleSpec::parse(const std::string& text,
                         std::optional<std::uint64_t> default_seed) {
  PoleSpec out;
  if (text == "z") {
    out.kind = Kind::Z;
  } else if (text == "u1") {
    out.kind = Kind::U1;
  } else if (text.rfind("random", 0) == 0) {
    out.kind = Kind::Random;
    parse_random_suffix(text, "pole", out.count, out.seed, default_seed);
  } else {
    throw input_error("unknown pole spec '" + text + "'");
  }
  return out;
}

PlaneSpec PlaneSpec::parse(const std::string& text,
                           std::optional<std::uint64_t> default_seed) {
  PlaneSpec out;
  if (text == "basis") {
    out.kind = Kind::Basis;
  } else if (text.rfind("random", 0) == 0) {
    out.kind = Kind::Random;
    parse_random_suffix(text, "plane", out.count, out.seed, default_seed);
  } else {
    throw input_error("unknown plane spec '" + text + "'");
  }
  return out;
}

SweepSpec SweepSpec::from_json_text(const std::string& text,
                                    std::optional<std::uint64_t> default_seed) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("sweep spec is not valid JSON: ") + e.what());
  }
  SweepSpec spec;
  try {
    if (j.contains("n")) spec.n = j.at("n").get<std::vector<int>>();
    if (j.contains("sigma_grid")) {
      spec.sigma_grid =
          j.at("sigma_grid").get<std::vector<std::vector<double>>>();
    }
    if (j.contains("lambda"))
      spec.lambda = j.at("lambda").get<std::vector<double>>();
    if (j.contains("xi")) spec.xi = j.at("xi").get<std::vector<double>>();
    if (j.contains("poles")) {
      for (const auto& p : j.at("poles")) {
        spec.poles.push_back(
            PoleSpec::parse(p.get<std::string>(), default_seed));
      }
    }
    if (j.contains("planes")) {
      for (const auto& p : j.at("planes")) {
        spec.planes.push_back(
            PlaneSpec::parse(p.get<std::string>(), default_seed));
      }
    }
    if (j.contains("zero_tol")) spec.zero_tol = j.at("zero_tol").get<double>();
  } catch (const json::exception& e) {
    throw input_error(std::string("sweep spec field error: ") + e.what());
  }
  return spec;
}

SweepSpec SweepSpec::from_file(const std::string& path,
                               std::optional<std::uint64_t> default_seed) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open sweep spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), default_seed);
}

std::string SweepReport::to_csv() const {
  std::string out = "n,sigma,lambda,xi,pole,plane,K,sign\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += fmt_sigma(r.sigma);
    out += ',';
    out += fmt_double(r.lambda);
    out += ',';
    out += fmt_double(r.xi);
    out += ',';
    out += r.pole;
    out += ',';
    out += r.plane;
    out += ',';
    out += fmt_double(r.curvature);
    out += ',';
    out += std::to_string(r.sign);
    out += '\n';
  }
  return out;
}

std::string SweepReport::to_json() const {
  json rows_json = json::array();
  for (const auto& r : rows) rows_json.push_back(row_to_json(r));
  json j{{"rows", std::move(rows_json)},
         {"summary",
          {{"cells", rows.size()},
           {"positive", positive},
           {"negative", negative},
           {"zero", zero},
           {"negative_found", negative > 0},
           {"first_negative",
            first_negative ? row_to_json(*first_negative) : json()},
           {"min_curvature",
            min_curvature ? row_to_json(*min_curvature) : json()},
           {"max_curvature",
            max_curvature ? row_to_json(*max_curvature) : json()}}}};
  return j.dump(2) + "\n";
}

SweepReport flag_sign_sweep(const SweepSpec& spec) {
  SweepReport report;
  for (int n : spec.n) {
    if (n < 1) throw input_error("sweep: n must be >= 1");
    const int d = 2 * n + 1;

    std::vector<std::vector<double>> sigmas;
    for (const auto& s : spec.sigma_grid) {
      if (static_cast<int>(s.size()) == n) sigmas.push_back(s);
    }
    if (spec.sigma_grid.empty()) {
      sigmas.push_back(std::vector<double>(n, 1.0));
    }

    // Pole and plane vectors only depend on the dimension; resolve them once
    // per n so random draws are shared across the (sigma, lambda, xi) grid.
    std::vector<std::pair<std::string, Vector>> poles;
    for (const auto& ps : spec.poles) {
      switch (ps.kind) {
        case PoleSpec::Kind::Z:
          poles.emplace_back("z", basis_vector(d, z_index(n)));
          break;
        case PoleSpec::Kind::U1:
          poles.emplace_back("u1", basis_vector(d, u_index(0)));
          break;
        case PoleSpec::Kind::Random: {
          const auto vs = random_directions(d, ps.count, ps.seed);
          for (std::size_t c = 0; c < vs.size(); ++c) {
            poles.emplace_back("rand" + std::to_string(c), vs[c]);
          }
          break;
        }
      }
    }

    for (const auto& sigma_vec : sigmas) {
      const Eigen::VectorXd sigma =
          Eigen::Map<const Eigen::VectorXd>(sigma_vec.data(), n);
      for (double lambda : spec.lambda) {
        const HeisenbergMetric hm = heisenberg(n, sigma, lambda);
        for (double xi : spec.xi) {
          Vector q = basis_vector(d, z_index(n)) * (xi / std::sqrt(lambda));
          const RandersStructure rs(hm.metric, std::move(q));

          std::vector<std::pair<std::string, Vector>> planes;
          for (const auto& ps : spec.planes) {
            switch (ps.kind) {
              case PlaneSpec::Kind::Basis:
                for (int i = 0; i < d; ++i) {
                  planes.emplace_back(
                      hm.metric.algebra().basis_labels()[i],
                      basis_vector(d, i));
                }
                break;
              case PlaneSpec::Kind::Random: {
                const auto vs = random_directions(d, ps.count, ps.seed + 1);
                for (std::size_t c = 0; c < vs.size(); ++c) {
                  planes.emplace_back("prand" + std::to_string(c), vs[c]);
                }
                break;
              }
            }
          }

          for (const auto& [pole_label, pole] : poles) {
            for (const auto& [plane_label, x] : planes) {
              double curv = 0.0;
              try {
                curv = flag_curvature(rs, pole, x).curvature;
              } catch (const input_error&) {
                continue;  // degenerate flag, not a grid cell
              }
              SweepRow row;
              row.n = n;
              row.sigma = sigma_vec;
              row.lambda = lambda;
              row.xi = xi;
              row.pole = pole_label;
              row.plane = plane_label;
              row.curvature = curv;
              row.sign = curv > spec.zero_tol    ? 1
                         : curv < -spec.zero_tol ? -1
                                                 : 0;
              if (row.sign > 0) ++report.positive;
              if (row.sign < 0) {
                ++report.negative;
                if (!report.first_negative) report.first_negative = row;
              }
              if (row.sign == 0) ++report.zero;
              if (!report.min_curvature ||
                  curv < report.min_curvature->curvature) {
                report.min_curvature = row;
              }
              if (!report.max_curvature ||
                  curv > report.max_curvature->curvature) {
                report.max_curvature = row;
              }
              report.rows.push_back(std::move(row));
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace liegeo
