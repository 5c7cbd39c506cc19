#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <liegeo/config_io.hpp>
#include <liegeo/flag.hpp>
#include <liegeo/heisenberg.hpp>
#include <liegeo/oracle.hpp>
#include <liegeo/randers.hpp>
#include <liegeo/riemann.hpp>
#include <liegeo/sweep.hpp>

namespace {

using liegeo::input_error;
using liegeo::validation_error;
using liegeo::Vector;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDiscrepancy = 3;

std::vector<double> parse_reals(const std::string& text,
                                const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error(flag + ": cannot parse '" + tok + "' as a real");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct MetricOptions {
  int heisenberg_n = 0;
  std::string sigma;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  std::string file;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--heisenberg", heisenberg_n,
                   "Heisenberg group size parameter n (dimension 2n+1)");
    cmd.add_option("--sigma", sigma, "comma list of n positive reals");
    cmd.add_option("--lambda", lambda, "center inner product entry");
    cmd.add_option("--file", file, "metric algebra config file (JSON)");
  }
};

liegeo::LoadedMetric build_metric(const MetricOptions& mo) {
  const bool has_h = mo.heisenberg_n != 0;
  const bool has_f = !mo.file.empty();
  if (has_h == has_f) {
    throw input_error(
        "exactly one input source required: --heisenberg N --sigma ... "
        "--lambda X, or --file PATH");
  }
  if (has_f) return liegeo::load_metric_config(mo.file);

  if (mo.sigma.empty()) throw input_error("--sigma: required with --heisenberg");
  if (std::isnan(mo.lambda)) {
    throw input_error("--lambda: required with --heisenberg");
  }
  const std::vector<double> sig = parse_reals(mo.sigma, "--sigma");
  if (static_cast<int>(sig.size()) != mo.heisenberg_n) {
    throw input_error("--sigma: expected " + std::to_string(mo.heisenberg_n) +
                      " entries, got " + std::to_string(sig.size()));
  }
  const Eigen::VectorXd sigma =
      Eigen::Map<const Eigen::VectorXd>(sig.data(), sig.size());
  liegeo::HeisenbergMetric hm =
      liegeo::heisenberg(mo.heisenberg_n, sigma, mo.lambda);
  return liegeo::LoadedMetric{
      std::move(hm.metric),
      liegeo::HeisenbergParams{hm.n, hm.sigma, hm.lambda, hm.normal_form}};
}

void validate_algebra(const liegeo::LoadedMetric& lm) {
  const auto rep = lm.metric.algebra().validate();
  if (!rep.pass) {
    throw validation_error(
        "algebra failed validation (antisymmetry residual " +
        std::to_string(rep.antisymmetry_residual) + ", jacobi residual " +
        std::to_string(rep.jacobi_residual) + ")");
  }
}

struct QOptions {
  std::string q;
  double z_randers = std::numeric_limits<double>::quiet_NaN();

  void add_to(CLI::App& cmd) {
    cmd.add_option("--q", q, "deformation vector, comma list of dim reals");
    cmd.add_option("--z-randers", z_randers,
                   "deformation xi * e_last / |e_last| for xi in [0, 1)");
  }

  Vector build(const liegeo::MetricAlgebra& m) const {
    const bool has_q = !q.empty();
    const bool has_z = !std::isnan(z_randers);
    if (has_q == has_z) {
      throw input_error("exactly one of --q or --z-randers is required");
    }
    const int d = m.dim();
    if (has_z) {
      Vector e = liegeo::basis_vector(d, d - 1);
      return e * (z_randers / m.norm(e));
    }
    const std::vector<double> vals = parse_reals(q, "--q");
    if (static_cast<int>(vals.size()) != d) {
      throw input_error("--q: expected " + std::to_string(d) +
                        " entries, got " + std::to_string(vals.size()));
    }
    return Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
  }
};

Vector resolve_vector_arg(const std::string& text, const std::string& flag,
                          int dim) {
  if (text.empty()) throw input_error(flag + ": required");
  if (text == "z") return liegeo::basis_vector(dim, dim - 1);
  if (text == "u1") return liegeo::basis_vector(dim, 0);
  const std::vector<double> vals = parse_reals(text, flag);
  if (static_cast<int>(vals.size()) != dim) {
    throw input_error(flag + ": expected " + std::to_string(dim) +
                      " entries, got " + std::to_string(vals.size()));
  }
  return Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw input_error("cannot open output file '" + out_path + "'");
  out << content;
}

ordered_json vector_json(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json connection_json(const liegeo::Connection& c) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < c.dim(); ++i) {
    ordered_json mi = ordered_json::array();
    for (int j = 0; j < c.dim(); ++j) {
      ordered_json mj = ordered_json::array();
      for (int k = 0; k < c.dim(); ++k) mj.push_back(c.coeff(i, j, k));
      mi.push_back(std::move(mj));
    }
    out.push_back(std::move(mi));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct CurvatureCmd {
  MetricOptions metric;
  std::string format = "json";
  std::string out;
  double tol = liegeo::tol::predicate;

  int run() const {
    liegeo::LoadedMetric lm = build_metric(metric);
    validate_algebra(lm);
    const auto& m = lm.metric;
    const int d = m.dim();

    const liegeo::Connection conn = liegeo::levi_civita(m);
    const liegeo::RiemannTensor r = liegeo::riemann(m, conn);
    const liegeo::RicciTensor ric = liegeo::ricci(m, r);
    const double scalar = liegeo::scalar_curvature(m, ric);
    const auto einstein = liegeo::is_einstein(m, tol);
    const auto natred = liegeo::is_naturally_reductive(m, tol);

    ordered_json sparse = ordered_json::array();
    std::string csv = "i,j,k,l,value\n";
    char buf[64];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          for (int l = 0; l < d; ++l) {
            const double v = r.coeff(i, j, k, l);
            if (std::abs(v) <= liegeo::tol::sparse_cutoff) continue;
            sparse.push_back(ordered_json{
                {"i", i}, {"j", j}, {"k", k}, {"l", l}, {"value", v}});
            std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%.17g\n", i, j, k, l,
                          v);
            csv += buf;
          }
        }
      }
    }

    if (format == "csv") {
      emit(out, csv);
      return kExitOk;
    }

    ordered_json j{
        {"dim", d},
        {"connection", connection_json(conn)},
        {"riemann_nonzero", std::move(sparse)},
        {"ricci", matrix_json(ric.ric)},
        {"scalar", scalar},
        {"einstein",
         {{"value", einstein.value},
          {"constant", einstein.constant},
          {"residual", einstein.residual},
          {"witness", {einstein.witness_i, einstein.witness_j}}}},
        {"naturally_reductive",
         {{"value", natred.value},
          {"residual", natred.residual},
          {"witness", {natred.witness[0], natred.witness[1], natred.witness[2]}}}}};
    emit(out, j.dump(2) + "\n");
    return kExitOk;
  }
};

struct ClassifyCmd {
  MetricOptions metric;
  QOptions qopts;
  std::string out;
  double tol = liegeo::tol::predicate;

  int run() const {
    liegeo::LoadedMetric lm = build_metric(metric);
    validate_algebra(lm);
    const liegeo::RandersStructure rs(lm.metric, qopts.build(lm.metric));

    const auto berwald = liegeo::is_berwald(rs, tol);
    const auto douglas = liegeo::is_douglas(rs, tol);
    const auto vanishing = liegeo::has_vanishing_s_curvature(rs, tol);
    const auto go = liegeo::geodesic_orbit_possible(rs, tol);
    const auto ws = liegeo::weakly_symmetric_possible(rs, tol);
    const auto& labels = rs.metric().algebra().basis_labels();

    ordered_json j{
        {"q_norm", rs.q_norm()},
        {"riemannian_degenerate", rs.riemannian_degenerate()},
        {"berwald",
         {{"value", berwald.value},
          {"residual", berwald.residual},
          {"witness",
           {{"index", berwald.witness_index},
            {"label", labels[berwald.witness_index]}}}}},
        {"douglas",
         {{"value", douglas.value},
          {"residual", douglas.residual},
          {"witness",
           {{"pair", {douglas.witness[0], douglas.witness[1]}},
            {"labels",
             {labels[douglas.witness[0]], labels[douglas.witness[1]]}}}}}},
        {"vanishing_s",
         {{"value", vanishing.value},
          {"residual", vanishing.residual},
          {"witness",
           {{"pair", {vanishing.witness[0], vanishing.witness[1]}},
            {"labels",
             {labels[vanishing.witness[0]], labels[vanishing.witness[1]]}}}}}},
        {"geodesic_orbit_possible",
         {{"value", go.value},
          {"note", "necessary condition (vanishing S-curvature route)"}}},
        {"weakly_symmetric_possible",
         {{"value", ws.value},
          {"note", "necessary condition (geodesic-orbit route)"}}},
        {"z_randers", liegeo::is_z_randers(rs, tol)}};
    emit(out, j.dump(2) + "\n");
    return kExitOk;
  }
};

struct FlagCmd {
  MetricOptions metric;
  QOptions qopts;
  std::string pole;
  std::string x;
  std::string out;

  int run() const {
    liegeo::LoadedMetric lm = build_metric(metric);
    validate_algebra(lm);
    const liegeo::RandersStructure rs(lm.metric, qopts.build(lm.metric));
    const Vector pole_v = resolve_vector_arg(pole, "--pole", rs.dim());
    const Vector x_v = resolve_vector_arg(x, "--x", rs.dim());

    liegeo::FlagResult fr;
    try {
      fr = liegeo::flag_curvature(rs, pole_v, x_v);
    } catch (const input_error& e) {
      // Degenerate flags are domain failures at the CLI surface.
      throw validation_error(e.what());
    }

    ordered_json j{{"pole", vector_json(fr.pole)},
                   {"plane_x", vector_json(fr.plane_x)},
                   {"curvature", fr.curvature},
                   {"numerator", fr.numerator},
                   {"denominator", fr.denominator},
                   {"osculating",
                    {{"pole", vector_json(fr.osculating.pole)},
                     {"gram_y", matrix_json(fr.osculating.gram_y)}}}};
    emit(out, j.dump(2) + "\n");
    return kExitOk;
  }
};

struct SweepCmd {
  std::string spec_path;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;

  int run() const {
    liegeo::SweepSpec spec = liegeo::SweepSpec::from_file(
        spec_path, seed_set ? std::optional<std::uint64_t>(seed)
                            : std::nullopt);
    const liegeo::SweepReport report = liegeo::flag_sign_sweep(spec);
    emit(out, format == "json" ? report.to_json() : report.to_csv());
    return kExitOk;
  }
};

struct OracleCmd {
  int n = 0;
  std::string sigma;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double xi = 0.5;
  std::string out;

  int run() const {
    if (n == 0 || sigma.empty() || std::isnan(lambda)) {
      throw input_error("oracle requires --n, --sigma and --lambda");
    }
    const std::vector<double> sig = parse_reals(sigma, "--sigma");
    if (static_cast<int>(sig.size()) != n) {
      throw input_error("--sigma: expected " + std::to_string(n) + " entries");
    }
    const Eigen::VectorXd sv =
        Eigen::Map<const Eigen::VectorXd>(sig.data(), sig.size());
    const liegeo::OracleTables t = liegeo::oracle_tables(n, sv, lambda, xi);

    ordered_json families = ordered_json::array();
    for (const auto& e : t.riemann_entries) {
      families.push_back(ordered_json{{"location", e.location},
                                      {"i", e.i},
                                      {"j", e.j},
                                      {"k", e.k},
                                      {"value", vector_json(e.expected)}});
    }
    ordered_json j{
        {"params",
         {{"n", t.n},
          {"sigma", vector_json(t.sigma)},
          {"lambda", t.lambda},
          {"xi", t.xi}}},
        {"connection", connection_json(t.connection)},
        {"riemann_families", std::move(families)},
        {"ricci", matrix_json(t.ricci)},
        {"scalar", t.scalar},
        {"flag_pole_z_ones",
         t.flag_pole_z(Eigen::VectorXd::Ones(t.n), Eigen::VectorXd::Ones(t.n))}};
    if (t.n >= 2) {
      j["flag_pole_u1"] =
          ordered_json{{"span_u2", t.flag_pole_u1_span_u2()},
                       {"span_z", t.flag_pole_u1_span_z()},
                       {"trusted_only_at_sigma1_equal_1", !t.pole_u1_trusted}};
    }
    emit(out, j.dump(2) + "\n");
    return kExitOk;
  }
};

struct VerifyCmd {
  int n = 0;
  std::string sigma;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double xi = 0.5;
  double tol = liegeo::tol::predicate;
  std::string out;

  struct Point {
    int n;
    Eigen::VectorXd sigma;
    double lambda;
  };

  std::vector<Point> grid() const {
    std::vector<Point> pts;
    if (n != 0 || !sigma.empty() || !std::isnan(lambda)) {
      if (n == 0 || sigma.empty() || std::isnan(lambda)) {
        throw input_error(
            "verify point override requires all of --n, --sigma, --lambda");
      }
      const std::vector<double> sig = parse_reals(sigma, "--sigma");
      if (static_cast<int>(sig.size()) != n) {
        throw input_error("--sigma: expected " + std::to_string(n) +
                          " entries");
      }
      pts.push_back({n, Eigen::Map<const Eigen::VectorXd>(sig.data(),
                                                          sig.size()),
                     lambda});
      return pts;
    }
    // Default: every sigma combination from {1,2,4} for n in {1,2,3},
    // lambda in {0.5,1,3}.
    const double svals[] = {1.0, 2.0, 4.0};
    const double lvals[] = {0.5, 1.0, 3.0};
    for (int nn = 1; nn <= 3; ++nn) {
      const int combos = static_cast<int>(std::pow(3, nn));
      for (int c = 0; c < combos; ++c) {
        Eigen::VectorXd sv(nn);
        int rem = c;
        for (int i = 0; i < nn; ++i) {
          sv[i] = svals[rem % 3];
          rem /= 3;
        }
        for (double lv : lvals) pts.push_back({nn, sv, lv});
      }
    }
    return pts;
  }

  int run() const {
    const std::vector<Point> pts = grid();
    ordered_json failures = ordered_json::array();
    ordered_json informational = ordered_json::array();
    long comparisons = 0;
    double max_diff = 0.0, max_info = 0.0;
    for (const auto& p : pts) {
      const liegeo::HeisenbergMetric hm = liegeo::heisenberg(p.n, p.sigma, p.lambda);
      const liegeo::EngineReport er = liegeo::compute_engine_report(hm, xi);
      const liegeo::OracleTables ot =
          liegeo::oracle_tables(p.n, p.sigma, p.lambda, xi);
      const liegeo::DiscrepancyReport rep = liegeo::compare(er, ot, tol);
      comparisons += rep.comparisons;
      max_diff = std::max(max_diff, rep.max_diff);
      max_info = std::max(max_info, rep.max_informational_diff);
      for (const auto& rec : rep.records) {
        ordered_json r{{"point",
                        {{"n", p.n},
                         {"sigma", vector_json(p.sigma)},
                         {"lambda", p.lambda}}},
                       {"location", rec.location},
                       {"expected", rec.expected},
                       {"actual", rec.actual},
                       {"diff", rec.diff}};
        (rec.informational ? informational : failures).push_back(std::move(r));
      }
    }
    const bool pass = failures.empty();
    ordered_json j{{"tolerance", tol},
                   {"xi", xi},
                   {"grid_points", pts.size()},
                   {"comparisons", comparisons},
                   {"max_diff", max_diff},
                   {"max_informational_diff", max_info},
                   {"pass", pass},
                   {"failures", std::move(failures)},
                   {"informational", std::move(informational)}};
    emit(out, j.dump(2) + "\n");
    return pass ? kExitOk : kExitDiscrepancy;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "liegeo: left-invariant Riemannian and Randers geometry of Lie groups "
      "from structure constants"};
  app.require_subcommand(1);

  CurvatureCmd curvature;
  auto* c1 = app.add_subcommand(
      "curvature", "connection, curvature tower, Einstein and "
                   "naturally-reductive predicates");
  curvature.metric.add_to(*c1);
  c1->add_option("--format", curvature.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c1->add_option("--out", curvature.out, "output path (default stdout)");
  c1->add_option("--tol", curvature.tol, "predicate tolerance")
      ->check(CLI::PositiveNumber);

  ClassifyCmd classify;
  auto* c2 = app.add_subcommand(
      "classify", "Randers classification predicates for a deformation vector");
  classify.metric.add_to(*c2);
  classify.qopts.add_to(*c2);
  c2->add_option("--out", classify.out, "output path (default stdout)");
  c2->add_option("--tol", classify.tol, "predicate tolerance")
      ->check(CLI::PositiveNumber);

  FlagCmd flag;
  auto* c3 = app.add_subcommand("flag",
                                "flag curvature for a pole and plane vector");
  flag.metric.add_to(*c3);
  flag.qopts.add_to(*c3);
  c3->add_option("--pole", flag.pole, "pole vector: z, u1, or comma list");
  c3->add_option("--x", flag.x, "plane vector completing the flag");
  c3->add_option("--out", flag.out, "output path (default stdout)");

  SweepCmd sweep;
  auto* c4 = app.add_subcommand("sweep", "flag-curvature sign census over a "
                                         "parameter grid");
  c4->add_option("--spec", sweep.spec_path, "sweep spec file (JSON)")
      ->required();
  c4->add_option("--format", sweep.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  c4->add_option("--out", sweep.out, "output path (default stdout)");
  c4->add_option("--seed", sweep.seed,
                 "default seed for random pole/plane specs without one")
      ->each([&sweep](const std::string&) { sweep.seed_set = true; });

  OracleCmd oracle;
  auto* c5 = app.add_subcommand("oracle",
                                "closed-form Heisenberg tables as JSON");
  c5->add_option("--n", oracle.n, "pair count n");
  c5->add_option("--sigma", oracle.sigma, "comma list of n reals");
  c5->add_option("--lambda", oracle.lambda, "center entry");
  c5->add_option("--xi", oracle.xi, "Z-Randers deformation size in (0,1)");
  c5->add_option("--out", oracle.out, "output path (default stdout)");

  VerifyCmd verify;
  auto* c6 = app.add_subcommand(
      "verify", "engine vs closed-form tables over a parameter grid");
  c6->add_option("--n", verify.n, "single-point override: pair count");
  c6->add_option("--sigma", verify.sigma, "single-point override: sigma list");
  c6->add_option("--lambda", verify.lambda, "single-point override: lambda");
  c6->add_option("--xi", verify.xi, "Z-Randers deformation size");
  c6->add_option("--tol", verify.tol, "comparison tolerance")
      ->check(CLI::PositiveNumber);
  c6->add_option("--out", verify.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (c1->parsed()) return curvature.run();
    if (c2->parsed()) return classify.run();
    if (c3->parsed()) return flag.run();
    if (c4->parsed()) return sweep.run();
    if (c5->parsed()) return oracle.run();
    if (c6->parsed()) return verify.run();
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
