#include "liegeo/oracle.hpp"

#include <cmath>
#include <string>

#include "liegeo/flag.hpp"
#include "liegeo/randers.hpp"

namespace liegeo {

namespace {

std::string idx(const char* sym, int i) {
  return std::string(sym) + std::to_string(i + 1);
}

void check_params(int n, const Eigen::VectorXd& sigma, double lambda,
                  double xi) {
  if (n < 1) throw input_error("oracle_tables: n must be >= 1");
  if (sigma.size() != n) {
    throw input_error("oracle_tables: sigma must have n entries");
  }
  for (int i = 0; i < n; ++i) {
    if (!(sigma[i] > 0.0)) {
      throw input_error("oracle_tables: sigma entries must be positive");
    }
  }
  if (!(lambda > 0.0)) {
    throw input_error("oracle_tables: lambda must be positive");
  }
  if (!(xi > 0.0 && xi < 1.0)) {
    throw input_error("oracle_tables: xi must lie in (0, 1)");
  }
}

double hybrid_diff(double actual, double expected) {
  return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace

double OracleTables::flag_pole_z(const Eigen::VectorXd& a,
                                 const Eigen::VectorXd& b) const {
  if (a.size() != n || b.size() != n) {
    throw input_error("flag_pole_z: coefficient vectors must have n entries");
  }
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = a[i] * a[i] + b[i] * b[i];
    num += c / sigma[i];
    den += c * sigma[i];
  }
  if (den == 0.0) {
    throw input_error("flag_pole_z: plane coefficients must not all vanish");
  }
  return 0.25 * lambda * num / den;
}

double OracleTables::flag_pole_u1_span_u2() const {
  if (n < 2) throw input_error("flag_pole_u1_span_u2: requires n >= 2");
  return xi * xi * lambda / (4.0 * sigma[1]);
}

double OracleTables::flag_pole_u1_span_z() const {
  const double s1 = sigma[0];
  const double x2 = xi * xi;
  return lambda * (1.0 + x2) * (1.0 + x2) /
         (4.0 * s1 * s1 * (1.0 + x2 * (1.0 - s1 * s1)));
}

OracleTables oracle_tables(int n, const Eigen::VectorXd& sigma, double lambda,
                           double xi) {
  check_params(n, sigma, lambda, xi);
  const int d = 2 * n + 1;
  const int z = z_index(n);

  OracleTables t;
  t.n = n;
  t.sigma = sigma;
  t.lambda = lambda;
  t.xi = xi;
  t.pole_u1_trusted = sigma[0] == 1.0;
  t.connection = Connection(d);
  t.ricci = Eigen::MatrixXd::Zero(d, d);

  // Connection table: the six families; every other entry vanishes.
  for (int i = 0; i < n; ++i) {
    const int u = u_index(i);
    const int v = v_index(i);
    const double c = lambda / (2.0 * sigma[i]);
    t.connection.coeff(u, v, z) = 0.5;
    t.connection.coeff(v, u, z) = -0.5;
    t.connection.coeff(u, z, v) = -c;
    t.connection.coeff(z, u, v) = -c;
    t.connection.coeff(v, z, u) = c;
    t.connection.coeff(z, v, u) = c;
  }

  // Curvature table: the eight printed slices, Kronecker deltas included.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const int ui = u_index(i), vi = v_index(i);
      const int uk = u_index(k), vk = v_index(k);
      Vector zero = Vector::Zero(d);

      t.riemann_entries.push_back({"R(" + idx("U", i) + "," + idx("U", k) +
                                       ")" + idx("U", k),
                                   ui, uk, uk, zero});
      t.riemann_entries.push_back({"R(" + idx("V", i) + "," + idx("V", k) +
                                       ")" + idx("V", k),
                                   vi, vk, vk, zero});

      Vector uv = Vector::Zero(d);
      if (i == k) uv[uk] = -3.0 * lambda / (4.0 * sigma[k]);
      t.riemann_entries.push_back({"R(" + idx("U", i) + "," + idx("V", k) +
                                       ")" + idx("V", k),
                                   ui, vk, vk, uv});

      Vector vu = Vector::Zero(d);
      if (i == k) vu[vk] = -3.0 * lambda / (4.0 * sigma[k]);
      t.riemann_entries.push_back({"R(" + idx("V", i) + "," + idx("U", k) +
                                       ")" + idx("U", k),
                                   vi, uk, uk, vu});
    }
    const int ui = u_index(i), vi = v_index(i);
    const double zz = lambda * lambda / (4.0 * sigma[i] * sigma[i]);

    Vector ru = Vector::Zero(d);
    ru[ui] = zz;
    t.riemann_entries.push_back(
        {"R(" + idx("U", i) + ",Z)Z", ui, z, z, ru});

    Vector rv = Vector::Zero(d);
    rv[vi] = zz;
    t.riemann_entries.push_back(
        {"R(" + idx("V", i) + ",Z)Z", vi, z, z, rv});

    const double zu = lambda / (4.0 * sigma[i]);
    Vector rzu = Vector::Zero(d);
    rzu[z] = zu;
    t.riemann_entries.push_back(
        {"R(Z," + idx("U", i) + ")" + idx("U", i), z, ui, ui, rzu});
    Vector rzv = Vector::Zero(d);
    rzv[z] = zu;
    t.riemann_entries.push_back(
        {"R(Z," + idx("V", i) + ")" + idx("V", i), z, vi, vi, rzv});
  }

  // Ricci table and scalar.
  double inv_sq_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = -lambda / (2.0 * sigma[i]);
    t.ricci(u_index(i), u_index(i)) = r;
    t.ricci(v_index(i), v_index(i)) = r;
    inv_sq_sum += 1.0 / (sigma[i] * sigma[i]);
  }
  t.ricci(z, z) = 0.5 * lambda * lambda * inv_sq_sum;
  t.scalar = -0.5 * lambda * inv_sq_sum;

  return t;
}

EngineReport compute_engine_report(const HeisenbergMetric& hm, double xi) {
  const int n = hm.n;
  const int d = 2 * n + 1;
  const int z = z_index(n);

  EngineReport rep;
  rep.n = n;
  rep.sigma = hm.sigma;
  rep.lambda = hm.lambda;
  rep.xi = xi;
  rep.connection = levi_civita(hm.metric);
  rep.riemann = riemann(hm.metric, rep.connection);
  rep.ricci = ricci(hm.metric, rep.riemann);
  rep.scalar = scalar_curvature(hm.metric, rep.ricci);

  const Vector zvec = basis_vector(d, z);
  const RandersStructure rs(hm.metric, zvec * (xi / std::sqrt(hm.lambda)));
  const RandersStructure rs_half(hm.metric,
                                 zvec * (0.5 * xi / std::sqrt(hm.lambda)));

  // Two deterministic plane samples for the pole-z closed form.
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> samples;
  samples.emplace_back(Eigen::VectorXd::Ones(n), Eigen::VectorXd::Ones(n));
  Eigen::VectorXd a2(n), b2(n);
  for (int i = 0; i < n; ++i) {
    a2[i] = 1.0 + i;
    b2[i] = n - i;
  }
  samples.emplace_back(a2, b2);

  for (const auto& [a, b] : samples) {
    Vector x = Vector::Zero(d);
    for (int i = 0; i < n; ++i) {
      x[u_index(i)] = a[i];
      x[v_index(i)] = b[i];
    }
    FlagSample fs;
    fs.kind = FlagSample::Kind::PoleZ;
    fs.location = "flag pole z, plane sum(a_i u_i + b_i v_i), a=" +
                  std::to_string(static_cast<int>(a[0])) + "...";
    fs.a = a;
    fs.b = b;
    fs.value = flag_curvature(rs, zvec, x).curvature;
    rep.flags.push_back(fs);

    FlagSample fi;
    fi.kind = FlagSample::Kind::PoleZXiIndependence;
    fi.location = "flag pole z xi-independence (xi vs xi/2)";
    fi.a = a;
    fi.b = b;
    fi.reference = fs.value;
    fi.value = flag_curvature(rs_half, zvec, x).curvature;
    rep.flags.push_back(fi);
  }

  if (n >= 2) {
    const Vector u1 = basis_vector(d, u_index(0));
    FlagSample fu;
    fu.kind = FlagSample::Kind::PoleU1SpanU2;
    fu.location = "flag pole u1, plane span{u2, pole}";
    fu.value = flag_curvature(rs, u1, basis_vector(d, u_index(1))).curvature;
    rep.flags.push_back(fu);

    FlagSample fz;
    fz.kind = FlagSample::Kind::PoleU1SpanZ;
    fz.location = "flag pole u1, plane span{z, pole}";
    fz.value = flag_curvature(rs, u1, zvec).curvature;
    rep.flags.push_back(fz);
  }

  return rep;
}

bool DiscrepancyReport::pass() const {
  for (const auto& r : records) {
    if (!r.informational) return false;
  }
  return true;
}

DiscrepancyReport compare(const EngineReport& engine,
                          const OracleTables& tables, double tol) {
  if (engine.n != tables.n || engine.lambda != tables.lambda ||
      engine.xi != tables.xi || engine.sigma.size() != tables.sigma.size() ||
      (engine.sigma - tables.sigma).cwiseAbs().maxCoeff() != 0.0) {
    throw input_error("compare: engine report and oracle parameters differ");
  }
  const int n = tables.n;
  const int d = 2 * n + 1;

  DiscrepancyReport rep;
  auto record = [&](const std::string& location, double expected,
                    double actual, bool informational) {
    const double diff = hybrid_diff(actual, expected);
    ++rep.comparisons;
    if (informational) {
      rep.max_informational_diff = std::max(rep.max_informational_diff, diff);
      rep.records.push_back({location, expected, actual, diff, true});
      return;
    }
    rep.max_diff = std::max(rep.max_diff, diff);
    if (diff > tol) {
      rep.records.push_back({location, expected, actual, diff, false});
    }
  };

  auto basis_label = [&](int i) {
    if (i == z_index(n)) return std::string("Z");
    const int pair = i / 2;
    return (i % 2 == 0 ? "U" : "V") + std::to_string(pair + 1);
  };

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const double e = tables.connection.coeff(i, j, k);
        const double a = engine.connection.coeff(i, j, k);
        if (e == 0.0 && a == 0.0) {
          ++rep.comparisons;
          continue;
        }
        record("connection D_" + basis_label(i) + " " + basis_label(j) +
                   " . " + basis_label(k),
               e, a, false);
      }
    }
  }

  for (const auto& entry : tables.riemann_entries) {
    for (int l = 0; l < d; ++l) {
      const double e = entry.expected[l];
      const double a = engine.riemann.coeff(entry.i, entry.j, entry.k, l);
      if (e == 0.0 && a == 0.0) {
        ++rep.comparisons;
        continue;
      }
      record(entry.location + " . " + basis_label(l), e, a, false);
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      record("Ric(" + idx("U", i) + "," + idx("U", j) + ")",
             tables.ricci(u_index(i), u_index(j)),
             engine.ricci.ric(u_index(i), u_index(j)), false);
      record("Ric(" + idx("V", i) + "," + idx("V", j) + ")",
             tables.ricci(v_index(i), v_index(j)),
             engine.ricci.ric(v_index(i), v_index(j)), false);
    }
  }
  record("Ric(Z,Z)", tables.ricci(z_index(n), z_index(n)),
         engine.ricci.ric(z_index(n), z_index(n)), false);

  record("scalar", tables.scalar, engine.scalar, false);

  for (const auto& fs : engine.flags) {
    switch (fs.kind) {
      case FlagSample::Kind::PoleZ:
        record(fs.location, tables.flag_pole_z(fs.a, fs.b), fs.value, false);
        break;
      case FlagSample::Kind::PoleZXiIndependence:
        record(fs.location, fs.reference, fs.value, false);
        break;
      case FlagSample::Kind::PoleU1SpanU2:
        record(fs.location, tables.flag_pole_u1_span_u2(), fs.value,
               !tables.pole_u1_trusted);
        break;
      case FlagSample::Kind::PoleU1SpanZ:
        record(fs.location, tables.flag_pole_u1_span_z(), fs.value,
               !tables.pole_u1_trusted);
        break;
    }
  }

  return rep;
}

}  // namespace liegeo
