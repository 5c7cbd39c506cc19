#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "liegeo/heisenberg.hpp"
#include "liegeo/riemann.hpp"

namespace liegeo {

/// One curvature table row: the engine value r(i,j,k,.) is expected to equal
/// the transcribed coefficient vector.
struct RiemannFamilyEntry {
  std::string location;
  int i = 0;
  int j = 0;
  int k = 0;
  Vector expected;
};

/// Closed-form tables for the Heisenberg metric diag(sigma, ..., lambda) as
/// pure formulas in (n, sigma, lambda, xi). The two pole-u1 flag formulas are
/// transcribed verbatim and only trusted at sigma_1 = 1; elsewhere they are
/// compared informationally.
struct OracleTables {
  int n = 0;
  Eigen::VectorXd sigma;
  double lambda = 0.0;
  double xi = 0.0;

  Connection connection;                           // full table, zeros included
  std::vector<RiemannFamilyEntry> riemann_entries; // printed slices only
  Eigen::MatrixXd ricci;                           // printed families; mixed entries zero
  double scalar = 0.0;
  bool pole_u1_trusted = false;                    // sigma_1 == 1

  /// Pole z/sqrt(lambda), plane spanned by sum(a_i u_i + b_i v_i) and the pole:
  /// (lambda/4) * sum((a_i^2+b_i^2)/sigma_i) / sum((a_i^2+b_i^2) sigma_i).
  double flag_pole_z(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  /// Pole u_1, plane span{u_2, pole}: xi^2 lambda / (4 sigma_2). Needs n >= 2.
  double flag_pole_u1_span_u2() const;
  /// Pole u_1, plane span{z, pole}:
  /// lambda (1+xi^2)^2 / (4 sigma_1^2 (1 + xi^2 (1 - sigma_1^2))).
  double flag_pole_u1_span_z() const;
};

OracleTables oracle_tables(int n, const Eigen::VectorXd& sigma, double lambda,
                           double xi);

/// Engine-side computation bundle matching the oracle's table layout.
struct FlagSample {
  enum class Kind { PoleZ, PoleZXiIndependence, PoleU1SpanU2, PoleU1SpanZ };
  Kind kind = Kind::PoleZ;
  std::string location;
  Eigen::VectorXd a, b;    // PoleZ kinds only
  double value = 0.0;      // engine result
  double reference = 0.0;  // XiIndependence: engine result at the base xi
};

struct EngineReport {
  int n = 0;
  Eigen::VectorXd sigma;
  double lambda = 0.0;
  double xi = 0.0;

  Connection connection;
  RiemannTensor riemann;
  RicciTensor ricci;
  double scalar = 0.0;
  std::vector<FlagSample> flags;
};

EngineReport compute_engine_report(const HeisenbergMetric& hm, double xi);

struct DiscrepancyRecord {
  std::string location;
  double expected = 0.0;
  double actual = 0.0;
  double diff = 0.0;       // |actual-expected| / max(1, |expected|)
  bool informational = false;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRecord> records;
  long comparisons = 0;
  double max_diff = 0.0;                // over non-informational comparisons
  double max_informational_diff = 0.0;
  bool pass() const;
};

/// Per-entry comparison of an engine report against the transcribed tables.
/// Records every entry exceeding tol; pole-u1 entries at sigma_1 != 1 are
/// always recorded and never count as failures.
DiscrepancyReport compare(const EngineReport& engine,
                          const OracleTables& tables, double tol);

}  // namespace liegeo
