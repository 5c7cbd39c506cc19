#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/errors.hpp"

namespace liegeo {

struct PoleSpec {
  enum class Kind { Z, U1, Random };
  Kind kind = Kind::Z;
  int count = 0;       // Random only
  std::uint64_t seed = 0;

  /// Accepts "z", "u1", "random:<count>:<seed>". The seed suffix may be
  /// omitted only when a default seed is supplied.
  static PoleSpec parse(const std::string& text,
                        std::optional<std::uint64_t> default_seed = {});
};

struct PlaneSpec {
  enum class Kind { Basis, Random };
  Kind kind = Kind::Basis;
  int count = 0;
  std::uint64_t seed = 0;

  /// Accepts "basis", "random:<count>:<seed>".
  static PlaneSpec parse(const std::string& text,
                         std::optional<std::uint64_t> default_seed = {});
};

/// Grid description for a sign census over Z-Randers metrics on Heisenberg
/// groups. sigma vectors whose length does not match the current n are
/// skipped; an empty sigma grid means all-ones.
struct SweepSpec {
  std::vector<int> n;
  std::vector<std::vector<double>> sigma_grid;
  std::vector<double> lambda;
  std::vector<double> xi;
  std::vector<PoleSpec> poles;
  std::vector<PlaneSpec> planes;
  double zero_tol = 1e-12;

  static SweepSpec from_json_text(const std::string& text,
                                  std::optional<std::uint64_t> default_seed = {});
  static SweepSpec from_file(const std::string& path,
                             std::optional<std::uint64_t> default_seed = {});
};

struct SweepRow {
  int n = 0;
  std::vector<double> sigma;
  double lambda = 0.0;
  double xi = 0.0;
  std::string pole;
  std::string plane;
  double curvature = 0.0;
  int sign = 0;  // +1, -1, or 0 within zero_tol
};

struct SweepReport {
  std::vector<SweepRow> rows;
  long positive = 0;
  long negative = 0;
  long zero = 0;
  std::optional<SweepRow> first_negative;  // earliest in grid order
  std::optional<SweepRow> min_curvature;
  std::optional<SweepRow> max_curvature;

  std::string to_csv() const;
  std::string to_json() const;
};

/// Evaluates the flag curvature on every grid cell in deterministic grid
/// order. Degenerate flags (plane vector parallel to the pole) are skipped.
SweepReport flag_sign_sweep(const SweepSpec& spec);

}  // namespace liegeo
