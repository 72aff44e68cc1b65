#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "starlab/geometry.hpp"
#include "starlab/integral_ops.hpp"

namespace starlab {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

/// Knobs shared by every verification command. `order` is the truncation
/// order of identity checks; boundary estimates always use
/// `boundary_order` so that the series tail is negligible at r = 0.99.
struct RunConfig {
  std::size_t order = 512;
  std::size_t boundary_order = 2048;
  std::uint64_t seed = 42;
  GridSpec grid;
  double tol = 1e-9;
  double lambda = 0.0;
  unsigned n_max = 2;
  unsigned draws = 25;
  unsigned k_max = 4;
  double mu = 0.0;
  double r = 0.9;
  bool extended = false;
};

struct VerificationReport {
  std::string claim;
  nlohmann::json parameters;
  Status status = Status::inconclusive;
  nlohmann::json payload;
  double runtime_seconds = 0.0;
};

/// Runtime is wall-clock and therefore left out unless asked for; everything
/// else is a pure function of the config.
nlohmann::json to_json(const VerificationReport& r, bool include_runtime = false);

/// Recurrence and ratio-relation residuals over a seeded sweep, plus the
/// m = 1 family collapse.
VerificationReport cmd_structural(const RunConfig& cfg);

/// Membership of J_m^j(f) in S_n((alpha/beta) lambda) for seeded f in S_n(lambda).
VerificationReport cmd_theorem1(const RunConfig& cfg);

/// Subordination of the level-n ratio of J_m^beta to the best dominant.
VerificationReport cmd_theorem2(const RunConfig& cfg);

/// Sharp constants, order-of-J checks for the m = 1 operator, the Alexander
/// sharpness witness and the comparison with (sqrt 17 - 3)/4.
VerificationReport cmd_corollaries(const RunConfig& cfg);

/// The two sequences {2 z^{k-1} int f}^{1/(k+1)} and {(k+1) int t^{k-1} f}^{1/(k+1)}.
VerificationReport cmd_sequences(const RunConfig& cfg);

/// theta,re_q,im_q rows for q on |z| = r (4096 intervals, closing row repeats
/// the first). Summary statistics go into the returned report.
VerificationReport cmd_dominant_curve(const RunConfig& cfg, std::string& csv);

/// Runs the named claims in order. Theorem-level claims are preceded by the
/// structural check; if it fails they are reported inconclusive.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& claims,
                                          const RunConfig& cfg);

/// The fixed parameter sweep used by the theorem commands.
struct SweepPoint {
  double alpha;
  double beta;
  cplx gamma;
  unsigned m;
  Family family;
  /// False where the argument only covers n = 0 (beta != 1 or alpha != beta).
  bool all_levels;
};
std::vector<SweepPoint> theorem_sweep(bool extended);

}  // namespace starlab
