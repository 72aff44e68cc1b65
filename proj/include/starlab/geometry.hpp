#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "starlab/dominants.hpp"
#include "starlab/salagean.hpp"
#include "starlab/series.hpp"

namespace starlab {

struct GridSpec {
  std::vector<double> radii{0.5, 0.9, 0.99};
  std::size_t theta_count = 1024;
  bool refine = true;

  void validate() const;
};

/// A function sampled pointwise, with a bound on the truncation error of each
/// value on the circle |z| = r (zero for closed forms).
struct PointwiseEvaluator {
  std::function<cplx(cplx)> value;
  std::function<double(double)> error_bound = [](double) { return 0.0; };

  static PointwiseEvaluator from_series(const TruncatedSeries& s);
  static PointwiseEvaluator from_closed_form(std::function<cplx(cplx)> f);
};

struct RadiusMinimum {
  double r;
  double min_re;
  double argmin_theta;
};

struct OrderEstimate {
  std::vector<RadiusMinimum> per_radius;
  double extrapolated = 0.0;
  /// extrapolated minus the claimed bound (set by check_membership).
  double margin = 0.0;
  /// False if some per-radius minimum increased with r.
  bool monotone = true;
};

/// Minimum of Re(ratio) on each circle, refined by golden section in theta,
/// extrapolated to r = 1 linearly in (1 - r) through the last two radii.
/// Throws TailTooLarge if the error bound at the largest radius exceeds 1e-6.
OrderEstimate estimate_order(const PointwiseEvaluator& ratio, const GridSpec& grid);

/// Level-n Salagean ratio of f as an evaluator; the closed form of f is not
/// used (derivatives are taken at series level).
PointwiseEvaluator ratio_evaluator(const NormalizedFunction& f, unsigned n);

/// estimate_order of D^{n+1}f/D^n f minus lambda. Nonnegative (up to the
/// grid tolerance) is consistent with f in S_n(lambda).
OrderEstimate check_membership(const NormalizedFunction& f, unsigned n, double lambda,
                               const GridSpec& grid);

struct SubordinationVerdict {
  bool consistent = true;
  /// First sample point whose p-value falls outside the q-curve.
  std::optional<cplx> witness;
  std::optional<cplx> witness_value;
  /// Largest preimage radius excess |zeta| - r seen (0 if consistent); the
  /// distance to the polygon where no preimage was found.
  double worst_excess = 0.0;
  std::size_t points_checked = 0;
  std::size_t outside_count = 0;
};

/// Point-in-closed-polygon test by winding number; points within `tol` of an
/// edge count as inside.
bool contains(const std::vector<cplx>& polygon, cplx point, double tol);

/// Throws CurveSelfIntersection if two non-adjacent edges of the closed
/// polygon cross.
void check_simple_curve(const std::vector<cplx>& polygon);

/// Necessary conditions for p < q with univalent q: p(0) = q(0) and, for each
/// grid radius, every sample of p on |z| = r inside the Jordan curve
/// q(|z| = r). The q-curve has `q_samples` points; p is sampled on a
/// subset of the same angles (theta_count must divide q_samples). Samples
/// outside the inscribed polygon are settled by solving q(zeta) = p(z) with
/// Newton's method and comparing |zeta| with r.
SubordinationVerdict subordination_falsify(const PointwiseEvaluator& p,
                                           const PointwiseEvaluator& q, const GridSpec& grid,
                                           std::size_t q_samples = 4096);

/// Same, against precomputed samples of q (one curve per radius, in order).
SubordinationVerdict subordination_falsify(const PointwiseEvaluator& p,
                                           const PointwiseEvaluator& q,
                                           const std::vector<DominantCurve>& curves,
                                           std::size_t theta_count);

/// lambda0 - Re psi(lambda0 + (1 - lambda0) u2 i, v1) for
/// psi(u, v) = u + v/(mu + u), using
/// Re psi = lambda0 + (mu1 + lambda0) v1 / ((mu1 + lambda0)^2 + (mu2 + (1 - lambda0) u2)^2).
/// Requires 2 v1 <= -(1 - lambda0)(1 + u2^2) (OutsideRegime otherwise) and
/// u != -mu.
double admissibility_margin(cplx mu, double lambda0, double u2, double v1);

}  // namespace starlab
