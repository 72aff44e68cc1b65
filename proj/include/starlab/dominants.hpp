#pragma once

#include <cstddef>
#include <vector>

#include "starlab/series.hpp"

namespace starlab {

/// Parameters of the best dominant q solving
/// q + z q'/(mu + q) = (1 + (1 - 2 lambda0) z)/(1 - z), q(0) = 1.
struct DominantSpec {
  double mu = 0.0;
  double lambda0 = 0.0;
  double eta = 1.0;

  /// Throws InvalidArgument unless mu >= 0, 0 <= lambda0 < 1, eta = 1.
  void validate() const;
  /// Exponent 2(1 - lambda0) of (1 - z) in H and q.
  double exponent() const { return 2.0 * (1.0 - lambda0); }
};

/// Sampled image of |z| = r under q, at theta_j = 2 pi j / count.
struct DominantCurve {
  double r = 0.0;
  std::vector<cplx> samples;
};

/// Moebius map of the unit disk onto Re w > lambda0.
cplx halfplane_h(double lambda0, cplx z);

/// q as a power series, constructed through H -> F -> q:
///   H = z exp(int_0^z (h(t)-1)/t dt),
///   F = (1+mu) z^{-mu} int_0^z t^{mu-1} H(t) dt,
///   q = (1+mu) H/F - mu.
TruncatedSeries lemma2_series(const DominantSpec& spec, std::size_t order);

/// Pointwise q(z) from lemma2_series; requires |z| <= 0.99.
cplx lemma2_pipeline(const DominantSpec& spec, cplx z, std::size_t order = 2048);

/// Closed form
///   q(z) = z^{1+mu} (1-z)^{-c} / int_0^z t^mu (1-t)^{-c} dt - mu,  c = 2(1-lambda0),
/// with the integral taken along t = s z by adaptive Gauss-Legendre.
cplx best_dominant_q(const DominantSpec& spec, cplx z);

/// Closed forms for mu = 0 (any lambda0) and mu = 1, lambda0 = 0; otherwise
/// best_dominant_q.
cplx dominant_q(const DominantSpec& spec, cplx z);

/// max |q + z q'/(mu + q) - h| over r in {0.2, 0.5, 0.8} and 64 angles, with q'
/// from Richardson-extrapolated central differences.
double verify_ode4(const DominantSpec& spec);

DominantCurve dominant_curve(const DominantSpec& spec, double r, std::size_t count);

/// lim_{r -> 1-} q(-r). Closed forms where available, otherwise
/// rho_limit_extrapolated.
double rho_limit(const DominantSpec& spec);

/// Richardson table over r_k = 1 - 2^{-k}, k = 4..12, in h = 1 - r. Throws
/// ExtrapolationUnstable if the two best estimates differ by more than 1e-7.
double rho_limit_extrapolated(const DominantSpec& spec);

}  // namespace starlab
