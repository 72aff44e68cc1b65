#pragma once

#include "starlab/series.hpp"

namespace starlab {

/// D^{n+1} g / D^n g for an element g = z^rho u(z).
///
/// Numerator and denominator share the head z^rho, so the ratio lives
/// entirely at the unit level: ratio(0) = rho, and ratio = 1 + ... only for
/// normalized g.
struct SalageanRatio {
  AnalyticElement numerator;
  AnalyticElement denominator;
  TruncatedSeries ratio;
  unsigned n;
};

/// D^n e with D(z^rho u) = z^rho (rho u + z u'). Acts on z^{rho+k} by
/// (rho+k)^n. Throws InvalidArgument for rho = 0 (the unit part would lose its
/// constant term).
AnalyticElement salagean_apply(const AnalyticElement& e, unsigned n);

/// Coefficient a_k -> k^n a_k on a normalized function.
NormalizedFunction salagean_apply(const NormalizedFunction& f, unsigned n);

/// Coefficient a_k -> a_k / k^n; the closed form is dropped.
NormalizedFunction salagean_inverse(const NormalizedFunction& f, unsigned n);

SalageanRatio salagean_ratio(const AnalyticElement& e, unsigned n);
SalageanRatio salagean_ratio(const NormalizedFunction& f, unsigned n);

/// Residual of ratio * denominator = numerator, scaled by the numerator.
double ratio_consistency(const SalageanRatio& r);

}  // namespace starlab
