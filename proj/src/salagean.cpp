#include "starlab/salagean.hpp"

#include <cmath>
#include <vector>

#include "starlab/errors.hpp"

namespace starlab {

AnalyticElement salagean_apply(const AnalyticElement& e, unsigned n) {
  if (n == 0) return e;
  const cplx rho = e.head();
  if (std::abs(rho) == 0.0) {
    throw MathError(Errc::invalid_argument, "Salagean operator on a head-0 element");
  }
  const auto& u = e.unit();
  std::vector<cplx> v(u.size());
  v[0] = 1.0;
  for (std::size_t k = 1; k < u.size(); ++k) {
    const cplx factor = (rho + static_cast<double>(k)) / rho;
    cplx p = 1.0;
    for (unsigned i = 0; i < n; ++i) p *= factor;
    v[k] = u[k] * p;
  }
  cplx scale = e.scale();
  for (unsigned i = 0; i < n; ++i) scale *= rho;
  return AnalyticElement(rho, TruncatedSeries(std::move(v)), scale);
}

NormalizedFunction salagean_apply(const NormalizedFunction& f, unsigned n) {
  const auto& s = f.series();
  std::vector<cplx> v(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t k = 2; k < v.size(); ++k) v[k] *= std::pow(static_cast<double>(k), n);
  return NormalizedFunction(TruncatedSeries(std::move(v)));
}

NormalizedFunction salagean_inverse(const NormalizedFunction& f, unsigned n) {
  const auto& s = f.series();
  std::vector<cplx> v(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t k = 2; k < v.size(); ++k) v[k] /= std::pow(static_cast<double>(k), n);
  return NormalizedFunction(TruncatedSeries(std::move(v)));
}

SalageanRatio salagean_ratio(const AnalyticElement& e, unsigned n) {
  auto den = salagean_apply(e, n);
  auto num = salagean_apply(den, 1);
  // D^{n+1} e = (rho * scale_n) z^rho unit_{n+1}; the scale_n cancels.
  auto ratio = e.head() * (num.unit() / den.unit());
  return SalageanRatio{std::move(num), std::move(den), std::move(ratio), n};
}

SalageanRatio salagean_ratio(const NormalizedFunction& f, unsigned n) {
  return salagean_ratio(f.as_element(), n);
}

double ratio_consistency(const SalageanRatio& r) {
  const auto lhs = r.ratio * r.denominator.body();
  const auto rhs = r.numerator.body();
  return scaled_residual(lhs, rhs, rhs);
}

}  // namespace starlab
