#include "starlab/dominants.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "starlab/errors.hpp"
#include "starlab/quadrature.hpp"

namespace starlab {

namespace {

bool closed_form_available(const DominantSpec& spec) {
  return spec.mu == 0.0 || (spec.mu == 1.0 && spec.lambda0 == 0.0);
}

// Closed forms valid on the closed disk minus z = 1; z must not be near 0.
cplx closed_form_q(const DominantSpec& spec, cplx z) {
  const double c = spec.exponent();
  const cplx w = 1.0 - z;
  if (spec.mu == 0.0) {
    if (std::abs(c - 1.0) < 1e-15) return z / (w * -std::log(w));
    return z * std::pow(w, -c) * (c - 1.0) / (std::pow(w, 1.0 - c) - 1.0);
  }
  return z * z / (w * (w * std::log(w) + z)) - 1.0;
}

}  // namespace

void DominantSpec::validate() const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw MathError(Errc::invalid_argument, "dominant needs real mu >= 0");
  }
  if (!(lambda0 >= 0.0 && lambda0 < 1.0)) {
    throw MathError(Errc::invalid_argument, "dominant needs 0 <= lambda0 < 1");
  }
  if (eta != 1.0) throw MathError(Errc::invalid_argument, "only eta = 1 is supported");
}

cplx halfplane_h(double lambda0, cplx z) { return (1.0 + (1.0 - 2.0 * lambda0) * z) / (1.0 - z); }

TruncatedSeries lemma2_series(const DominantSpec& spec, std::size_t order) {
  spec.validate();
  // (h(t) - 1)/t = 2(1 - lambda0) sum_{k>=0} t^k
  const auto slope = TruncatedSeries::constant(spec.exponent(), order) *
                     TruncatedSeries::binomial(1.0, order);
  const auto log_integral = integrate_termwise(AnalyticElement::from_series(0.0, slope));
  // log_integral = z^1 * body; shift into an ordinary series vanishing at 0.
  const auto body = log_integral.body();
  std::vector<cplx> shifted(order + 1, cplx{});
  for (std::size_t k = 0; k < order; ++k) shifted[k + 1] = body[k];
  const auto h_unit = series_exp(TruncatedSeries(std::move(shifted)));  // H = z * h_unit

  // F = (1+mu) z^{-mu} int t^{mu-1} H dt; the integrand is t^mu * h_unit.
  const auto primitive = integrate_termwise(AnalyticElement(spec.mu, h_unit));
  const auto f_element = primitive.scaled(1.0 + spec.mu).times_power(-spec.mu);
  const auto q = (1.0 + spec.mu) * (h_unit / f_element.body());
  return q + cplx(-spec.mu);
}

cplx lemma2_pipeline(const DominantSpec& spec, cplx z, std::size_t order) {
  if (std::abs(z) > 0.99) throw MathError(Errc::invalid_argument, "lemma2_pipeline needs |z| <= 0.99");
  return horner(lemma2_series(spec, order), z);
}

cplx best_dominant_q(const DominantSpec& spec, cplx z) {
  spec.validate();
  if (std::abs(z) >= 1.0) throw MathError(Errc::invalid_argument, "best_dominant_q needs |z| < 1");
  const double c = spec.exponent();
  // int_0^z t^mu (1-t)^{-c} dt = z^{1+mu} int_0^1 s^mu (1 - s z)^{-c} ds, s = e^{-x}.
  const auto integrand = [&](double x) {
    const double s = std::exp(-x);
    return std::exp(-(spec.mu + 1.0) * x) * std::pow(1.0 - s * z, -c);
  };
  quad::Options opt;
  opt.rel_tol = 1e-14;
  opt.abs_tol = 1e-300;
  opt.max_depth = 30;
  const cplx integral = quad::integrate_half_line(integrand, opt);
  return std::pow(1.0 - z, -c) / integral - spec.mu;
}

cplx dominant_q(const DominantSpec& spec, cplx z) {
  spec.validate();
  if (closed_form_available(spec) && std::abs(z) > 0.05 && z != cplx(1.0, 0.0)) {
    return closed_form_q(spec, z);
  }
  return best_dominant_q(spec, z);
}

double verify_ode4(const DominantSpec& spec) {
  spec.validate();
  constexpr double kStep = 1e-5;
  const auto q = [&](cplx z) { return best_dominant_q(spec, z); };
  const auto central = [&](cplx z, double h) { return (q(z + h) - q(z - h)) / (2.0 * h); };
  double worst = 0.0;
  for (double r : {0.2, 0.5, 0.8}) {
    for (int j = 0; j < 64; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / 64.0);
      const cplx dq = (4.0 * central(z, 0.5 * kStep) - central(z, kStep)) / 3.0;
      const cplx qz = q(z);
      const cplx lhs = qz + z * dq / (spec.mu + qz);
      worst = std::max(worst, std::abs(lhs - halfplane_h(spec.lambda0, z)));
    }
  }
  return worst;
}

DominantCurve dominant_curve(const DominantSpec& spec, double r, std::size_t count) {
  if (!(r > 0.0 && r < 1.0)) throw MathError(Errc::invalid_argument, "curve radius must be in (0,1)");
  DominantCurve curve{r, {}};
  curve.samples.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    curve.samples.push_back(dominant_q(spec, std::polar(r, theta)));
  }
  return curve;
}

double rho_limit(const DominantSpec& spec) {
  spec.validate();
  if (closed_form_available(spec)) return closed_form_q(spec, -1.0).real();
  return rho_limit_extrapolated(spec);
}

double rho_limit_extrapolated(const DominantSpec& spec) {
  spec.validate();
  constexpr int kFirst = 4;
  constexpr int kLast = 12;
  constexpr int kCount = kLast - kFirst + 1;
  // table[i][j]: j Richardson steps on the sequence h_i = 2^{-(kFirst+i)}.
  std::vector<std::vector<double>> table(kCount);
  for (int i = 0; i < kCount; ++i) {
    const double r = 1.0 - std::ldexp(1.0, -(kFirst + i));
    table[i].push_back(best_dominant_q(spec, -r).real());
    for (int j = 1; j <= i; ++j) {
      const double factor = std::ldexp(1.0, j) - 1.0;
      table[i].push_back(table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / factor);
    }
  }
  const double best = table[kCount - 1][kCount - 1];
  const double previous = table[kCount - 2][kCount - 2];
  if (!(std::abs(best - previous) <= 1e-7)) {
    throw MathError(Errc::extrapolation_unstable,
                    "Richardson estimates differ by " + std::to_string(std::abs(best - previous)));
  }
  return best;
}

}  // namespace starlab
