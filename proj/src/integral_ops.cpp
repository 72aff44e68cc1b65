#include "starlab/integral_ops.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "starlab/errors.hpp"
#include "starlab/quadrature.hpp"
#include "starlab/salagean.hpp"

namespace starlab {

namespace {

void check_common(double alpha, double beta) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw MathError(Errc::invalid_argument, "alpha must be a finite real >= 0");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw MathError(Errc::invalid_argument, "beta must be a finite real > 0");
  }
}

void check_family(cplx gamma, unsigned m, Family family) {
  if (m == 0) return;
  if (family == Family::first && gamma.real() < 0.0) {
    throw MathError(Errc::invalid_argument, "first family needs Re gamma >= 0");
  }
  if (family == Family::second && static_cast<double>(m) - 1.0 + gamma.real() < 0.0) {
    throw MathError(Errc::invalid_argument, "second family needs m - 1 + Re gamma >= 0");
  }
}

}  // namespace

OperatorParams OperatorParams::family_member(double alpha, double beta, cplx gamma, unsigned m,
                                             Family family) {
  check_common(alpha, beta);
  if (m == 0) throw MathError(Errc::invalid_argument, "m must be >= 1");
  check_family(gamma, m, family);
  return OperatorParams(alpha, beta, gamma, m, family);
}

OperatorParams OperatorParams::single(double alpha, double beta, cplx gamma) {
  check_common(alpha, beta);
  if (beta + gamma.real() < 0.0) {
    throw MathError(Errc::invalid_argument, "J needs beta + Re gamma >= 0");
  }
  return OperatorParams(alpha, beta, gamma, 1, Family::first);
}

OperatorParams OperatorParams::with_m(unsigned m) const {
  check_family(gamma_, m, family_);
  return OperatorParams(alpha_, beta_, gamma_, m, family_);
}

MuXi mu_xi(const OperatorParams& p) {
  cplx mu = p.gamma();
  if (p.family() == Family::second) mu += static_cast<double>(p.m()) - 1.0;
  return {mu, mu + p.beta()};
}

AnalyticElement f_power_alpha(const NormalizedFunction& f, double alpha) {
  return AnalyticElement(alpha, series_pow_real(f.unit(), alpha));
}

cplx weight_factor(const OperatorParams& p, unsigned k) {
  const cplx bg = p.beta() + p.gamma();
  const double shift = static_cast<double>(k) - 1.0;
  cplx w = 1.0;
  for (unsigned i = 0; i < p.m(); ++i) {
    const cplx num = p.family() == Family::first ? bg : bg + static_cast<double>(i);
    const cplx den = num + shift;
    if (std::abs(den) < 1e-12) {
      throw MathError(Errc::pole_in_weight, "weight denominator vanishes at k = " +
                                                std::to_string(k));
    }
    w *= num / den;
  }
  return w;
}

AnalyticElement apply_Jm_power(const NormalizedFunction& f, const OperatorParams& p) {
  const std::size_t order = f.order() - 1;
  if (p.alpha() == 0.0) return AnalyticElement(p.beta(), TruncatedSeries::constant(1.0, order));
  const auto powered = f_power_alpha(f, p.alpha());
  const auto& a = powered.unit();
  std::vector<cplx> v(a.size());
  v[0] = 1.0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    v[j] = weight_factor(p, static_cast<unsigned>(j + 1)) * a[j];
  }
  return AnalyticElement(p.beta(), TruncatedSeries(std::move(v)));
}

NormalizedFunction apply_Jm(const NormalizedFunction& f, const OperatorParams& p) {
  if (p.alpha() == 0.0) return NormalizedFunction::identity(f.order());
  const auto power = apply_Jm_power(f, p);
  return NormalizedFunction::from_unit(series_pow_real(power.unit(), 1.0 / p.beta()));
}

NormalizedFunction apply_J_eq2(const NormalizedFunction& f, const OperatorParams& p) {
  if (p.alpha() == 0.0) return NormalizedFunction::identity(f.order());
  const cplx bg = p.beta() + p.gamma();
  if (bg.real() <= 0.0) {
    throw MathError(Errc::divergent_at_origin, "Re(delta - 1 + alpha) <= -1");
  }
  // t^{delta-1} f(t)^alpha, integrated from 0, times (beta+gamma) z^{-gamma}.
  const auto integrand = f_power_alpha(f, p.alpha()).times_power(p.delta() - 1.0);
  const auto primitive = integrate_termwise(integrand);
  const auto power = primitive.scaled(bg).times_power(-p.gamma());
  return NormalizedFunction::from_unit(series_pow_real(power.unit(), 1.0 / p.beta()));
}

cplx quadrature_oracle(const NormalizedFunction& f, const OperatorParams& p, cplx z,
                       double tol) {
  const double r = std::abs(z);
  if (!(r > 0.0) || r > 0.5) {
    throw MathError(Errc::invalid_argument, "quadrature oracle needs 0 < |z| <= 0.5");
  }
  if (p.alpha() == 0.0) return z;
  const cplx bg = p.beta() + p.gamma();
  if (bg.real() <= 0.0) throw MathError(Errc::divergent_at_origin, "Re(beta + gamma) <= 0");
  const unsigned m = p.m();
  const double alpha = p.alpha();

  // (f(t)/t)^alpha on the principal branch, t = s z.
  auto unit_power = [&](double s) {
    const cplx t = s * z;
    return std::pow(f(t) / t, alpha);
  };

  // With s = e^{-x}: t^{delta-1} f(t)^alpha dt = z^{beta+gamma} e^{-(beta+gamma)x}
  // (f(t)/t)^alpha dx, and log(z/t) = x.
  quad::Integrand integrand;
  cplx prefactor;
  if (p.family() == Family::first) {
    integrand = [&](double x) {
      return std::pow(x, static_cast<double>(m) - 1.0) * std::exp(-bg * x) *
             unit_power(std::exp(-x));
    };
    double factorial = 1.0;
    for (unsigned i = 1; i < m; ++i) factorial *= i;
    prefactor = std::pow(bg, static_cast<double>(m)) / factorial;
  } else {
    integrand = [&](double x) {
      return std::pow(-std::expm1(-x), static_cast<double>(m) - 1.0) * std::exp(-bg * x) *
             unit_power(std::exp(-x));
    };
    // binom(beta+gamma+m-1, beta+gamma-1) * m = prod_{i<m}(beta+gamma+i) / (m-1)!
    prefactor = 1.0;
    for (unsigned i = 0; i < m; ++i) prefactor *= (bg + static_cast<double>(i));
    for (unsigned i = 1; i < m; ++i) prefactor /= static_cast<double>(i);
  }
  quad::Options opt;
  opt.rel_tol = tol;
  opt.abs_tol = tol * 1e-3;
  const cplx unit = prefactor * quad::integrate_half_line(integrand, opt);
  return z * std::pow(unit, 1.0 / p.beta());
}

double check_recurrence7(const NormalizedFunction& f, const OperatorParams& p) {
  const auto [mu, xi] = mu_xi(p);
  const auto current = apply_Jm_power(f, p);
  const auto previous = apply_Jm_power(f, p.with_m(p.m() - 1));
  const auto body = current.body();
  // z (z^beta u)' = z^beta (beta u + z u')
  const auto lhs = (mu + p.beta()) * body + z_derivative(body);
  const auto rhs = xi * previous.body();
  return scaled_residual(lhs, rhs, rhs);
}

double ratio_relation8(const NormalizedFunction& f, const OperatorParams& p, unsigned n) {
  const auto mu = mu_xi(p).mu;
  const auto current = salagean_ratio(apply_Jm_power(f, p), n).ratio;
  const auto previous = salagean_ratio(apply_Jm_power(f, p.with_m(p.m() - 1)), n).ratio;
  const auto zdp = z_derivative(current);
  const auto rhs = current + zdp / (current + mu);
  return scaled_residual(previous, rhs, zdp);
}

}  // namespace starlab
