#include "starlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "starlab/errors.hpp"

namespace starlab {

namespace {

bool is_finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// Extended-precision accumulator for the convolution recurrences, whose sums
// cancel heavily when the result is much smaller than the terms.
struct wide {
  long double re = 0.0L;
  long double im = 0.0L;

  wide& operator+=(const wide& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  wide& operator-=(const wide& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

wide widen(cplx c) { return {c.real(), c.imag()}; }
cplx narrow(const wide& w) { return {static_cast<double>(w.re), static_cast<double>(w.im)}; }
wide operator*(const wide& a, const wide& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
wide operator*(long double s, const wide& a) { return {s * a.re, s * a.im}; }
wide operator/(const wide& a, long double s) { return {a.re / s, a.im / s}; }

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

std::vector<cplx> copy_coeffs(const TruncatedSeries& a, std::size_t order) {
  auto c = a.coeffs();
  return std::vector<cplx>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order + 1));
}

void require_unit_leading(const TruncatedSeries& u, const char* what) {
  if (std::abs(u[0] - 1.0) > 1e-12) {
    throw MathError(Errc::not_unit_leading, std::string(what) + " needs u(0) = 1");
  }
}

// Integer-valued real exponent, if any.
bool small_integer(cplx p, int& out) {
  if (p.imag() != 0.0) return false;
  const double r = p.real();
  if (r != std::floor(r) || std::abs(r) > 64.0) return false;
  out = static_cast<int>(r);
  return true;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw MathError(Errc::invalid_argument, "series needs at least one coefficient");
  }
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw MathError(Errc::invalid_argument, "non-finite series coefficient");
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<cplx>(order + 1, cplx{}));
}

TruncatedSeries TruncatedSeries::constant(cplx c, std::size_t order) {
  std::vector<cplx> v(order + 1, cplx{});
  v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::binomial(double s, std::size_t order) {
  std::vector<cplx> v(order + 1);
  double c = 1.0;
  v[0] = c;
  for (std::size_t k = 1; k <= order; ++k) {
    c *= (s + static_cast<double>(k) - 1.0) / static_cast<double>(k);
    v[k] = c;
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<cplx> v(order + 1, cplx{});
  const std::size_t n = std::min(order, this->order());
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1), v.begin());
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  auto v = copy_coeffs(a, n);
  for (std::size_t k = 0; k <= n; ++k) v[k] += b[k];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  auto v = copy_coeffs(a, n);
  for (std::size_t k = 0; k <= n; ++k) v[k] -= b[k];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> v(n + 1, cplx{});
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{}) continue;
    const cplx ai = a[i];
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += ai * b[j];
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(cplx s, const TruncatedSeries& a) {
  auto v = copy_coeffs(a, a.order());
  for (auto& c : v) c *= s;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator+(const TruncatedSeries& a, cplx s) {
  auto v = copy_coeffs(a, a.order());
  v[0] += s;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (std::abs(b[0]) < 1e-300) {
    throw MathError(Errc::zero_constant_term, "division by a series with vanishing constant term");
  }
  const std::size_t n = common_order(a, b);
  const cplx inv0 = 1.0 / b[0];
  std::vector<cplx> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    wide acc = widen(a[k]);
    for (std::size_t j = 1; j <= k; ++j) acc -= widen(b[j]) * widen(q[k - j]);
    q[k] = narrow(acc) * inv0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries series_exp(const TruncatedSeries& u) {
  const std::size_t n = u.order();
  std::vector<cplx> b(n + 1);
  b[0] = std::exp(u[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    wide acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<long double>(j) * widen(u[j]) * widen(b[k - j]);
    b[k] = narrow(acc / static_cast<long double>(k));
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_log(const TruncatedSeries& u) {
  require_unit_leading(u, "series_log");
  const std::size_t n = u.order();
  std::vector<cplx> l(n + 1, cplx{});
  for (std::size_t k = 1; k <= n; ++k) {
    wide acc = static_cast<long double>(k) * widen(u[k]);
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<long double>(j) * widen(l[j]) * widen(u[k - j]);
    l[k] = narrow(acc / static_cast<long double>(k));
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries series_pow_real(const TruncatedSeries& u, double t) {
  require_unit_leading(u, "series_pow_real");
  const std::size_t n = u.order();
  std::vector<cplx> b(n + 1, cplx{});
  b[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    wide acc{};
    const long double kd = static_cast<long double>(k);
    for (std::size_t j = 1; j <= k; ++j) {
      const long double jd = static_cast<long double>(j);
      acc += (t * jd - (kd - jd)) * widen(u[j]) * widen(b[k - j]);
    }
    b[k] = narrow(acc / kd);
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries z_derivative(const TruncatedSeries& u) {
  auto v = copy_coeffs(u, u.order());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= static_cast<double>(k);
  return TruncatedSeries(std::move(v));
}

cplx horner(const TruncatedSeries& u, cplx z) {
  auto c = u.coeffs();
  cplx acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double tail_bound(const TruncatedSeries& u, double r) {
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const std::size_t n = u.order();
  const std::size_t window = std::min<std::size_t>(8, n + 1);
  double cmax = 0.0;
  for (std::size_t k = n + 1 - window; k <= n; ++k) cmax = std::max(cmax, std::abs(u[k]));
  return cmax * std::pow(r, static_cast<double>(n)) / (1.0 - r);
}

double scaled_residual(const TruncatedSeries& a, const TruncatedSeries& b,
                       const TruncatedSeries& scale) {
  const std::size_t n = std::min(common_order(a, b), scale.order());
  double running = 0.0;
  double worst = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    running = std::max(running, std::abs(scale[k]));
    worst = std::max(worst, std::abs(a[k] - b[k]) / (1.0 + running));
  }
  return worst;
}

double max_abs_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

AnalyticElement::AnalyticElement(cplx head, TruncatedSeries unit, cplx scale)
    : head_(head), scale_(scale), unit_(std::move(unit)) {
  if (unit_[0] != cplx{1.0, 0.0}) {
    throw MathError(Errc::not_unit_leading, "element unit part must start with 1");
  }
  if (!is_finite(head_) || !is_finite(scale_)) {
    throw MathError(Errc::invalid_argument, "non-finite element head or scale");
  }
}

AnalyticElement AnalyticElement::from_series(cplx head, const TruncatedSeries& series) {
  const cplx c0 = series[0];
  if (std::abs(c0) < 1e-300) {
    throw MathError(Errc::zero_constant_term, "element body has vanishing constant term");
  }
  auto v = copy_coeffs(series, series.order());
  for (auto& c : v) c /= c0;
  v[0] = 1.0;
  return AnalyticElement(head, TruncatedSeries(std::move(v)), c0);
}

TruncatedSeries AnalyticElement::body() const { return scale_ * unit_; }

AnalyticElement AnalyticElement::times_power(cplx exponent) const {
  return AnalyticElement(head_ + exponent, unit_, scale_);
}

AnalyticElement AnalyticElement::scaled(cplx factor) const {
  return AnalyticElement(head_, unit_, scale_ * factor);
}

AnalyticElement operator*(const AnalyticElement& a, const AnalyticElement& b) {
  auto u = a.unit() * b.unit();
  return AnalyticElement(a.head() + b.head(), std::move(u), a.scale() * b.scale());
}

cplx principal_power(cplx z, cplx p) {
  int k = 0;
  if (small_integer(p, k)) {
    cplx base = k >= 0 ? z : 1.0 / z;
    cplx acc = 1.0;
    for (int i = 0; i < std::abs(k); ++i) acc *= base;
    return acc;
  }
  if (p.imag() == 0.0) return std::pow(z, p.real());
  return std::exp(p * std::log(z));
}

Evaluation element_eval(const AnalyticElement& e, cplx z) {
  const double r = std::abs(z);
  if (r >= 1.0) throw MathError(Errc::invalid_argument, "element_eval requires |z| < 1");
  cplx zp;
  if (z == cplx{}) {
    const cplx p = e.head();
    if (p == cplx{}) {
      zp = 1.0;
    } else if (p.real() > 0.0) {
      zp = 0.0;
    } else {
      throw MathError(Errc::branch_point_at_zero, "z^rho at z = 0 with Re rho <= 0");
    }
  } else {
    zp = principal_power(z, e.head());
  }
  const cplx front = e.scale() * zp;
  return {front * horner(e.unit(), z), std::abs(front) * tail_bound(e.unit(), r)};
}

AnalyticElement integrate_termwise(const AnalyticElement& e) {
  const cplx rho = e.head();
  const std::size_t n = e.order();
  for (std::size_t k = 0; k <= n; ++k) {
    if (std::abs(rho + static_cast<double>(k) + 1.0) < 1e-12) {
      throw MathError(Errc::logarithmic_term, "term with exponent -1 has no power antiderivative");
    }
  }
  if (rho.real() <= -1.0) {
    throw MathError(Errc::divergent_at_origin, "integrand head has Re rho <= -1");
  }
  const cplx lead = rho + 1.0;
  std::vector<cplx> v(n + 1);
  v[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) v[k] = e.unit()[k] * lead / (lead + static_cast<double>(k));
  return AnalyticElement(lead, TruncatedSeries(std::move(v)), e.scale() / lead);
}

NormalizedFunction::NormalizedFunction(TruncatedSeries series, ClosedForm closed_form,
                                       std::string name)
    : series_(std::move(series)), closed_form_(std::move(closed_form)), name_(std::move(name)) {
  if (series_.order() < 1 || series_[0] != cplx{} || series_[1] != cplx{1.0, 0.0}) {
    throw MathError(Errc::invalid_argument, "normalized function needs c0 = 0 and c1 = 1");
  }
}

NormalizedFunction NormalizedFunction::from_unit(const TruncatedSeries& unit,
                                                 ClosedForm closed_form, std::string name) {
  require_unit_leading(unit, "NormalizedFunction::from_unit");
  std::vector<cplx> v(unit.size() + 1, cplx{});
  for (std::size_t k = 0; k < unit.size(); ++k) v[k + 1] = unit[k];
  v[1] = 1.0;
  return NormalizedFunction(TruncatedSeries(std::move(v)), std::move(closed_form),
                            std::move(name));
}

NormalizedFunction NormalizedFunction::identity(std::size_t order) {
  auto s = TruncatedSeries::zero(order);
  std::vector<cplx> v(s.coeffs().begin(), s.coeffs().end());
  v[1] = 1.0;
  return NormalizedFunction(TruncatedSeries(std::move(v)), [](cplx z) { return z; }, "z");
}

TruncatedSeries NormalizedFunction::unit() const {
  auto c = series_.coeffs();
  return TruncatedSeries(std::vector<cplx>(c.begin() + 1, c.end()));
}

AnalyticElement NormalizedFunction::as_element() const { return AnalyticElement(1.0, unit()); }

cplx NormalizedFunction::operator()(cplx z) const {
  if (closed_form_) return closed_form_(z);
  return horner(series_, z);
}

}  // namespace starlab
