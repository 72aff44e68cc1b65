#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace starlab {

using cplx = std::complex<double>;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
///
/// Always holds exactly N+1 finite coefficients. Binary operations on series
/// of different orders adopt the lesser order.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1, cplx{0.0, 0.0}) {}
  explicit TruncatedSeries(std::vector<cplx> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries constant(cplx c, std::size_t order);
  /// 1/(1-z)^s via the binomial recurrence.
  static TruncatedSeries binomial(double s, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Drops coefficients above `order`, or pads with zeros.
  TruncatedSeries truncated(std::size_t order) const;

 private:
  std::vector<cplx> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(cplx s, const TruncatedSeries& a);
TruncatedSeries operator+(const TruncatedSeries& a, cplx s);

/// Quotient a/b; throws ZeroConstantTerm when |b_0| < 1e-300.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_div(a, b);
}

TruncatedSeries series_exp(const TruncatedSeries& u);
/// Requires u(0) = 1 (NotUnitLeading otherwise).
TruncatedSeries series_log(const TruncatedSeries& u);
/// u^t for u(0) = 1, by the J.C.P. Miller convolution recurrence.
TruncatedSeries series_pow_real(const TruncatedSeries& u, double t);

/// z u'(z).
TruncatedSeries z_derivative(const TruncatedSeries& u);

cplx horner(const TruncatedSeries& u, cplx z);

/// Upper estimate of |sum_{k>N} c_k z^k| for |z| = r, assuming the tail
/// coefficients stay below the largest of the last few stored ones.
double tail_bound(const TruncatedSeries& u, double r);

/// Max over k of |a_k - b_k| / (1 + s_k), where s_k is the running maximum of
/// |scale_j|, j <= k. Identities whose operands grow with k are compared on
/// the scale of the operands instead of absolutely.
double scaled_residual(const TruncatedSeries& a, const TruncatedSeries& b,
                       const TruncatedSeries& scale);
double max_abs_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/// scale * z^head * unit(z) with unit(0) = 1 exactly.
///
/// Houses fractional powers such as f(z)^alpha and their Salagean images.
/// The head may be complex (z^{delta-1} factors with complex delta); all
/// powers of z use the principal branch.
class AnalyticElement {
 public:
  AnalyticElement(cplx head, TruncatedSeries unit, cplx scale = 1.0);

  /// Normalizes an arbitrary series with nonzero constant term into scale * unit.
  static AnalyticElement from_series(cplx head, const TruncatedSeries& series);

  cplx head() const noexcept { return head_; }
  cplx scale() const noexcept { return scale_; }
  const TruncatedSeries& unit() const noexcept { return unit_; }
  std::size_t order() const noexcept { return unit_.order(); }

  /// Coefficients of scale * unit, i.e. the series multiplying z^head.
  TruncatedSeries body() const;

  AnalyticElement times_power(cplx exponent) const;
  AnalyticElement scaled(cplx factor) const;

 private:
  cplx head_;
  cplx scale_;
  TruncatedSeries unit_;
};

AnalyticElement operator*(const AnalyticElement& a, const AnalyticElement& b);

struct Evaluation {
  cplx value;
  double tail_bound;
};

/// Principal-branch z^p; exact repeated multiplication for small integer p.
cplx principal_power(cplx z, cplx p);

Evaluation element_eval(const AnalyticElement& e, cplx z);

/// Termwise antiderivative from 0: z^{rho+k} -> z^{rho+k+1}/(rho+k+1).
AnalyticElement integrate_termwise(const AnalyticElement& e);

/// f(z) = z + a_2 z^2 + ... (class A), optionally paired with a closed form
/// that is used for pointwise evaluation near the boundary.
class NormalizedFunction {
 public:
  using ClosedForm = std::function<cplx(cplx)>;

  explicit NormalizedFunction(TruncatedSeries series, ClosedForm closed_form = {},
                              std::string name = {});

  /// f = z * unit, unit(0) = 1.
  static NormalizedFunction from_unit(const TruncatedSeries& unit,
                                      ClosedForm closed_form = {}, std::string name = {});
  static NormalizedFunction identity(std::size_t order);

  const TruncatedSeries& series() const noexcept { return series_; }
  std::size_t order() const noexcept { return series_.order(); }
  const std::string& name() const noexcept { return name_; }
  bool has_closed_form() const noexcept { return static_cast<bool>(closed_form_); }
  const ClosedForm& closed_form() const noexcept { return closed_form_; }

  /// f(z)/z as a unit-leading series of order N-1.
  TruncatedSeries unit() const;
  AnalyticElement as_element() const;

  /// Closed form when present, otherwise Horner on the series.
  cplx operator()(cplx z) const;

 private:
  TruncatedSeries series_;
  ClosedForm closed_form_;
  std::string name_;
};

}  // namespace starlab
