#include "starlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "starlab/errors.hpp"

namespace starlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double golden_minimum(const std::function<double(double)>& f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < 60 && b - a > 1e-12; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Winding number of the closed polygon around p (Sunday's crossing rule).
int winding_number(const std::vector<cplx>& poly, cplx p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = poly[i];
    const cplx b = poly[(i + 1) % n];
    if (a.imag() <= p.imag()) {
      if (b.imag() > p.imag() && cross(b - a, p - a) > 0.0) ++wn;
    } else {
      if (b.imag() <= p.imag() && cross(b - a, p - a) < 0.0) --wn;
    }
  }
  return wn;
}

double polygon_distance(const std::vector<cplx>& poly, cplx p) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) best = std::min(best, segment_distance(p, poly[i], poly[(i + 1) % n]));
  return best;
}

bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
         ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

struct Preimage {
  cplx zeta;
  cplx derivative;
};

// Newton's method for q(zeta) = w inside the unit disk, with q' by central
// differences.
std::optional<Preimage> invert(const std::function<cplx(cplx)>& q, cplx w, cplx zeta) {
  for (int it = 0; it < 60; ++it) {
    const double h = 1e-6 * std::max(1e-3, 1.0 - std::abs(zeta));
    const cplx dq = (q(zeta + h) - q(zeta - h)) / (2.0 * h);
    const cplx residual = q(zeta) - w;
    if (std::abs(residual) <= 1e-12 * (1.0 + std::abs(w))) return Preimage{zeta, dq};
    const cplx next = zeta - residual / dq;
    if (!(std::abs(next) < 1.0)) return std::nullopt;
    zeta = next;
  }
  return std::nullopt;
}

}  // namespace

void GridSpec::validate() const {
  if (radii.empty()) throw MathError(Errc::invalid_argument, "grid needs at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) {
      throw MathError(Errc::invalid_argument, "grid radii must lie in (0,1)");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw MathError(Errc::invalid_argument, "grid radii must increase");
    }
  }
  if (theta_count < 16) throw MathError(Errc::invalid_argument, "theta_count must be >= 16");
}

PointwiseEvaluator PointwiseEvaluator::from_series(const TruncatedSeries& s) {
  PointwiseEvaluator e;
  e.value = [s](cplx z) { return horner(s, z); };
  e.error_bound = [s](double r) { return tail_bound(s, r); };
  return e;
}

PointwiseEvaluator PointwiseEvaluator::from_closed_form(std::function<cplx(cplx)> f) {
  PointwiseEvaluator e;
  e.value = std::move(f);
  return e;
}

OrderEstimate estimate_order(const PointwiseEvaluator& ratio, const GridSpec& grid) {
  grid.validate();
  const double r_max = grid.radii.back();
  const double tail = ratio.error_bound(r_max);
  if (!(tail <= 1e-6)) {
    throw MathError(Errc::tail_too_large,
                    "error bound " + std::to_string(tail) + " at r = " + std::to_string(r_max));
  }
  OrderEstimate est;
  const std::size_t count = grid.theta_count;
  const double step = kTwoPi / static_cast<double>(count);
  for (double r : grid.radii) {
    auto re_at = [&](double theta) { return ratio.value(std::polar(r, theta)).real(); };
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const double theta = step * static_cast<double>(j);
      const double v = re_at(theta);
      if (v < best) {
        best = v;
        best_theta = theta;
      }
    }
    if (grid.refine) {
      const double theta = golden_minimum(re_at, best_theta - step, best_theta + step);
      const double v = re_at(theta);
      if (v < best) {
        best = v;
        best_theta = std::fmod(theta + kTwoPi, kTwoPi);
      }
    }
    if (!est.per_radius.empty() && best > est.per_radius.back().min_re + 1e-12) est.monotone = false;
    est.per_radius.push_back({r, best, best_theta});
  }
  const auto& pr = est.per_radius;
  if (pr.size() == 1) {
    est.extrapolated = pr.back().min_re;
  } else {
    const auto& a = pr[pr.size() - 2];
    const auto& b = pr.back();
    const double ha = 1.0 - a.r;
    const double hb = 1.0 - b.r;
    est.extrapolated = b.min_re - (a.min_re - b.min_re) * hb / (ha - hb);
  }
  est.margin = est.extrapolated;
  return est;
}

PointwiseEvaluator ratio_evaluator(const NormalizedFunction& f, unsigned n) {
  return PointwiseEvaluator::from_series(salagean_ratio(f, n).ratio);
}

OrderEstimate check_membership(const NormalizedFunction& f, unsigned n, double lambda,
                               const GridSpec& grid) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw MathError(Errc::invalid_argument, "membership order must lie in [0,1)");
  }
  auto est = estimate_order(ratio_evaluator(f, n), grid);
  est.margin = est.extrapolated - lambda;
  return est;
}

bool contains(const std::vector<cplx>& polygon, cplx point, double tol) {
  if (winding_number(polygon, point) != 0) return true;
  return polygon_distance(polygon, point) <= tol;
}

void check_simple_curve(const std::vector<cplx>& poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw MathError(Errc::invalid_argument, "curve needs at least 3 samples");
  std::vector<double> lo_x(n), hi_x(n), lo_y(n), hi_y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = poly[i];
    const cplx b = poly[(i + 1) % n];
    lo_x[i] = std::min(a.real(), b.real());
    hi_x[i] = std::max(a.real(), b.real());
    lo_y[i] = std::min(a.imag(), b.imag());
    hi_y[i] = std::max(a.imag(), b.imag());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wraparound
      if (hi_x[i] < lo_x[j] || hi_x[j] < lo_x[i] || hi_y[i] < lo_y[j] || hi_y[j] < lo_y[i]) continue;
      if (segments_cross(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
        throw MathError(Errc::curve_self_intersection,
                        "edges " + std::to_string(i) + " and " + std::to_string(j) + " cross");
      }
    }
  }
}

SubordinationVerdict subordination_falsify(const PointwiseEvaluator& p,
                                           const PointwiseEvaluator& q,
                                           const std::vector<DominantCurve>& curves,
                                           std::size_t theta_count) {
  SubordinationVerdict verdict;
  const cplx q0 = q.value(0.0);
  const cplx p0 = p.value(0.0);
  ++verdict.points_checked;
  if (std::abs(p0 - q0) > 1e-9 * (1.0 + std::abs(q0))) {
    verdict.consistent = false;
    verdict.witness = 0.0;
    verdict.witness_value = p0;
    verdict.worst_excess = std::abs(p0 - q0);
    return verdict;
  }
  for (const auto& curve : curves) {
    const std::size_t samples = curve.samples.size();
    if (theta_count == 0 || samples % theta_count != 0) {
      throw MathError(Errc::invalid_argument, "theta_count must divide the q-curve sample count");
    }
    const double slack = p.error_bound(curve.r);
    for (std::size_t j = 0; j < theta_count; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_count);
      const cplx z = std::polar(curve.r, theta);
      const cplx w = p.value(z);
      ++verdict.points_checked;
      if (contains(curve.samples, w, 1e-9 * (1.0 + std::abs(w)) + slack)) continue;
      // Outside the inscribed polygon; points on the true curve between two
      // vertices land here too, so decide by the preimage radius.
      std::size_t nearest = 0;
      for (std::size_t i = 1; i < samples; ++i) {
        if (std::abs(curve.samples[i] - w) < std::abs(curve.samples[nearest] - w)) nearest = i;
      }
      const double start = kTwoPi * static_cast<double>(nearest) / static_cast<double>(samples);
      const auto pre = invert(q.value, w, std::polar(curve.r, start));
      if (pre && std::abs(pre->zeta) <= curve.r + 1e-9 + slack / std::abs(pre->derivative)) continue;
      ++verdict.outside_count;
      const double excess = pre ? std::abs(pre->zeta) - curve.r : polygon_distance(curve.samples, w);
      if (verdict.consistent) {
        verdict.consistent = false;
        verdict.witness = z;
        verdict.witness_value = w;
      }
      verdict.worst_excess = std::max(verdict.worst_excess, excess);
    }
  }
  return verdict;
}

SubordinationVerdict subordination_falsify(const PointwiseEvaluator& p,
                                           const PointwiseEvaluator& q, const GridSpec& grid,
                                           std::size_t q_samples) {
  grid.validate();
  std::vector<DominantCurve> curves;
  for (double r : grid.radii) {
    DominantCurve c{r, {}};
    c.samples.reserve(q_samples);
    for (std::size_t j = 0; j < q_samples; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(q_samples);
      c.samples.push_back(q.value(std::polar(r, theta)));
    }
    check_simple_curve(c.samples);
    curves.push_back(std::move(c));
  }
  return subordination_falsify(p, q, curves, grid.theta_count);
}

double admissibility_margin(cplx mu, double lambda0, double u2, double v1) {
  const double bound = -0.5 * (1.0 - lambda0) * (1.0 + u2 * u2);
  if (v1 > bound + 1e-12 * (1.0 + std::abs(bound))) {
    throw MathError(Errc::outside_regime, "v1 above -(1-lambda0)(1+u2^2)/2");
  }
  const double a = mu.real() + lambda0;
  if (a == 0.0) return 0.0;
  const double b = mu.imag() + (1.0 - lambda0) * u2;
  const double den = a * a + b * b;
  if (den < 1e-16) throw MathError(Errc::outside_regime, "u = -mu lies outside the domain");
  return -a * v1 / den;
}

}  // namespace starlab
