#include "starlab/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "starlab/errors.hpp"

namespace starlab::quad {

namespace {

constexpr int kPoints = 16;
constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

struct Rule {
  std::array<double, kPoints> nodes{};
  std::array<double, kPoints> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev-like initial guess.
Rule make_rule() {
  Rule rule;
  for (int i = 0; i < kPoints; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kPoints + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= kPoints; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = kPoints * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

cplx panel(const Integrand& f, double a, double b) {
  const auto& r = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  cplx acc{};
  for (int i = 0; i < kPoints; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
  return acc * half;
}

cplx refine(const Integrand& f, double a, double b, cplx whole, double tol, int depth,
            int max_depth) {
  const double mid = 0.5 * (a + b);
  const cplx left = panel(f, a, mid);
  const cplx right = panel(f, mid, b);
  const cplx sum = left + right;
  const double diff = std::abs(sum - whole);
  // Below the rounding floor of the panel itself no further bisection helps.
  if (diff <= tol || diff <= kRoundoff * (std::abs(left) + std::abs(right))) return sum;
  if (depth >= max_depth) {
    throw MathError(Errc::quadrature_non_convergence,
                    "panel [" + std::to_string(a) + ", " + std::to_string(b) +
                        "] did not converge");
  }
  return refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
         refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

cplx integrate(const Integrand& f, double a, double b, const Options& opt) {
  if (a == b) return {};
  const cplx whole = panel(f, a, b);
  const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(whole));
  return refine(f, a, b, whole, tol, 0, opt.max_depth);
}

cplx integrate_half_line(const Integrand& f, const Options& opt) {
  cplx total = integrate(f, 0.0, 1.0, opt);
  double a = 1.0;
  double width = 1.0;
  int quiet = 0;
  for (int i = 0; i < 64; ++i) {
    const cplx piece = integrate(f, a, a + width, opt);
    total += piece;
    a += width;
    width *= 2.0;
    if (std::abs(piece) <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
      if (++quiet == 2) return total;
    } else {
      quiet = 0;
    }
  }
  throw MathError(Errc::quadrature_non_convergence, "half-line integrand does not decay");
}

}  // namespace starlab::quad
