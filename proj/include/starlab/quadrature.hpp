#pragma once

#include <complex>
#include <functional>

namespace starlab::quad {

using cplx = std::complex<double>;
using Integrand = std::function<cplx(double)>;

struct Options {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_depth = 20;
};

/// Adaptive 16-point Gauss-Legendre on [a, b] with interval bisection.
/// Throws QuadratureNonConvergence when a panel still disagrees with its two
/// halves after `max_depth` bisections.
cplx integrate(const Integrand& f, double a, double b, const Options& opt = {});

/// Integral over [0, inf) of an integrand decaying at infinity. Panels
/// [0,1], [1,2], [2,4], ... are added until two consecutive panels fall below
/// tolerance; at most 64 panels.
cplx integrate_half_line(const Integrand& f, const Options& opt = {});

}  // namespace starlab::quad
