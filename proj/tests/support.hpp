#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "starlab/errors.hpp"
#include "starlab/series.hpp"

namespace testing {

using starlab::cplx;
using starlab::TruncatedSeries;

inline double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline cplx in_unit_disk(std::mt19937_64& rng) {
  return std::polar(std::sqrt(uniform(rng)), 2.0 * std::numbers::pi * uniform(rng));
}

/// c_0 = lead, |c_k| <= damping^k: keeps reciprocals and logs well scaled.
inline TruncatedSeries damped_series(std::mt19937_64& rng, std::size_t order, cplx lead = 1.0,
                                     double damping = 0.45) {
  std::vector<cplx> c(order + 1);
  c[0] = lead;
  double bound = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    bound *= damping;
    c[k] = bound * in_unit_disk(rng);
  }
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries from_function(std::size_t order, auto coefficient) {
  std::vector<cplx> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = coefficient(k);
  return TruncatedSeries(std::move(c));
}

/// f'(z) as a plain series, straight from the coefficients.
inline TruncatedSeries derivative(const TruncatedSeries& f) {
  return from_function(f.order() - 1, [&](std::size_t k) { return (k + 1.0) * f[k + 1]; });
}

/// Schoolbook truncated Cauchy product, kept apart from the library's.
inline TruncatedSeries naive_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return from_function(n, [&](std::size_t k) {
    cplx s{};
    for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
    return s;
  });
}

inline double max_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  return starlab::max_abs_difference(a, b);
}

template <typename F>
starlab::Errc error_of(F&& f) {
  try {
    f();
  } catch (const starlab::MathError& e) {
    return e.code();
  }
  throw std::logic_error("expected a MathError");
}

}  // namespace testing
