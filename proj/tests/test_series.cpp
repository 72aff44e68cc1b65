#include <doctest.h>

#include <cmath>
#include <random>

#include "starlab/quadrature.hpp"
#include "starlab/series.hpp"
#include "support.hpp"

using namespace starlab;
using testing::damped_series;
using testing::error_of;
using testing::from_function;
using testing::max_diff;

TEST_CASE("construction rejects empty and non-finite coefficient vectors") {
  CHECK(error_of([] { TruncatedSeries(std::vector<cplx>{}); }) == Errc::invalid_argument);
  CHECK(error_of([] { TruncatedSeries({1.0, cplx(NAN, 0.0)}); }) == Errc::invalid_argument);
  CHECK(error_of([] { TruncatedSeries({1.0, cplx(0.0, INFINITY)}); }) == Errc::invalid_argument);
  CHECK(TruncatedSeries::zero(5).order() == 5);
}

TEST_CASE("binomial series matches the Gamma-function coefficients") {
  for (double s : {0.5, 1.0, 1.5, 2.0, 3.7}) {
    const auto b = TruncatedSeries::binomial(s, 60);
    for (std::size_t k = 0; k <= 60; ++k) {
      const double expected =
          std::exp(std::lgamma(k + s) - std::lgamma(s) - std::lgamma(k + 1.0));
      CHECK(std::abs(b[k] - expected) <= 1e-12 * std::max(1.0, expected));
    }
  }
}

TEST_CASE("products") {
  const TruncatedSeries one_plus({1.0, 1.0, 0.0, 0.0});
  const TruncatedSeries one_minus({1.0, -1.0, 0.0, 0.0});
  CHECK(max_diff(one_plus * one_minus, TruncatedSeries({1.0, 0.0, -1.0, 0.0})) == 0.0);

  const auto g = TruncatedSeries::binomial(1.0, 40);
  const auto sq = g * g;
  for (std::size_t k = 0; k <= 40; ++k) CHECK(sq[k] == cplx(k + 1.0));

  std::mt19937_64 rng(11);
  double worst_commute = 0.0;
  double worst_naive = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto a = damped_series(rng, 32, testing::in_unit_disk(rng), 1.0);
    const auto b = damped_series(rng, 32, testing::in_unit_disk(rng), 1.0);
    worst_commute = std::max(worst_commute, max_diff(a * b, b * a));
    worst_naive = std::max(worst_naive, max_diff(a * b, testing::naive_product(a, b)));
  }
  CHECK(worst_commute < 1e-14);
  CHECK(worst_naive < 1e-14);
}

TEST_CASE("mixed orders adopt the lesser order") {
  const auto a = TruncatedSeries::binomial(1.0, 10);
  const auto b = TruncatedSeries::binomial(2.0, 6);
  CHECK((a + b).order() == 6);
  CHECK((a * b).order() == 6);
  CHECK((a / b).order() == 6);
}

TEST_CASE("ring laws hold at rounding scale") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 64;
    const auto a = damped_series(rng, n, testing::in_unit_disk(rng), 1.0);
    const auto b = damped_series(rng, n, testing::in_unit_disk(rng), 1.0);
    const auto c = damped_series(rng, n, testing::in_unit_disk(rng), 1.0);
    CHECK(max_diff((a * b) * c, a * (b * c)) < 1e-13 * (n + 1) * (n + 1));
    CHECK(max_diff(a * (b + c), a * b + a * c) < 1e-13 * (n + 1));
    CHECK(max_diff(a + b, b + a) == 0.0);
  }
}

TEST_CASE("division") {
  const TruncatedSeries num({1.0, 0.0, -1.0, 0.0, 0.0});
  const TruncatedSeries den({1.0, -1.0, 0.0, 0.0, 0.0});
  CHECK(max_diff(num / den, TruncatedSeries({1.0, 1.0, 0.0, 0.0, 0.0})) < 1e-15);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const auto a = damped_series(rng, 64);
    const auto b = damped_series(rng, 64);
    CHECK(max_diff(a / a, TruncatedSeries::constant(1.0, 64)) < 1e-14);
    CHECK(max_diff((a * b) / b, a) < 1e-12);
  }
  CHECK(error_of([] {
          return TruncatedSeries::constant(1.0, 3) / TruncatedSeries({0.0, 1.0, 0.0, 0.0});
        }) == Errc::zero_constant_term);
}

TEST_CASE("exp and log") {
  const auto log_geometric = series_log(TruncatedSeries::binomial(1.0, 50));
  CHECK(log_geometric[0] == cplx(0.0));
  for (std::size_t k = 1; k <= 50; ++k) CHECK(std::abs(log_geometric[k] - 1.0 / k) < 1e-15);

  CHECK(max_diff(series_exp(TruncatedSeries::zero(20)), TruncatedSeries::constant(1.0, 20)) == 0.0);

  std::mt19937_64 rng(14);
  for (int i = 0; i < 30; ++i) {
    const auto u = damped_series(rng, 64);
    CHECK(max_diff(series_exp(series_log(u)), u) < 1e-12);
  }
  CHECK(error_of([] { return series_log(TruncatedSeries({2.0, 1.0})); }) ==
        Errc::not_unit_leading);
}

TEST_CASE("real powers") {
  const TruncatedSeries one_plus({1.0, 1.0, 0.0, 0.0});
  CHECK(max_diff(series_pow_real(one_plus, 2.0), TruncatedSeries({1.0, 2.0, 1.0, 0.0})) < 1e-15);

  const auto half = series_pow_real(TruncatedSeries::binomial(2.0, 100), 0.5);
  CHECK(max_diff(half, TruncatedSeries::binomial(1.0, 100)) < 1e-12);

  std::mt19937_64 rng(15);
  double worst_add = 0.0;
  double worst_exp = 0.0;
  for (int i = 0; i < 40; ++i) {
    const auto u = damped_series(rng, 64);
    const double s = -3.0 + 6.0 * testing::uniform(rng);
    const double t = -3.0 + 6.0 * testing::uniform(rng);
    worst_add = std::max(worst_add, max_diff(series_pow_real(u, s) * series_pow_real(u, t),
                                             series_pow_real(u, s + t)));
    worst_exp = std::max(worst_exp, max_diff(series_pow_real(u, s),
                                             series_exp(cplx(s) * series_log(u))));
  }
  CHECK(worst_add < 1e-11);
  CHECK(worst_exp < 1e-11);
  CHECK(error_of([] { return series_pow_real(TruncatedSeries({0.5, 1.0}), 2.0); }) ==
        Errc::not_unit_leading);
}

TEST_CASE("z-derivative and Horner") {
  const auto g = TruncatedSeries::binomial(1.0, 10);
  const auto d = z_derivative(g);
  for (std::size_t k = 0; k <= 10; ++k) CHECK(d[k] == cplx(static_cast<double>(k)));
  CHECK(std::abs(horner(TruncatedSeries::binomial(1.0, 200), 0.5) - 2.0) < 1e-15);
}

TEST_CASE("scaled residual measures against the running scale") {
  const TruncatedSeries a({0.0, 10.0, 100.0});
  const TruncatedSeries b({0.0, 10.0, 101.0});
  CHECK(scaled_residual(a, b, a) == doctest::Approx(1.0 / 101.0));
  CHECK(scaled_residual(a, b, TruncatedSeries::zero(2)) == doctest::Approx(1.0));
}

TEST_CASE("elements") {
  CHECK(error_of([] { AnalyticElement(1.0, TruncatedSeries({2.0, 1.0})); }) ==
        Errc::not_unit_leading);
  const auto e = AnalyticElement::from_series(0.5, TruncatedSeries({4.0, 2.0, 0.0}));
  CHECK(e.scale() == cplx(4.0));
  CHECK(e.unit()[1] == cplx(0.5));
  CHECK(max_diff(e.body(), TruncatedSeries({4.0, 2.0, 0.0})) == 0.0);

  const auto product = e * AnalyticElement(1.5, TruncatedSeries::binomial(1.0, 2));
  CHECK(product.head() == cplx(2.0));
}

TEST_CASE("pointwise evaluation of elements") {
  const AnalyticElement z(1.0, TruncatedSeries::constant(1.0, 4));
  CHECK(element_eval(z, 0.5).value == cplx(0.5));

  const auto koebe = NormalizedFunction::from_unit(TruncatedSeries::binomial(2.0, 255));
  CHECK(std::abs(koebe(0.5) - 2.0) < 1e-12);

  const AnalyticElement root(0.5, TruncatedSeries::constant(1.0, 4));
  CHECK(std::abs(element_eval(root, 0.25).value - 0.5) < 1e-15);
  CHECK(std::abs(element_eval(root, -0.25).value - cplx(0.0, 0.5)) < 1e-15);
  CHECK(error_of([&] { return element_eval(AnalyticElement(-0.5, TruncatedSeries::constant(1.0, 2)), 0.0); }) ==
        Errc::branch_point_at_zero);
  CHECK(error_of([&] { return element_eval(z, 1.0); }) == Errc::invalid_argument);
}

TEST_CASE("the tail estimate bounds the Koebe truncation error") {
  auto closed = [](cplx z) { return z / ((1.0 - z) * (1.0 - z)); };
  for (std::size_t n : {128u, 256u}) {
    const AnalyticElement koebe(1.0, TruncatedSeries::binomial(2.0, n - 1));
    for (double r : {0.3, 0.5, 0.8, 0.9}) {
      for (int j = 0; j < 32; ++j) {
        const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / 32.0);
        const auto ev = element_eval(koebe, z);
        CHECK(std::abs(ev.value - closed(z)) <= ev.tail_bound + 1e-13 * std::abs(closed(z)));
      }
    }
  }
}

TEST_CASE("principal powers") {
  CHECK(std::abs(principal_power(-1.0, 0.5) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(principal_power(cplx(0.3, 0.4), 3.0) == cplx(0.3, 0.4) * cplx(0.3, 0.4) * cplx(0.3, 0.4));
  CHECK(principal_power(0.0, 2.0) == cplx(0.0));
}

TEST_CASE("termwise integration") {
  const auto one = integrate_termwise(AnalyticElement(0.0, TruncatedSeries::constant(1.0, 8)));
  CHECK(one.head() == cplx(1.0));
  CHECK(max_diff(one.body(), TruncatedSeries::constant(1.0, 8)) == 0.0);

  // int_0^z (1-t)^{-2} dt = z/(1-z)
  const auto prim = integrate_termwise(AnalyticElement(0.0, TruncatedSeries::binomial(2.0, 128)));
  CHECK(prim.head() == cplx(1.0));
  CHECK(max_diff(prim.body(), TruncatedSeries::binomial(1.0, 128)) < 1e-12);

  // t^{delta-1} t^alpha with alpha + delta = 2 integrates to z^2/2
  const double alpha = 0.7;
  const double delta = 2.0 - alpha;
  const auto sq = integrate_termwise(AnalyticElement(alpha, TruncatedSeries::constant(1.0, 4)).times_power(delta - 1.0));
  CHECK(std::abs(sq.head() - 2.0) < 1e-15);
  CHECK(std::abs(sq.body()[0] - 0.5) < 1e-15);

  CHECK(error_of([] { return integrate_termwise(AnalyticElement(-1.5, TruncatedSeries::constant(1.0, 3))); }) ==
        Errc::divergent_at_origin);
  // z^{-1} itself, and z^{-2} + z^{-1} + ..., would need a logarithm
  CHECK(error_of([] { return integrate_termwise(AnalyticElement(-1.0, TruncatedSeries::constant(1.0, 3))); }) ==
        Errc::logarithmic_term);
  CHECK(error_of([] { return integrate_termwise(AnalyticElement(-2.0, TruncatedSeries::constant(1.0, 3))); }) ==
        Errc::logarithmic_term);
}

TEST_CASE("normalized functions") {
  CHECK(error_of([] { NormalizedFunction(TruncatedSeries({0.0, 2.0, 1.0})); }) == Errc::invalid_argument);
  CHECK(error_of([] { NormalizedFunction(TruncatedSeries({0.1, 1.0, 1.0})); }) == Errc::invalid_argument);
  const auto id = NormalizedFunction::identity(6);
  CHECK(id.order() == 6);
  CHECK(id(0.3) == cplx(0.3));

  auto closed = [](cplx z) { return z / (1.0 - z); };
  const auto f = NormalizedFunction::from_unit(TruncatedSeries::binomial(1.0, 63), closed);
  CHECK(f.has_closed_form());
  const auto series_only = NormalizedFunction(f.series());
  for (int j = 0; j < 16; ++j) {
    const cplx z = std::polar(0.5, 2.0 * std::numbers::pi * j / 16.0);
    CHECK(std::abs(f(z) - series_only(z)) <= tail_bound(f.series(), 0.5) + 1e-15);
  }
  CHECK(max_diff(f.unit(), TruncatedSeries::binomial(1.0, 63)) == 0.0);
}

TEST_CASE("quadrature") {
  using quad::integrate;
  using quad::integrate_half_line;
  CHECK(std::abs(integrate([](double x) { return cplx(x * x); }, 0.0, 1.0) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(integrate([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, std::numbers::pi) -
                 cplx(0.0, 2.0)) < 1e-14);
  CHECK(std::abs(integrate_half_line([](double x) { return cplx(std::exp(-x)); }) - 1.0) < 1e-14);
  // Gamma(4) = 3! with the x^{m-1} e^{-x} kernel of the first family
  CHECK(std::abs(integrate_half_line([](double x) { return cplx(x * x * x * std::exp(-x)); }) - 6.0) <
        1e-12);
  CHECK(std::abs(integrate([](double x) { return cplx(1.0 / (1.0 + x * x)); }, 0.0, 1.0) -
                 std::numbers::pi / 4.0) < 1e-15);
  CHECK(error_of([] { return integrate_half_line([](double) { return cplx(1.0); }); }) ==
        Errc::quadrature_non_convergence);
}
