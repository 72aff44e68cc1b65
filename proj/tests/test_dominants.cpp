#include <doctest.h>

#include <cmath>
#include <numbers>

#include "starlab/dominants.hpp"
#include "support.hpp"

using namespace starlab;
using testing::error_of;

namespace {

constexpr double pi = std::numbers::pi;

cplx q_mu0(cplx z) { return 1.0 / (1.0 - z); }

cplx q_mu1(cplx z) {
  const cplx w = 1.0 - z;
  return z * z / (w * (w * std::log(w) + z)) - 1.0;
}

// mu = 0, lambda0 = 1/4: the integral of (1-t)^{-3/2} is 2((1-z)^{-1/2} - 1).
cplx q_quarter(cplx z) {
  return z * std::pow(1.0 - z, -1.5) / (2.0 * (std::pow(1.0 - z, -0.5) - 1.0));
}

std::vector<cplx> disk_points(double r_max) {
  std::vector<cplx> pts;
  for (double r : {0.1, 0.35, 0.6, r_max}) {
    for (int j = 0; j < 12; ++j) pts.push_back(std::polar(r, 2.0 * pi * (j + 0.25) / 12.0));
  }
  return pts;
}

}  // namespace

TEST_CASE("half-plane map") {
  CHECK(halfplane_h(0.0, 0.0) == cplx(1.0));
  CHECK(halfplane_h(0.4, 0.0) == cplx(1.0));
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(std::abs(halfplane_h(0.0, -r) - (1.0 - r) / (1.0 + r)) < 1e-15);
  }
  CHECK(halfplane_h(0.3, cplx(0.0, 0.5)).real() > 0.3);

  double worst = 1.0;
  for (int i = 1; i <= 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const cplx z = std::polar(0.999 * i / 100.0, 2.0 * pi * j / 100.0);
      worst = std::min(worst, halfplane_h(0.3, z).real());
    }
  }
  CHECK(worst > 0.3);
}

TEST_CASE("series pipeline reproduces the closed forms") {
  for (const cplx z : disk_points(0.9)) {
    CHECK(std::abs(lemma2_pipeline({0.0, 0.0}, z) - q_mu0(z)) < 1e-10);
    CHECK(std::abs(lemma2_pipeline({1.0, 0.0}, z) - q_mu1(z)) < 1e-9);
    CHECK(std::abs(lemma2_pipeline({0.0, 0.25}, z) - q_quarter(z)) < 1e-9);
  }
  CHECK(lemma2_pipeline({0.7, 0.2}, 0.0) == cplx(1.0));
  const auto s = lemma2_series({2.0, 0.3}, 64);
  CHECK(std::abs(s[0] - 1.0) < 1e-15);
  CHECK(error_of([] { return lemma2_pipeline({0.0, 0.0}, 0.995); }) == Errc::invalid_argument);
}

TEST_CASE("quadrature form agrees with the series pipeline") {
  double worst = 0.0;
  for (double mu : {0.0, 0.5, 1.0, 2.0}) {
    for (double l0 : {0.0, 0.25}) {
      for (const cplx z : disk_points(0.9)) {
        worst = std::max(worst, std::abs(best_dominant_q({mu, l0}, z) - lemma2_pipeline({mu, l0}, z)));
      }
    }
  }
  CHECK(worst < 1e-8);
  CHECK(std::abs(best_dominant_q({0.0, 0.0}, -0.5) - 2.0 / 3.0) < 1e-12);
  CHECK(best_dominant_q({1.5, 0.1}, 0.0) == cplx(1.0));
  CHECK(std::abs(best_dominant_q({1.5, 0.1}, 1e-9) - 1.0) < 1e-8);
}

TEST_CASE("dominant_q closed forms") {
  for (const cplx z : disk_points(0.99)) {
    CHECK(std::abs(dominant_q({0.0, 0.0}, z) - q_mu0(z)) < 1e-12);
    CHECK(std::abs(dominant_q({1.0, 0.0}, z) - q_mu1(z)) < 1e-9);
  }
}

TEST_CASE("differential equation residual") {
  CHECK(verify_ode4({0.0, 0.0}) < 1e-6);
  CHECK(verify_ode4({1.0, 0.0}) < 1e-6);
  CHECK(verify_ode4({2.0, 0.3}) < 1e-6);
  CHECK(verify_ode4({0.5, 0.25}) < 1e-6);
}

TEST_CASE("limits at the boundary") {
  const double ln2 = std::log(2.0);
  const double rho1 = (3.0 - 4.0 * ln2) / (2.0 * (2.0 * ln2 - 1.0));
  CHECK(std::abs(rho1 - 0.29434972478104515) < 1e-15);
  CHECK(std::abs(rho_limit({0.0, 0.0}) - 0.5) < 1e-9);
  CHECK(std::abs(rho_limit({1.0, 0.0}) - rho1) < 1e-9);

  // Fixture from the closed form of q_quarter at z = -1.
  const double rho_quarter = std::pow(2.0, -1.5) / (2.0 * (1.0 - std::pow(2.0, -0.5)));
  CHECK(std::abs(rho_quarter - 0.603553390593274) < 1e-14);
  CHECK(std::abs(rho_limit({0.0, 0.25}) - rho_quarter) < 1e-7);
  CHECK(std::abs(rho_limit_extrapolated({0.0, 0.0}) - 0.5) < 1e-7);
  CHECK(std::abs(rho_limit_extrapolated({1.0, 0.0}) - rho1) < 1e-7);

  const double previous = (std::sqrt(17.0) - 3.0) / 4.0;
  CHECK(0.5 > previous);
  CHECK(rho1 > previous);
}

TEST_CASE("conjugate symmetry") {
  for (const DominantSpec spec : {DominantSpec{0.5, 0.0}, DominantSpec{2.0, 0.3}}) {
    for (const cplx z : disk_points(0.9)) {
      CHECK(std::abs(best_dominant_q(spec, std::conj(z)) - std::conj(best_dominant_q(spec, z))) < 1e-12);
    }
  }
}

TEST_CASE("minimum of Re q sits at theta = pi") {
  for (double mu : {0.0, 1.0}) {
    for (double r : {0.5, 0.9, 0.99}) {
      const auto curve = dominant_curve({mu, 0.0}, r, 1024);
      REQUIRE(curve.samples.size() == 1024);
      std::size_t arg = 0;
      for (std::size_t j = 1; j < curve.samples.size(); ++j) {
        if (curve.samples[j].real() < curve.samples[arg].real()) arg = j;
      }
      CHECK(arg == 512);
      CHECK(std::abs(curve.samples[arg] - dominant_q({mu, 0.0}, -r)) < 1e-12);
    }
  }
}

TEST_CASE("dominant parameter validation") {
  CHECK(error_of([] { DominantSpec{-0.1, 0.0}.validate(); return 0; }) == Errc::invalid_argument);
  CHECK(error_of([] { DominantSpec{0.0, 1.0}.validate(); return 0; }) == Errc::invalid_argument);
  CHECK(error_of([] { DominantSpec{0.0, -0.2}.validate(); return 0; }) == Errc::invalid_argument);
  CHECK(error_of([] { DominantSpec{0.0, 0.0, 2.0}.validate(); return 0; }) == Errc::invalid_argument);
  CHECK_NOTHROW(DominantSpec{3.0, 0.9}.validate());
}
