#include "starlab/genfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "starlab/errors.hpp"
#include "starlab/salagean.hpp"

namespace starlab {

HerglotzAtoms::HerglotzAtoms(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty() || atoms_.size() > 16) {
    throw MathError(Errc::invalid_argument, "Herglotz measure needs 1..16 atoms");
  }
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.weight > 0.0)) throw MathError(Errc::invalid_argument, "atom weights must be positive");
    if (std::abs(std::abs(a.point) - 1.0) > 1e-12) {
      throw MathError(Errc::invalid_argument, "atom points must be unimodular");
    }
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw MathError(Errc::invalid_argument, "atom weights must sum to 1");
}

HerglotzAtoms HerglotzAtoms::random(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  // Raw engine output keeps draws identical across standard libraries.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<HerglotzAtom> atoms(count);
  double total = 0.0;
  for (auto& a : atoms) {
    a.weight = -std::log1p(-uniform()) + 1e-3;
    a.point = std::polar(1.0, 2.0 * std::numbers::pi * uniform());
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  // Renormalize exactly against the accumulated rounding of the division.
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) sum += atoms[i].weight;
  atoms.back().weight = 1.0 - sum;
  return HerglotzAtoms(std::move(atoms));
}

CaratheodoryFunction p_from_atoms(const HerglotzAtoms& atoms, std::size_t order) {
  std::vector<cplx> c(order + 1, cplx{});
  c[0] = 1.0;
  for (const auto& a : atoms.atoms()) {
    cplx power = 1.0;
    for (std::size_t k = 1; k <= order; ++k) {
      power *= a.point;
      c[k] += 2.0 * a.weight * power;
    }
  }
  auto list = atoms.atoms();
  auto eval = [list](cplx z) {
    cplx acc{};
    for (const auto& a : list) acc += a.weight * (1.0 + a.point * z) / (1.0 - a.point * z);
    return acc;
  };
  return {PointwiseEvaluator::from_closed_form(eval), TruncatedSeries(std::move(c))};
}

NormalizedFunction koebe_lambda(double lambda, std::size_t order) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw MathError(Errc::invalid_argument, "koebe_lambda needs 0 <= lambda < 1");
  }
  const double s = 2.0 * (1.0 - lambda);
  auto closed = [s](cplx z) { return z * std::pow(1.0 - z, -s); };
  return NormalizedFunction::from_unit(TruncatedSeries::binomial(s, order - 1), closed,
                                       "koebe_lambda");
}

NormalizedFunction starlike_from_p(const TruncatedSeries& p, double lambda) {
  if (std::abs(p[0] - 1.0) > 1e-12) throw MathError(Errc::not_unit_leading, "p(0) must be 1");
  const std::size_t n = p.order();
  // (lambda + (1-lambda) p - 1)/t has coefficients (1-lambda) p_{k+1}; integrating
  // gives (1-lambda) p_k / k at z^k.
  std::vector<cplx> l(n + 1, cplx{});
  for (std::size_t k = 1; k <= n; ++k) l[k] = (1.0 - lambda) * p[k] / static_cast<double>(k);
  return NormalizedFunction::from_unit(series_exp(TruncatedSeries(std::move(l))));
}

NormalizedFunction sn_member(const TruncatedSeries& p, double lambda, unsigned n) {
  if (n > 6) throw MathError(Errc::invalid_argument, "sn_member supports n <= 6");
  if (!(lambda >= 0.0 && lambda < 1.0)) throw MathError(Errc::invalid_argument, "lambda must lie in [0,1)");
  return salagean_inverse(starlike_from_p(p, lambda), n);
}

NormalizedFunction random_sn_member(std::uint64_t seed, double lambda, unsigned n,
                                    std::size_t order, std::size_t max_atoms) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t count = 1 + static_cast<std::size_t>(rng() % max_atoms);
  const auto atoms = HerglotzAtoms::random(rng(), count);
  return sn_member(p_from_atoms(atoms, order - 1).series, lambda, n);
}

}  // namespace starlab
