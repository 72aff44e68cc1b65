#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starlab/geometry.hpp"
#include "starlab/series.hpp"

namespace starlab {

struct HerglotzAtom {
  double weight;
  cplx point;
};

/// Discrete Herglotz measure: p(z) = sum_j w_j (1 + x_j z)/(1 - x_j z), a
/// member of the Caratheodory class P.
class HerglotzAtoms {
 public:
  /// Throws InvalidArgument unless 1 <= count <= 16, weights are positive and
  /// sum to 1, and points are unimodular (both within 1e-12).
  explicit HerglotzAtoms(std::vector<HerglotzAtom> atoms);

  /// `count` atoms with uniform angles and weights from normalized
  /// exponential draws.
  static HerglotzAtoms random(std::uint64_t seed, std::size_t count);

  const std::vector<HerglotzAtom>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<HerglotzAtom> atoms_;
};

struct CaratheodoryFunction {
  PointwiseEvaluator evaluator;
  TruncatedSeries series;
};

CaratheodoryFunction p_from_atoms(const HerglotzAtoms& atoms, std::size_t order);

/// z/(1-z)^{2(1-lambda)}, with its closed form attached.
NormalizedFunction koebe_lambda(double lambda, std::size_t order);

/// Solves z f'/f = lambda + (1-lambda) p:
/// f = z exp(int_0^z (lambda + (1-lambda) p(t) - 1)/t dt). The result has
/// order p.order() + 1.
NormalizedFunction starlike_from_p(const TruncatedSeries& p, double lambda);

/// Member of S_n(lambda), n <= 6: the inverse Salagean image of starlike_from_p.
NormalizedFunction sn_member(const TruncatedSeries& p, double lambda, unsigned n);

/// Deterministic draw of a member of S_n(lambda) of the given order from
/// 1..max_atoms Herglotz atoms.
NormalizedFunction random_sn_member(std::uint64_t seed, double lambda, unsigned n,
                                    std::size_t order, std::size_t max_atoms = 8);

}  // namespace starlab
