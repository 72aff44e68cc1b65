#pragma once

#include "starlab/series.hpp"

namespace starlab {

enum class Family { first = 1, second = 2 };

/// Parameters of the operator families J_m^1, J_m^2 and of the m = 1
/// operator J. delta is always derived from alpha + delta = beta + gamma.
class OperatorParams {
 public:
  /// J_m^j; checks Re gamma >= 0 (first family) or m - 1 + Re gamma >= 0 (second).
  static OperatorParams family_member(double alpha, double beta, cplx gamma, unsigned m,
                                      Family family);
  /// The single operator J (m = 1); checks beta + Re gamma >= 0 only.
  static OperatorParams single(double alpha, double beta, cplx gamma);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  cplx gamma() const noexcept { return gamma_; }
  cplx delta() const noexcept { return cplx(beta_ - alpha_) + gamma_; }
  unsigned m() const noexcept { return m_; }
  Family family() const noexcept { return family_; }

  /// Same operator with a different m; family conditions are re-checked for
  /// m >= 1, and m = 0 denotes J_0^beta (the power f^alpha).
  OperatorParams with_m(unsigned m) const;

 private:
  OperatorParams(double alpha, double beta, cplx gamma, unsigned m, Family family)
      : alpha_(alpha), beta_(beta), gamma_(gamma), m_(m), family_(family) {}

  double alpha_;
  double beta_;
  cplx gamma_;
  unsigned m_;
  Family family_;
};

/// mu and xi of mu J_m^beta + z (J_m^beta)' = xi J_{m-1}^beta.
struct MuXi {
  cplx mu;
  cplx xi;
};
MuXi mu_xi(const OperatorParams& p);

/// f(z)^alpha = z^alpha (f/z)^alpha; unit coefficient k-1 is A_k(alpha).
AnalyticElement f_power_alpha(const NormalizedFunction& f, double alpha);

/// Multiplier of A_k(alpha) in the expansion of J_m^beta, k >= 2.
/// The second family's Gamma ratio is the finite product
/// prod_{i<m} (beta+gamma+i)/(beta+gamma+k-1+i). m = 0 gives 1.
cplx weight_factor(const OperatorParams& p, unsigned k);

/// J_m^beta = z^beta (1 + sum_k w_k A_k z^{k-1}). For m = 0 this is the
/// series z^{beta-alpha} f^alpha, whose unit part equals that of f^alpha.
AnalyticElement apply_Jm_power(const NormalizedFunction& f, const OperatorParams& p);

/// J_m^j(f) = z (unit of J_m^beta)^{1/beta}. alpha = 0 gives z.
NormalizedFunction apply_Jm(const NormalizedFunction& f, const OperatorParams& p);

/// J(f) of the single operator, built by termwise integration of
/// t^{delta-1} f(t)^alpha; independent of the weight map used by apply_Jm.
NormalizedFunction apply_J_eq2(const NormalizedFunction& f, const OperatorParams& p);

/// J_m^j(f)(z) from the defining integral along t = s z, for 0 < |z| <= 0.5.
cplx quadrature_oracle(const NormalizedFunction& f, const OperatorParams& p, cplx z,
                       double tol = 1e-12);

/// Scaled max coefficient residual of mu J_m^beta + z(J_m^beta)' - xi J_{m-1}^beta.
double check_recurrence7(const NormalizedFunction& f, const OperatorParams& p);

/// Scaled series residual of
/// D^{n+1}J_{m-1}^beta / D^n J_{m-1}^beta = p + z p'/(mu + p),
/// with p the level-n Salagean ratio of J_m^beta.
double ratio_relation8(const NormalizedFunction& f, const OperatorParams& p, unsigned n);

}  // namespace starlab
