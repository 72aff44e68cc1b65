#include "starlab/errors.hpp"

namespace starlab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::zero_constant_term: return "ZeroConstantTerm";
    case Errc::not_unit_leading: return "NotUnitLeading";
    case Errc::branch_point_at_zero: return "BranchPointAtZero";
    case Errc::divergent_at_origin: return "DivergentAtOrigin";
    case Errc::logarithmic_term: return "LogarithmicTerm";
    case Errc::pole_in_weight: return "PoleInWeight";
    case Errc::quadrature_non_convergence: return "QuadratureNonConvergence";
    case Errc::extrapolation_unstable: return "ExtrapolationUnstable";
    case Errc::tail_too_large: return "TailTooLarge";
    case Errc::curve_self_intersection: return "CurveSelfIntersection";
    case Errc::outside_regime: return "OutsideRegime";
  }
  return "Unknown";
}

}  // namespace starlab
