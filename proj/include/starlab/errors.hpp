#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starlab {

enum class Errc {
  invalid_argument,
  zero_constant_term,
  not_unit_leading,
  branch_point_at_zero,
  divergent_at_origin,
  logarithmic_term,
  pole_in_weight,
  quadrature_non_convergence,
  extrapolation_unstable,
  tail_too_large,
  curve_self_intersection,
  outside_regime,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (tests, the CLI) can branch on the kind without parsing messages.
class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace starlab
