#pragma once

#include "ap5/prime_field.hpp"

#include <cstdint>

namespace ap5 {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p.
struct EllipticCurveFp {
  PrimeField F;
  Residue a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  /// Reduces integer coefficients into F.
  static EllipticCurveFp from_ints(const PrimeField& F, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                   std::int64_t a4, std::int64_t a6);
};

/// Delta from the b2, b4, b6, b8 formulary. Requires p > 3.
[[nodiscard]] Residue discriminant(const EllipticCurveFp& E);

[[nodiscard]] inline bool is_singular(const EllipticCurveFp& E) { return discriminant(E) == 0; }

/// a_p = p + 1 - #E(F_p), by a character sum over x after completing the
/// square in y. Throws BadReductionError when Delta = 0.
[[nodiscard]] long ap_trace(const EllipticCurveFp& E);

}  // namespace ap5
