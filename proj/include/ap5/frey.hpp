#pragma once

#include "ap5/ec_fp.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace ap5 {

/// kappa = gcd(x, 10) selects one of four Frey models. Throws on other values.
[[nodiscard]] std::uint64_t frey_level(int kappa);

[[nodiscard]] bool is_valid_kappa(int kappa) noexcept;

/// Residue data (a, b, T) with (10/kappa) T^2 = 7 kappa^(4n-5) a^4 + b in F_p,
/// where a and b stand in for a^n and b^n.
struct SieveTriple {
  Residue a = 0, b = 0, T = 0;
  friend auto operator<=>(const SieveTriple&, const SieveTriple&) = default;
};

/// Right-hand side 7 kappa^(4n-5) a^4 + b of the T relation.
[[nodiscard]] Residue frey_relation_rhs(int kappa, std::uint64_t n, const PrimeField& F, Residue a, Residue b);

/// Reduction of E_kappa over F_p after substituting (a^n, b^n, T) -> (a, b, T).
/// Models:
///   kappa=1:  y^2 = x^3 + 20T x^2 + 10b x
///   kappa=2:  y^2 + xy = x^3 + (5T-1)/4 x^2 + 35*2^(4n-11) a^4 x
///   kappa=5:  y^2 = x^3 + 4T x^2 + 2b x
///   kappa=10: y^2 + xy = x^3 + (T-1)/4 x^2 + 7*10^(4n-11) a^4 x
/// Throws PreconditionError when p divides 70.
[[nodiscard]] EllipticCurveFp instantiate(int kappa, Residue a, Residue b, Residue T, std::uint64_t n,
                                          const PrimeField& F);

/// Every T in F_p satisfying the relation, sorted.
[[nodiscard]] std::vector<Residue> solve_T(int kappa, std::uint64_t n, const PrimeField& F, Residue a, Residue b);

/// Kraus trace set over a, b in mu_n(F_p). Singular instantiations are kept
/// apart rather than contributing a trace.
struct KrausTraceSet {
  std::set<long> traces;
  std::vector<SieveTriple> singular;
  std::size_t triples = 0;
};

/// Requires p = 1 mod n and p coprime to 70n.
[[nodiscard]] KrausTraceSet kraus_trace_set(int kappa, std::uint64_t n, std::uint64_t p);

}  // namespace ap5
