#pragma once

#include "ap5/json_io.hpp"
#include "ap5/mpoly.hpp"
#include "ap5/oracle.hpp"
#include "ap5/quotient_ring.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ap5 {

/// Coefficients of s^2, st, t^2, su, tu, u^2.
using QuadForm = std::array<Int, 6>;
/// theta^0, theta^1, theta^2 coordinates, i.e. X^3 + 14Y^3, -3X^2Y, 3XY^2.
using CubicSystem = std::array<QuadForm, 3>;

/// Literal data for the n = 3 and n = 5 checks, plus unverified reference facts.
struct SmallCaseFixtures {
  IntPoly cubic_modulus;   // theta^3 + 14
  std::vector<Int> unit_r;
  std::vector<Int> p5_cube_generator;
  std::array<CubicSystem, 2> kappa2_systems;
  IntPoly quintic_modulus;  // theta^5 + 7
  std::array<std::vector<Int>, 3> selmer_generators;
  std::vector<std::vector<Int>> deltas;
  std::vector<int> jacobian_ranks;
  std::vector<std::pair<Int, Int>> rational_points;
  json reference;
};

[[nodiscard]] SmallCaseFixtures load_small_fixtures(const std::string& path);

// n = 2

struct LocalCheck {
  int kappa = 0;
  unsigned modulus = 0;
  bool obstructed = false;
};

struct N2Obstructions {
  std::vector<LocalCheck> checks;  ///< every kappa at moduli 5 and 16
  bool sixteen_congruence = false; ///< x even, d odd gives 3x^4 + 20x^2d^2 + 10d^4 = 10 mod 16
  [[nodiscard]] bool obstructed(int kappa, unsigned modulus) const;
  [[nodiscard]] bool ok() const;
};

/// Residue enumeration of 3x^4 + 20x^2d^2 + 10d^4 = kappa b^2 with x = kappa a^2,
/// gcd(x, d) = 1, gcd(kappa a, b) = 1 and kappa = gcd(x, 10), imposed locally.
[[nodiscard]] N2Obstructions n2_local_obstructions();

/// a^12 (y^2 - x^3 + 400x^2 - 28000x) for x = 2B/a^4, y = 4dB/a^6, B = b + d^2 + 100a^4,
/// reduced by b^2 = d^4 + 200d^2a^4 + 3000a^8. Variables (a, d, b).
[[nodiscard]] MPoly n2_curve_map_residual();
[[nodiscard]] bool n2_curve_map_identity();

/// b^2 - (d^4 + 200d^2a^4 + 3000a^8) at b = -(d^2 + 100a^4).
[[nodiscard]] MPoly n2_branch_residual();
/// The branch residual is c a^k with c != 0, so a = 0.
[[nodiscard]] bool n2_branch_forces_a_zero();

// n = 3

struct EllieCheck {
  bool picard_to_square = false;  ///< the two forms of b^3 agree
  bool holds = false;             ///< Y^2 = X^3 + c after clearing denominators
  Int curve_constant;             ///< c = 7 kappa (10/kappa)^3
};

[[nodiscard]] EllieCheck n3_ellie_map_identity(int kappa);

/// Coordinates of r^i (5 - theta + theta^2)(s + t theta + u theta^2)^2 in Z[theta]/(theta^3 + 14).
[[nodiscard]] CubicSystem n3_kappa2_systems(unsigned i, const SmallCaseFixtures& fx);

struct DescentNorms {
  Int unit_norm;       ///< Norm(r)
  Int generator_norm;  ///< Norm(5 - theta + theta^2)
  [[nodiscard]] bool ok() const;
};
[[nodiscard]] DescentNorms n3_descent_norms(const SmallCaseFixtures& fx);

struct ParityCheck {
  std::array<bool, 2> contradiction{};  ///< no solution mod 2 with Y even, X odd
  std::array<bool, 2> relaxed{};        ///< some solution mod 2 with Y odd
  [[nodiscard]] bool ok() const;
};

[[nodiscard]] ParityCheck n3_parity_eliminate(const std::array<CubicSystem, 2>& systems);

/// X1^3 = Y1^4 + 5000 Y1^2 + 1875000 evaluated in a common quotient ring.
[[nodiscard]] bool on_picard_curve(const QuotientRingElem& X1, const QuotientRingElem& Y1);
/// (-150, w) with w^2 = -1500 lies on the curve and (-150, w + 1) does not.
[[nodiscard]] bool n3_picard_point_check();

// n = 5

/// (X - alpha)(X^4 + alpha X^3 + alpha^2 X^2 + alpha^3 X + alpha^4) = X^5 + 7*10^5, alpha = 10 theta.
[[nodiscard]] bool n5_factor_check();
/// Norm(30 - 10 theta) over theta^5 + 7.
[[nodiscard]] Int n5_norm_at_30();

struct DeltaRow {
  std::size_t j = 0;              ///< 1-based
  std::string literal_match;      ///< generator the entry equals verbatim, if any
  std::string square_class;       ///< product of generators in the same square class ("1" for trivial)
  bool consistent = false;
};

struct DeltaReport {
  std::vector<DeltaRow> rows;
  bool literal_ok = false;  ///< delta_1 = 1, delta_5 = a1, delta_3 = a2, delta_2 = a3
  bool distinct = false;    ///< the eight entries occupy eight different classes
};

/// Advisory: square classes from quadratic characters at split primes.
[[nodiscard]] DeltaReport n5_delta_table_check(const SmallCaseFixtures& fx, unsigned prime_budget = 50);

struct KnownPoints {
  bool listed_ok = false;
  std::vector<std::pair<Int, Int>> integral_points;  ///< Y >= 0 with |X| <= bound
};

[[nodiscard]] KnownPoints n5_known_points_check(const SmallCaseFixtures& fx, long bound = 10000);

/// Integer solutions with n = 5 behind X = 10b/(kappa^3 a^4); nullopt stands for the point at infinity.
/// Reported up to d -> -d and (x, y) -> (-x, -y), with x, d >= 0.
[[nodiscard]] std::vector<SolutionRecord> back_substitute(const std::optional<Rat>& X);

/// Largest |a| allowed for X: a^4 divides 10 * den(X), capped at 100.
[[nodiscard]] long back_substitute_bound(const Rat& X);

}  // namespace ap5
