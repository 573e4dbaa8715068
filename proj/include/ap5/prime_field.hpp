#pragma once

#include "ap5/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ap5 {

/// Residue class modulo the field prime, always kept in [0, p).
using Residue = std::uint64_t;

/// The prime field F_p. The modulus is checked for primality at construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  [[nodiscard]] std::uint64_t p() const noexcept { return p_; }

  [[nodiscard]] Residue reduce(std::int64_t v) const noexcept;
  [[nodiscard]] Residue reduce(const Int& v) const;

  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept { return a + b >= p_ ? a + b - p_ : a + b; }
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept { return mulmod_u64(a, b, p_); }
  [[nodiscard]] Residue pow(Residue a, std::uint64_t e) const noexcept { return powmod_u64(a, e, p_); }
  /// Multiplicative inverse; throws PreconditionError on zero.
  [[nodiscard]] Residue inv(Residue a) const;
  [[nodiscard]] Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// Legendre symbol (a/p) in {-1, 0, 1}; p = 2 reports 1 for every unit.
  [[nodiscard]] int legendre(Residue a) const noexcept;

  /// Smallest generator of F_p^*.
  [[nodiscard]] Residue primitive_root() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Square roots of x in F: {r, p - r} in increasing order, {0} for x = 0,
/// or nullopt for a non-residue. Tonelli-Shanks.
[[nodiscard]] std::optional<std::vector<Residue>> mod_sqrt(Residue x, const PrimeField& F);

/// The subgroup of nonzero n-th powers of F_p^*, i.e. the t-th roots of
/// unity for p = n t + 1, sorted. Throws PreconditionError unless p = 1 mod n.
[[nodiscard]] std::vector<Residue> nth_power_residues(std::uint64_t n, const PrimeField& F);

/// Signed representative of a residue in (-p/2, p/2].
[[nodiscard]] std::int64_t centered(Residue a, const PrimeField& F) noexcept;

}  // namespace ap5
