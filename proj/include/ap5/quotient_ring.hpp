#pragma once

#include "ap5/int_poly.hpp"

#include <memory>
#include <vector>

namespace ap5 {

/// Element of Z[theta]/(f(theta)) for monic f, with integer coordinates in
/// the power basis of theta. Products are reduced eagerly.
class QuotientRingElem {
 public:
  QuotientRingElem(IntPoly modpoly, std::vector<Int> coords);
  /// Reduces an arbitrary-degree integer polynomial in theta.
  static QuotientRingElem from_poly(const IntPoly& modpoly, const IntPoly& value);
  static QuotientRingElem from_int(const IntPoly& modpoly, const Int& c);
  static QuotientRingElem theta(const IntPoly& modpoly);

  [[nodiscard]] const IntPoly& modpoly() const noexcept { return *modpoly_; }
  [[nodiscard]] const std::vector<Int>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t degree() const noexcept { return coords_.size(); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] IntPoly as_poly() const { return IntPoly(coords_); }

  /// Evaluate with theta -> r in F_q; q must be prime and r a root of modpoly mod q.
  [[nodiscard]] std::uint64_t eval_mod(std::uint64_t r, std::uint64_t q) const;

  QuotientRingElem& operator+=(const QuotientRingElem& o);
  QuotientRingElem& operator-=(const QuotientRingElem& o);
  QuotientRingElem& operator*=(const Int& s);

  friend QuotientRingElem operator+(QuotientRingElem a, const QuotientRingElem& b) { return a += b; }
  friend QuotientRingElem operator-(QuotientRingElem a, const QuotientRingElem& b) { return a -= b; }
  friend QuotientRingElem operator*(QuotientRingElem a, const Int& s) { return a *= s; }
  friend bool operator==(const QuotientRingElem& a, const QuotientRingElem& b);

 private:
  friend QuotientRingElem qring_mul(const QuotientRingElem& a, const QuotientRingElem& b);
  void require_same_ring(const QuotientRingElem& o) const;
  std::shared_ptr<const IntPoly> modpoly_;
  std::vector<Int> coords_;
};

/// Product reduced modulo the shared modulus; throws on a modulus mismatch.
[[nodiscard]] QuotientRingElem qring_mul(const QuotientRingElem& a, const QuotientRingElem& b);
[[nodiscard]] QuotientRingElem qring_pow(QuotientRingElem base, unsigned long e);
inline QuotientRingElem operator*(const QuotientRingElem& a, const QuotientRingElem& b) { return qring_mul(a, b); }

/// Norm to Z, i.e. Res(f, g) for the coordinate polynomial g.
[[nodiscard]] Int qring_norm(const QuotientRingElem& g);

enum class SquareVerdict { NonSquare, ProbablySquare };

/// Tests g against quadratic characters at degree-one primes: for up to
/// prime_budget rational primes q (coprime to disc f) with a root r of f
/// mod q, a non-residue g(r) proves that g is not a square in Q(theta).
/// Otherwise reports ProbablySquare, which is evidence only.
/// Throws InconclusiveError if no usable prime turns up.
[[nodiscard]] SquareVerdict square_class_test(const QuotientRingElem& g, unsigned prime_budget);

}  // namespace ap5
