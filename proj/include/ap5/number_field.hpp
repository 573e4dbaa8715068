#pragma once

#include "ap5/int_poly.hpp"

#include <memory>
#include <vector>

namespace ap5 {

/// Element of K = Q[x]/(m) in the power basis 1, x, ..., x^(deg m - 1).
/// m is monic; irreducibility is assumed, not re-verified.
class NumberFieldElem {
 public:
  NumberFieldElem(IntPoly minpoly, std::vector<Rat> coords);

  static NumberFieldElem from_int(const IntPoly& minpoly, const Int& c);
  /// The class of x itself.
  static NumberFieldElem generator(const IntPoly& minpoly);

  [[nodiscard]] const IntPoly& minpoly() const noexcept { return *minpoly_; }
  [[nodiscard]] const std::vector<Rat>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t degree() const noexcept { return coords_.size(); }
  [[nodiscard]] bool is_zero() const;
  /// True when every coordinate is an integer.
  [[nodiscard]] bool has_integral_coords() const;

  NumberFieldElem& operator+=(const NumberFieldElem& o);
  NumberFieldElem& operator-=(const NumberFieldElem& o);
  NumberFieldElem& operator*=(const NumberFieldElem& o);

  friend NumberFieldElem operator+(NumberFieldElem a, const NumberFieldElem& b) { return a += b; }
  friend NumberFieldElem operator-(NumberFieldElem a, const NumberFieldElem& b) { return a -= b; }
  friend NumberFieldElem operator*(NumberFieldElem a, const NumberFieldElem& b) { return a *= b; }
  friend NumberFieldElem operator-(const NumberFieldElem& a, const Int& c);
  friend NumberFieldElem operator+(const NumberFieldElem& a, const Int& c);
  friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);

 private:
  void require_same_field(const NumberFieldElem& o) const;
  std::shared_ptr<const IntPoly> minpoly_;
  std::vector<Rat> coords_;
};

/// Norm from K to Q: Res(m, G) / D^deg(m) where e = G(x)/D with G integral.
/// Norm(c) = c^deg for rational c; integral whenever e is an algebraic integer.
[[nodiscard]] Rat nf_norm(const NumberFieldElem& e);

/// Characteristic polynomial prod (x - sigma(e)) over the embeddings, ascending.
[[nodiscard]] std::vector<Rat> nf_charpoly(const NumberFieldElem& e);

/// det(x I - M) of a square integer matrix, by Berkowitz (division free).
[[nodiscard]] IntPoly int_charpoly(const std::vector<std::vector<Int>>& M);

}  // namespace ap5
