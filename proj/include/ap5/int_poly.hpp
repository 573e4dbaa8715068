#pragma once

#include "ap5/integer.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ap5 {

/// Polynomial with integer coefficients, stored in ascending degree.
/// Canonical form has no trailing zeros; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// c * x^k.
  static IntPoly monomial(const Int& c, std::size_t k);

  [[nodiscard]] const std::vector<Int>& coeffs() const noexcept { return c_; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  /// Leading coefficient; zero for the zero polynomial.
  [[nodiscard]] Int lc() const { return c_.empty() ? Int(0) : c_.back(); }
  [[nodiscard]] Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  [[nodiscard]] Int content() const;
  [[nodiscard]] IntPoly primitive_part() const;
  [[nodiscard]] Int eval(const Int& x) const;
  [[nodiscard]] IntPoly derivative() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Int& s);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator-(IntPoly a) { return a *= Int(-1); }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Exact division of every coefficient by d; throws if inexact.
  [[nodiscard]] IntPoly divexact(const Int& d) const;

  [[nodiscard]] std::string to_string(const char* var = "x") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b.
[[nodiscard]] IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Resultant of two nonzero integer polynomials by the subresultant PRS.
/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
/// Throws PreconditionError for a zero input or degree above 256.
[[nodiscard]] Int resultant(const IntPoly& f, const IntPoly& g);

/// Discriminant of a polynomial of degree >= 1.
[[nodiscard]] Int discriminant(const IntPoly& f);

}  // namespace ap5
