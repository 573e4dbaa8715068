#pragma once

#include "ap5/integer.hpp"

#include <map>
#include <string>
#include <vector>

namespace ap5 {

/// Sparse multivariate polynomial over Z in a fixed number of variables.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Int& c);
  /// The variable x_i.
  static MPoly var(std::size_t nvars, std::size_t i);

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] const std::map<Exponents, Int>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Int coeff(const Exponents& e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Int& s);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Int& s) { return a *= s; }
  friend MPoly operator*(const Int& s, MPoly a) { return a *= s; }
  friend MPoly operator-(MPoly a) { return a *= Int(-1); }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  [[nodiscard]] MPoly pow(unsigned e) const;

  /// Rewrites every x_i^k with k >= e as x_i^(k-e) * r until no such power is left.
  /// r must have degree < e in x_i.
  [[nodiscard]] MPoly reduce_power(std::size_t i, unsigned e, const MPoly& r) const;

  /// Value at an integer point.
  [[nodiscard]] Int eval(const std::vector<Int>& at) const;

  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Int& c);
  std::size_t nvars_;
  std::map<Exponents, Int> terms_;
};

}  // namespace ap5
