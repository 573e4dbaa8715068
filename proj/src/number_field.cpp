#include "ap5/number_field.hpp"

#include "ap5/errors.hpp"

#include <algorithm>
#include <utility>

namespace ap5 {

NumberFieldElem::NumberFieldElem(IntPoly minpoly, std::vector<Rat> coords)
    : minpoly_(std::make_shared<const IntPoly>(std::move(minpoly))), coords_(std::move(coords)) {
  if (!minpoly_->is_monic() || minpoly_->degree() < 1) {
    throw PreconditionError("NumberFieldElem: minimal polynomial must be monic of degree >= 1");
  }
  if (coords_.size() != static_cast<std::size_t>(minpoly_->degree())) {
    throw PreconditionError("NumberFieldElem: coordinate count differs from field degree");
  }
  for (Rat& c : coords_) c.canonicalize();
}

NumberFieldElem NumberFieldElem::from_int(const IntPoly& minpoly, const Int& c) {
  std::vector<Rat> v(static_cast<std::size_t>(minpoly.degree()), Rat(0));
  if (!v.empty()) v[0] = Rat(c);
  return {minpoly, std::move(v)};
}

NumberFieldElem NumberFieldElem::generator(const IntPoly& minpoly) {
  std::vector<Rat> v(static_cast<std::size_t>(minpoly.degree()), Rat(0));
  if (v.size() == 1) {
    v[0] = Rat(-minpoly.coeff(0));
  } else {
    v[1] = 1;
  }
  return {minpoly, std::move(v)};
}

bool NumberFieldElem::is_zero() const {
  for (const Rat& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool NumberFieldElem::has_integral_coords() const {
  for (const Rat& c : coords_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

void NumberFieldElem::require_same_field(const NumberFieldElem& o) const {
  if (minpoly_ != o.minpoly_ && !(*minpoly_ == *o.minpoly_)) {
    throw PreconditionError("NumberFieldElem: elements of different fields");
  }
}

NumberFieldElem& NumberFieldElem::operator+=(const NumberFieldElem& o) {
  require_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

NumberFieldElem& NumberFieldElem::operator-=(const NumberFieldElem& o) {
  require_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

NumberFieldElem& NumberFieldElem::operator*=(const NumberFieldElem& o) {
  require_same_field(o);
  const std::size_t d = coords_.size();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
  }
  // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
  const auto& m = minpoly_->coeffs();
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    const Rat top = prod[k];
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= top * Rat(m[j]);
    prod[k] = 0;
  }
  prod.resize(d);
  for (Rat& c : prod) c.canonicalize();
  coords_ = std::move(prod);
  return *this;
}

NumberFieldElem operator-(const NumberFieldElem& a, const Int& c) {
  NumberFieldElem r = a;
  r.coords_[0] -= Rat(c);
  return r;
}

NumberFieldElem operator+(const NumberFieldElem& a, const Int& c) {
  NumberFieldElem r = a;
  r.coords_[0] += Rat(c);
  return r;
}

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
  return a.minpoly() == b.minpoly() && a.coords_ == b.coords_;
}

Rat nf_norm(const NumberFieldElem& e) {
  Int den = 1;
  for (const Rat& c : e.coords()) den = lcm(den, c.get_den());
  std::vector<Int> num(e.coords().size());
  for (std::size_t k = 0; k < num.size(); ++k) {
    num[k] = e.coords()[k].get_num() * (den / e.coords()[k].get_den());
  }
  IntPoly g(std::move(num));
  if (g.is_zero()) return Rat(0);
  const auto deg = static_cast<unsigned long>(e.minpoly().degree());
  Rat out(resultant(e.minpoly(), g), ipow(den, deg));
  out.canonicalize();
  return out;
}

}  // namespace ap5

namespace ap5 {

IntPoly int_charpoly(const std::vector<std::vector<Int>>& M) {
  const std::size_t n = M.size();
  for (const auto& row : M) {
    if (row.size() != n) throw PreconditionError("int_charpoly: matrix is not square");
  }
  if (n == 0) return IntPoly({1});
  // c holds det(x I - A_r) for the leading r x r block, highest degree first.
  std::vector<Int> c{Int(1), Int(-M[0][0])};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Int> t{Int(1), Int(-M[r][r])};
    std::vector<Int> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = M[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < r; ++j) s += M[r][j] * v[j];
      t.push_back(-s);
      if (k + 1 == r) break;
      std::vector<Int> w(r, Int(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) w[i] += M[i][j] * v[j];
      }
      v = std::move(w);
    }
    std::vector<Int> next(r + 2, Int(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
        if (i - j < t.size()) next[i] += t[i - j] * c[j];
      }
    }
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

std::vector<Rat> nf_charpoly(const NumberFieldElem& e) {
  const std::size_t d = e.degree();
  Int den = 1;
  for (const Rat& c : e.coords()) den = lcm(den, c.get_den());
  std::vector<Int> g(d);
  for (std::size_t k = 0; k < d; ++k) g[k] = e.coords()[k].get_num() * (den / e.coords()[k].get_den());
  // Column j holds the coordinates of G * x^j.
  const auto& m = e.minpoly().coeffs();
  std::vector<std::vector<Int>> M(d, std::vector<Int>(d, Int(0)));
  std::vector<Int> col = g;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) M[i][j] = col[i];
    const Int top = col[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) col[i] = col[i - 1] - top * m[i];
    col[0] = -top * m[0];
  }
  // charpoly of e is den^-d * P(den x) for P the charpoly of G.
  const IntPoly P = int_charpoly(M);
  std::vector<Rat> out(d + 1);
  Int scale = 1;
  const Int dd = ipow(den, static_cast<unsigned long>(d));
  for (std::size_t k = 0; k <= d; ++k) {
    out[k] = Rat(P.coeff(k) * scale, dd);
    out[k].canonicalize();
    scale *= den;
  }
  return out;
}

}  // namespace ap5
